#pragma once

// Weil polynomials of K3 surfaces over F_q and zeta functions of Hilbert
// schemes of points S^[n], by symmetric-power plethysm on H*(S) and by the
// generating-function identity for point counts.
//
// Characteristic polynomials use the convention P(t) = prod (1 - alpha t),
// coefficients lowest degree first, P(0) = 1.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3kit/numeric.hpp"
#include "k3kit/polynomial.hpp"

namespace k3kit {

struct WeilPolynomialP2 {
  Integer q;
  IntPoly p;
};

struct WeilReport {
  bool degree_ok = false;
  bool constant_term_ok = false;
  bool functional_equation_ok = false;
  /// epsilon in c_{22-j} = epsilon c_j q^{22-2j}; 0 when the equation fails.
  int sign = 0;
  /// Advisory floating-point check that every reciprocal root has modulus q.
  bool root_moduli_checked = false;
  bool root_moduli_ok = false;
  double max_root_deviation = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Degree, constant term, functional equation and, when check_roots is set,
/// the Weil bound on root moduli (relative tolerance 1e-9).  Never throws on
/// bad input; failures are listed in the report.
WeilReport validate_weil(const WeilPolynomialP2& P, bool check_roots = true);

/// Throws ErrorKind::invalid_argument unless P(0) = 1 and q >= 2.
void require_normalized(const WeilPolynomialP2& P);

/// Product of integer polynomials kept as sorted (base, exponent) pairs so
/// that very large characteristic polynomials stay cheap to hold.
class FactoredPoly {
 public:
  FactoredPoly() = default;
  explicit FactoredPoly(IntPoly base, unsigned long exponent = 1);

  const std::vector<std::pair<IntPoly, unsigned long>>& factors() const noexcept { return factors_; }

  void multiply(const IntPoly& base, unsigned long exponent = 1);
  void multiply(const FactoredPoly& other);

  long degree() const;
  IntPoly expand() const;
  /// p_1..p_count of the reciprocal roots (traces of powers of Frobenius).
  IntVector power_sums(std::size_t count) const;

  bool operator==(const FactoredPoly& rhs) const { return factors_ == rhs.factors_; }

 private:
  std::vector<std::pair<IntPoly, unsigned long>> factors_;
};

std::string to_string(const FactoredPoly& p, const std::string& var = "t");

/// Z(X, t) = prod_i P_i(t)^{(-1)^{i+1}}; only even degrees occur here.
struct ZetaFunction {
  Integer q;
  std::map<int, FactoredPoly> factors;

  int top_degree() const { return factors.empty() ? 0 : factors.rbegin()->first; }
  /// Betti numbers b_0..b_top, odd entries zero.
  std::vector<Integer> betti() const;
  /// #X(F_{q^m}) = sum_i (-1)^i Tr(F^m | H^i).
  Integer point_count(unsigned long m) const;
  /// "1/((1 - t)(...))" style rendering.
  std::string to_string(bool expand = false) const;
};

/// Degree-to-polynomial map of a graded Frobenius module.
using GradedCharPoly = std::map<int, IntPoly>;

/// #S(F_{q^m}) = 1 + q^{2m} + sum_j alpha_j^m.
Integer point_count_surface(const WeilPolynomialP2& P, unsigned long m);

/// #S^(m)(F_{q^r}) from m z_m = sum_k N_{rk} z_{m-k}.
Integer sym_product_count(const WeilPolynomialP2& P, unsigned long m, unsigned long r);

enum class HilbMethod {
  goettsche,      // coefficient of t^n in prod_m Z_{S/F_{q^r}}(q^{r(m-1)} t^m)
  decomposition,  // sum over partitions of q^{r(n-l)} prod_i #S^(a_i)
  literal,        // sum over partitions of q^{r(n-l)} #S^(l), as printed; wrong for n >= 3
};

HilbMethod parse_hilb_method(const std::string& name);
const char* to_string(HilbMethod method);

Integer hilb_point_count(const WeilPolynomialP2& P, unsigned long n, unsigned long r,
                         HilbMethod method = HilbMethod::goettsche);

/// Characteristic polynomials of Frobenius on Sym^m of a graded module given
/// degree by degree.
GradedCharPoly sym_power_charpoly(const GradedCharPoly& graded, unsigned m);
/// The module H^0 + H^2 + H^4 of a K3 with char polys 1 - t, P, 1 - q^2 t.
GradedCharPoly sym_power_charpoly(const WeilPolynomialP2& P, unsigned m);

struct HilbOptions {
  unsigned max_n = 4;
  /// Largest number of power sums of P2 the generic path may request.
  std::size_t power_sum_ceiling = 10000;
};

/// Z(S^[n], t).  When P2 splits into linear factors over Z the eigenvalues are
/// tracked directly; otherwise each block is rebuilt from power sums.
/// Throws ErrorKind::out_of_bounds for n outside [1, max_n] or when the
/// generic path would exceed the power-sum ceiling.
ZetaFunction hilb_zeta(const WeilPolynomialP2& P, unsigned n, const HilbOptions& options = {});

/// Zeta function of any moduli space of the given even dimension on S.
/// Throws ErrorKind::parity for odd dim.
ZetaFunction moduli_zeta(const WeilPolynomialP2& P, long dim, const HilbOptions& options = {});

/// All partitions of n as multiplicity vectors a[1..n] (a[0] unused).
std::vector<std::vector<unsigned>> partitions_by_multiplicity(unsigned n);

/// Whether a[d] and b[D-d] satisfy Poincare duality with weight w:
/// the reciprocal roots of b are q^w divided by those of a.
bool poincare_dual(const IntPoly& a, const IntPoly& b, const Integer& q, unsigned long w);
/// The same for factored polynomials without expanding large products.  Bases
/// are dualized one at a time; when the two sides are grouped differently the
/// products are compared at fixed points modulo the prime 2^61 - 1.
bool poincare_dual(const FactoredPoly& a, const FactoredPoly& b, const Integer& q, unsigned long w);

}  // namespace k3kit
