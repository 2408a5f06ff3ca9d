#pragma once

// The algebraic Mukai lattice N(S) = Z + NS(S) + Z.omega of a K3 surface
// descriptor.  Vectors are stored as (r, c1, s) with c1 in the NS basis.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3kit/lattice.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/numeric.hpp"
#include "k3kit/polynomial.hpp"

namespace k3kit {

struct MukaiVector {
  Integer r;
  IntVector c1;
  Integer s;

  /// Coordinates (r, c1..., s) in the N(S) basis.
  IntVector coords() const;
  static MukaiVector from_coords(const IntVector& coords);

  MukaiVector operator-() const;
  bool is_zero() const;
  bool operator==(const MukaiVector&) const = default;
};

std::string to_string(const MukaiVector& v);

class SurfaceDescriptor {
 public:
  SurfaceDescriptor() = default;
  explicit SurfaceDescriptor(IntMatrix ns_gram) : ns_gram(std::move(ns_gram)) {}

  IntMatrix ns_gram;
  std::optional<Integer> q;
  std::optional<IntMatrix> geo_ns_gram;
  /// rho_bar x rho; column j is the image of the j-th NS(S) basis vector.
  std::optional<IntMatrix> embedding;
  /// rho_bar x rho_bar, acting on coordinate columns of NS(S-bar).
  std::optional<IntMatrix> frobenius_ns;
  std::optional<IntVector> ample;
  std::optional<IntPoly> weil_p2;

  std::size_t rho() const noexcept { return ns_gram.rows(); }
  std::size_t geometric_rho() const noexcept {
    return geo_ns_gram ? geo_ns_gram->rows() : ns_gram.rows();
  }
  const IntMatrix& geometric_gram() const { return geo_ns_gram ? *geo_ns_gram : ns_gram; }

  /// Throws on the first violated descriptor invariant: symmetric even NS
  /// Gram of signature (1, rho-1), isometric primitive embedding, Frobenius
  /// preserving the geometric Gram, ample class with positive square.
  void validate() const;

  /// Image of an NS(S) class in NS(S-bar).  Throws ErrorKind::missing_data
  /// when the ranks differ and no embedding was given.
  IntVector embed_class(const IntVector& c1) const;
  MukaiVector embed(const MukaiVector& v) const;

  /// The descriptor of S-bar: geometric Gram, identity embedding, embedded
  /// ample class, same q, Frobenius and Weil polynomial.
  SurfaceDescriptor geometric() const;

  /// Mukai Gram [[0,0,-1],[0,NS,0],[-1,0,0]] of N(S).
  IntMatrix mukai_gram() const;
  IntegerLattice mukai_lattice() const;

  /// Frobenius extended to N(S-bar) as diag(1, F, 1); identity when absent.
  IntMatrix mukai_frobenius() const;
};

Integer ns_pairing(const SurfaceDescriptor& S, const IntVector& a, const IntVector& b);

Integer mukai_pairing(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& w);
inline Integer mukai_square(const SurfaceDescriptor& S, const MukaiVector& v) {
  return mukai_pairing(S, v, v);
}

/// chi(F, G) = -(v(F), v(G)).
Integer euler_pairing(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& w);

MukaiVector mukai_vector_of_sheaf(const Integer& rank, const IntVector& c1, const Integer& chi);

using EffectivityOracle = std::function<bool(const IntVector&)>;

struct Effectivity {
  bool effective = false;
  /// The answer came from the c1.H > 0 stand-in rather than an oracle.
  bool via_ample_proxy = false;
};

/// r > 0, or r = 0 with c1 effective, or r = c1 = 0 with s > 0.  Throws
/// ErrorKind::missing_data when r = 0, c1 != 0 and neither an oracle nor an
/// ample class is available.
Effectivity is_effective(const SurfaceDescriptor& S, const MukaiVector& v,
                         const EffectivityOracle& oracle = {});

/// gcd of (r, embedded c1, s) is 1.
bool is_geometrically_primitive(const SurfaceDescriptor& S, const MukaiVector& v);

struct ModuliDimension {
  Integer dimension;
  std::vector<std::string> warnings;
};

/// v^2 + 2; throws ErrorKind::empty_moduli for v^2 < 0.  Effectivity and
/// primitivity problems are reported as warnings.
ModuliDimension moduli_dimension(const SurfaceDescriptor& S, const MukaiVector& v);

struct HilbertPolynomial {
  RatPoly chi;
  RatPoly reduced;
};

/// chi(t) = (r + s) + (c1.H) t + r H^2/2 t^2.  Needs r > 0 and H^2 > 0.
HilbertPolynomial hilbert_polynomial(const SurfaceDescriptor& S, const MukaiVector& v,
                                     const IntVector& H);

/// Lexicographic comparison from the top coefficient down: -1, 0 or 1.
int compare_reduced(const RatPoly& a, const RatPoly& b);

bool on_wall(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& sub,
             const IntVector& H);

/// gcd(r, s, c1.b for b in the NS basis) = 1, i.e. some u has (u, v) = 1.
bool is_fine(const SurfaceDescriptor& S, const MukaiVector& v);

/// v.exp(h) = (r, c1 + r h, s + c1.h + r h^2/2); ErrorKind::parity when r h^2 is odd.
MukaiVector twist_by_exp(const SurfaceDescriptor& S, const MukaiVector& v, const IntVector& h);

/// Matrix of v -> v.exp(h) on N(S) coordinates (rational entries in general).
RatMatrix twist_matrix(const SurfaceDescriptor& S, const IntVector& h);

/// Formal even-degree class x_0 + x_1 + ... + x_d, x_k in degree 2k.
template <class T>
struct GradedClass {
  std::vector<T> components;

  std::size_t top_degree() const { return components.empty() ? 0 : components.size() - 1; }
  T operator[](std::size_t k) const { return k < components.size() ? components[k] : T(Rational(0)); }
};

namespace detail {
inline Rational factorial_q(unsigned long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}
inline void check_top_degree(std::size_t top_degree) {
  if (top_degree > 10) throw Error(ErrorKind::out_of_bounds, "Chern expansions are supported through degree 10");
}
}  // namespace detail

/// Total Chern class from the Chern character by Newton's identities between
/// the power sums k! ch_k and the elementary symmetric functions c_k.
/// T must be constructible from Rational and closed under + - *.
template <class T>
GradedClass<T> ch_to_chern(const GradedClass<T>& ch, std::size_t top_degree) {
  detail::check_top_degree(top_degree);
  std::vector<T> p(top_degree + 1, T(Rational(0)));
  for (std::size_t k = 1; k <= top_degree; ++k) p[k] = ch[k] * T(detail::factorial_q(k));
  std::vector<T> c(top_degree + 1, T(Rational(0)));
  c[0] = T(Rational(1));
  for (std::size_t k = 1; k <= top_degree; ++k) {
    T acc(Rational(0));
    for (std::size_t i = 1; i <= k; ++i) {
      const T term = c[k - i] * p[i];
      if (i % 2 == 1) acc = acc + term;
      else acc = acc - term;
    }
    c[k] = acc * T(make_rational(1, Integer(static_cast<unsigned long>(k))));
  }
  return GradedClass<T>{std::move(c)};
}

/// Inverse of ch_to_chern; the rank is not recoverable from c and is passed in.
template <class T>
GradedClass<T> chern_to_ch(const GradedClass<T>& c, const T& rank, std::size_t top_degree) {
  detail::check_top_degree(top_degree);
  std::vector<T> p(top_degree + 1, T(Rational(0)));
  for (std::size_t k = 1; k <= top_degree; ++k) {
    T acc = c[k] * T(Rational(static_cast<long>(k)));
    for (std::size_t i = 1; i < k; ++i) {
      const T term = c[k - i] * p[i];
      if (i % 2 == 1) acc = acc - term;
      else acc = acc + term;
    }
    if (k % 2 == 1) p[k] = acc;
    else p[k] = T(Rational(0)) - acc;
  }
  std::vector<T> ch(top_degree + 1, T(Rational(0)));
  ch[0] = rank;
  for (std::size_t k = 1; k <= top_degree; ++k) ch[k] = p[k] * T(Rational(1 / detail::factorial_q(k)));
  return GradedClass<T>{std::move(ch)};
}

}  // namespace k3kit
