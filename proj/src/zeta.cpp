#include "k3kit/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <sstream>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace k3kit {

void require_normalized(const WeilPolynomialP2& P) {
  if (P.q < 2) throw Error(ErrorKind::invalid_argument, "q must be at least 2");
  if (P.p[0] != 1) {
    throw Error(ErrorKind::invalid_argument, "Weil polynomial must have constant term 1 (got " +
                                                 P.p[0].get_str() + ")");
  }
}

WeilReport validate_weil(const WeilPolynomialP2& P, bool check_roots) {
  WeilReport rep;
  const auto& c = P.p;
  rep.degree_ok = c.degree() == 22;
  if (!rep.degree_ok) rep.failures.push_back("degree is " + std::to_string(c.degree()) + ", expected 22");
  rep.constant_term_ok = c[0] == 1;
  if (!rep.constant_term_ok) rep.failures.push_back("constant term is " + c[0].get_str() + ", expected 1");
  if (P.q < 2) rep.failures.push_back("q must be at least 2");

  if (rep.degree_ok && P.q >= 2) {
    const Integer q22 = pow(P.q, 22);
    int eps = 0;
    if (c[22] == q22) eps = 1;
    else if (c[22] == -q22) eps = -1;
    bool fe = eps != 0;
    for (unsigned j = 0; fe && j <= 11; ++j) {
      fe = c[22 - j] == eps * c[j] * pow(P.q, 22 - 2 * j);
    }
    rep.functional_equation_ok = fe;
    rep.sign = fe ? eps : 0;
    if (!fe) rep.failures.push_back("functional equation q^22 t^22 P(1/(q^2 t)) = +-P(t) fails");
  }

  if (check_roots && c.degree() >= 1 && P.q >= 2) {
    // roots of P are the inverses of the Frobenius eigenvalues
    const RatPoly sf = squarefree_part(to_rational(c));
    rep.root_moduli_checked = true;
    rep.root_moduli_ok = true;
    if (sf.degree() >= 1) {
      // substitute t = x/q exactly so the expected roots sit on |x| = 1
      std::vector<Rational> scaled(sf.degree() + 1);
      Rational qpow = 1, biggest = 0;
      for (long i = 0; i <= sf.degree(); ++i) {
        scaled[i] = sf[i] / qpow;
        qpow *= P.q;
        biggest = std::max(biggest, Rational(abs(scaled[i])));
      }
      Eigen::VectorXd coeffs(sf.degree() + 1);
      std::vector<long double> exact(sf.degree() + 1);
      for (long i = 0; i <= sf.degree(); ++i) {
        const Rational c = scaled[i] / biggest;
        coeffs[i] = c.get_d();
        exact[i] = static_cast<long double>(c.get_num().get_d()) / static_cast<long double>(c.get_den().get_d());
      }
      Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
      for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
        std::complex<long double> x(solver.roots()[i].real(), solver.roots()[i].imag());
        for (int step = 0; step < 3; ++step) {  // Newton polish
          std::complex<long double> f = 0, df = 0;
          for (auto it = exact.rbegin(); it != exact.rend(); ++it) {
            df = df * x + f;
            f = f * x + *it;
          }
          if (std::abs(df) == 0) break;
          x -= f / df;
        }
        const double dev = static_cast<double>(std::abs(std::abs(x) - 1.0L));
        rep.max_root_deviation = std::max(rep.max_root_deviation, dev);
      }
      rep.root_moduli_ok = rep.max_root_deviation <= 1e-9;
    }
    if (!rep.root_moduli_ok) rep.failures.push_back("some Frobenius eigenvalue does not have modulus q");
  }
  return rep;
}

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = 0; i <= a.degree(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool is_one(const IntPoly& p) { return p.degree() == 0 && p[0] == 1; }

}  // namespace

FactoredPoly::FactoredPoly(IntPoly base, unsigned long exponent) { multiply(base, exponent); }

void FactoredPoly::multiply(const IntPoly& base, unsigned long exponent) {
  if (exponent == 0 || is_one(base)) return;
  if (base.is_zero()) throw Error(ErrorKind::invalid_argument, "zero factor");
  auto it = std::lower_bound(factors_.begin(), factors_.end(), base,
                             [](const auto& f, const IntPoly& b) { return poly_less(f.first, b); });
  if (it != factors_.end() && it->first == base) it->second += exponent;
  else factors_.insert(it, {base, exponent});
}

void FactoredPoly::multiply(const FactoredPoly& other) {
  for (const auto& [b, e] : other.factors_) multiply(b, e);
}

long FactoredPoly::degree() const {
  long d = 0;
  for (const auto& [b, e] : factors_) d += b.degree() * static_cast<long>(e);
  return d;
}

IntPoly FactoredPoly::expand() const {
  IntPoly out = IntPoly::constant(1);
  for (const auto& [b, e] : factors_) out = out * b.pow(e);
  return out;
}

IntVector FactoredPoly::power_sums(std::size_t count) const {
  IntVector out(count, Integer(0));
  for (const auto& [b, e] : factors_) {
    const IntVector s = k3kit::power_sums(b, count);
    for (std::size_t i = 0; i < count; ++i) out[i] += s[i] * e;
  }
  return out;
}

std::string to_string(const FactoredPoly& p, const std::string& var) {
  if (p.factors().empty()) return "1";
  std::string out;
  for (const auto& [b, e] : p.factors()) {
    out += "(" + to_string(b, var, true) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<Integer> ZetaFunction::betti() const {
  std::vector<Integer> b(static_cast<std::size_t>(top_degree()) + 1, Integer(0));
  for (const auto& [d, f] : factors) b[static_cast<std::size_t>(d)] = f.degree();
  return b;
}

Integer ZetaFunction::point_count(unsigned long m) const {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "point counts need m >= 1");
  Integer total = 0;
  for (const auto& [d, f] : factors) {
    const Integer tr = f.power_sums(m)[m - 1];
    if (d % 2 == 0) total += tr;
    else total -= tr;
  }
  return total;
}

std::string ZetaFunction::to_string(bool expand) const {
  std::string num, den;
  for (const auto& [d, f] : factors) {
    std::string piece = expand ? "(" + k3kit::to_string(f.expand(), "t", true) + ")" : k3kit::to_string(f);
    (d % 2 == 0 ? den : num) += piece;
  }
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/(" + den + ")";
}

Integer point_count_surface(const WeilPolynomialP2& P, unsigned long m) {
  require_normalized(P);
  if (m == 0) throw Error(ErrorKind::invalid_argument, "point counts need m >= 1");
  return 1 + pow(P.q, 2 * m) + power_sums(P.p, m)[m - 1];
}

namespace {

// z_0..z_m with z_j = #S^(j)(F_{q^r}).
IntVector sym_product_counts(const WeilPolynomialP2& P, unsigned long m, unsigned long r) {
  require_normalized(P);
  if (r == 0) throw Error(ErrorKind::invalid_argument, "r must be positive");
  const IntVector sums = power_sums(P.p, r * m);
  IntVector N(m + 1);
  for (unsigned long k = 1; k <= m; ++k) N[k] = 1 + pow(P.q, 2 * r * k) + sums[r * k - 1];
  IntVector z(m + 1, Integer(0));
  z[0] = 1;
  for (unsigned long j = 1; j <= m; ++j) {
    Integer acc = 0;
    for (unsigned long k = 1; k <= j; ++k) acc += N[k] * z[j - k];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), j)) {
      throw Error(ErrorKind::non_integral, "symmetric-product count is not an integer");
    }
    mpz_divexact_ui(z[j].get_mpz_t(), acc.get_mpz_t(), j);
  }
  return z;
}

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& a,
                    std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(a);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    ++a[part];
    partitions_rec(remaining - part, part, a, out);
    --a[part];
  }
}

unsigned length_of(const std::vector<unsigned>& a) {
  unsigned l = 0;
  for (std::size_t i = 1; i < a.size(); ++i) l += a[i];
  return l;
}

}  // namespace

std::vector<std::vector<unsigned>> partitions_by_multiplicity(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(n + 1, 0);
  partitions_rec(n, n, a, out);
  return out;
}

Integer sym_product_count(const WeilPolynomialP2& P, unsigned long m, unsigned long r) {
  return sym_product_counts(P, m, r)[m];
}

HilbMethod parse_hilb_method(const std::string& name) {
  if (name == "goettsche") return HilbMethod::goettsche;
  if (name == "decomposition") return HilbMethod::decomposition;
  if (name == "literal") return HilbMethod::literal;
  throw Error(ErrorKind::parse, "unknown method '" + name + "' (goettsche, decomposition, literal)");
}

const char* to_string(HilbMethod method) {
  switch (method) {
    case HilbMethod::goettsche: return "goettsche";
    case HilbMethod::decomposition: return "decomposition";
    case HilbMethod::literal: return "literal";
  }
  return "?";
}

Integer hilb_point_count(const WeilPolynomialP2& P, unsigned long n, unsigned long r,
                         HilbMethod method) {
  const IntVector z = sym_product_counts(P, n, r);
  const Integer Q = pow(P.q, r);
  if (method == HilbMethod::goettsche) {
    IntVector series(n + 1, Integer(0));
    series[0] = 1;
    for (unsigned long m = 1; m <= n; ++m) {
      const Integer scale = pow(Q, m - 1);
      IntVector next(n + 1, Integer(0));
      Integer c = 1;  // scale^j
      for (unsigned long j = 0; j * m <= n; ++j, c *= scale) {
        const Integer term = z[j] * c;
        for (unsigned long i = 0; i + j * m <= n; ++i) next[i + j * m] += series[i] * term;
      }
      series = std::move(next);
    }
    return series[n];
  }
  Integer total = 0;
  for (const auto& a : partitions_by_multiplicity(static_cast<unsigned>(n))) {
    const unsigned l = length_of(a);
    Integer term = pow(Q, n - l);
    if (method == HilbMethod::literal) {
      term *= z[l];
    } else {
      for (std::size_t i = 1; i < a.size(); ++i) term *= z[a[i]];
    }
    total += term;
  }
  return total;
}

namespace {

// Power sums p_1..p_count of Sym^y V from those of V (which must reach count*y),
// through the cycle index of the symmetric group.
IntVector sym_power_sums(const IntVector& base, unsigned y, std::size_t count) {
  if (y == 0) return IntVector(count, Integer(1));
  if (base.size() < count * y) throw std::logic_error("not enough base power sums");
  std::vector<std::pair<std::vector<unsigned>, Integer>> terms;  // (multiplicities, y!/z_lambda)
  Integer yfact;
  mpz_fac_ui(yfact.get_mpz_t(), y);
  for (const auto& a : partitions_by_multiplicity(y)) {
    Integer z = 1;
    for (unsigned i = 1; i <= y; ++i) {
      if (a[i] == 0) continue;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), a[i]);
      z *= pow(Integer(i), a[i]) * f;
    }
    terms.emplace_back(a, yfact / z);
  }
  IntVector out(count);
  Integer acc, prod;
  for (std::size_t k = 1; k <= count; ++k) {
    acc = 0;
    for (const auto& [a, w] : terms) {
      prod = w;
      for (unsigned i = 1; i <= y; ++i)
        for (unsigned e = 0; e < a[i]; ++e) prod *= base[k * i - 1];
      acc += prod;
    }
    mpz_divexact(out[k - 1].get_mpz_t(), acc.get_mpz_t(), yfact.get_mpz_t());
  }
  return out;
}

Integer sym_dimension(const Integer& d, unsigned y) {
  // C(d + y - 1, y)
  Integer out;
  const Integer top = d + y - 1;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), y);
  return out;
}

std::size_t checked_size(const Integer& x, const char* what) {
  if (!x.fits_ulong_p()) throw Error(ErrorKind::out_of_bounds, std::string(what) + " is too large");
  return x.get_ui();
}

// Tensor product of Sym^{y_i} of graded pieces, from base power sums.
struct Block {
  std::vector<std::pair<const IntVector*, unsigned>> parts;  // (power sums of V, y)
  Integer dimension = 1;
};

IntPoly block_charpoly(const Block& b) {
  const std::size_t D = checked_size(b.dimension, "block dimension");
  IntVector sums(D, Integer(1));
  for (const auto& [base, y] : b.parts) {
    const IntVector s = sym_power_sums(*base, y, D);
    for (std::size_t k = 0; k < D; ++k) sums[k] *= s[k];
  }
  return from_power_sums(sums, D);
}

}  // namespace

GradedCharPoly sym_power_charpoly(const GradedCharPoly& graded, unsigned m) {
  std::vector<int> degrees;
  std::vector<Integer> dims;
  for (const auto& [d, p] : graded) {
    if (p[0] != 1) throw Error(ErrorKind::invalid_argument, "characteristic polynomials need P(0) = 1");
    if (p.degree() < 1) continue;
    degrees.push_back(d);
    dims.push_back(p.degree());
  }
  const std::size_t k = degrees.size();

  // every distribution m = sum m_i over the graded pieces
  std::vector<std::vector<unsigned>> splits;
  std::vector<unsigned> cur(k, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 >= k) {
      if (k == 0) {
        if (left == 0) splits.push_back(cur);
        return;
      }
      cur[i] = left;
      splits.push_back(cur);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, m);

  std::size_t needed = 0;
  for (const auto& sp : splits) {
    Integer D = 1;
    for (std::size_t i = 0; i < k; ++i) D *= sym_dimension(dims[i], sp[i]);
    for (std::size_t i = 0; i < k; ++i) needed = std::max(needed, checked_size(D * std::max(1u, sp[i]), "power-sum count"));
  }
  std::vector<IntVector> base(k);
  std::size_t i = 0;
  for (const auto& [d, p] : graded) {
    if (p.degree() < 1) continue;
    base[i++] = power_sums(p, needed);
  }

  GradedCharPoly out;
  for (const auto& sp : splits) {
    Block b;
    int degree = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (sp[j] == 0) continue;
      b.parts.emplace_back(&base[j], sp[j]);
      b.dimension *= sym_dimension(dims[j], sp[j]);
      degree += degrees[j] * static_cast<int>(sp[j]);
    }
    const IntPoly piece = block_charpoly(b);
    auto it = out.find(degree);
    if (it == out.end()) out.emplace(degree, piece);
    else it->second = it->second * piece;
  }
  return out;
}

GradedCharPoly sym_power_charpoly(const WeilPolynomialP2& P, unsigned m) {
  require_normalized(P);
  GradedCharPoly graded{{0, IntPoly::one_minus(1)}, {2, P.p}, {4, IntPoly::one_minus(P.q * P.q)}};
  return sym_power_charpoly(graded, m);
}

namespace {

using EigenMultiset = std::map<Integer, Integer>;

// Reciprocal roots with multiplicity when P splits into linear factors over Z.
std::optional<EigenMultiset> split_eigenvalues(const IntPoly& P, const Integer& q) {
  std::vector<Integer> c = P.coeffs();
  EigenMultiset out;
  std::vector<Integer> candidates{q, -q};
  const Integer limit = std::min<Integer>(q * q, Integer(1000));
  for (Integer a = 1; a <= limit; ++a) {
    if (a == q) continue;
    candidates.push_back(a);
    candidates.push_back(-a);
  }
  auto try_divide = [&](const Integer& a) {
    // P = (1 - a t) Q with Q_j = c_j + a Q_{j-1}
    std::vector<Integer> Qc(c.size() - 1);
    Integer prev = 0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
      prev = c[j] + a * prev;
      Qc[j] = prev;
    }
    if (c.back() + a * prev != 0) return false;
    c = std::move(Qc);
    return true;
  };
  for (const auto& a : candidates) {
    while (c.size() > 1 && c.back() % a == 0 && try_divide(a)) out[a] += 1;
    if (c.size() <= 1) break;
  }
  if (c.size() != 1) return std::nullopt;
  return out;
}

EigenMultiset sym_eigen(const EigenMultiset& v, unsigned y) {
  std::vector<std::pair<Integer, Integer>> classes(v.begin(), v.end());
  EigenMultiset out;
  std::function<void(std::size_t, unsigned, Integer, Integer)> rec =
      [&](std::size_t i, unsigned left, Integer value, Integer count) {
        if (i == classes.size()) {
          if (left == 0) out[value] += count;
          return;
        }
        Integer power = 1;
        for (unsigned x = 0; x <= left; ++x) {
          rec(i + 1, left - x, value * power, count * sym_dimension(classes[i].second, x));
          power *= classes[i].first;
        }
      };
  rec(0, y, Integer(1), Integer(1));
  return out;
}

EigenMultiset tensor(const EigenMultiset& a, const EigenMultiset& b) {
  EigenMultiset out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out[x * y] += m * n;
  return out;
}

FactoredPoly from_eigen(const EigenMultiset& e) {
  FactoredPoly out;
  for (const auto& [x, m] : e) out.multiply(IntPoly::one_minus(x), checked_size(m, "multiplicity"));
  return out;
}

FactoredPoly scale_eigenvalues(const FactoredPoly& f, const Integer& c) {
  if (c == 1) return f;
  FactoredPoly out;
  for (const auto& [b, e] : f.factors()) out.multiply(b.substitute_scaled(c), e);
  return out;
}

struct HilbTerm {
  int degree;
  unsigned long twist;    // eigenvalues scaled by q^twist
  std::vector<unsigned> ys;  // sorted nonzero Sym exponents on H^2
};

void enumerate_terms(unsigned n, std::vector<HilbTerm>& out) {
  for (const auto& a : partitions_by_multiplicity(n)) {
    const unsigned l = length_of(a);
    std::vector<std::size_t> parts;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] > 0) parts.push_back(i);
    // choose (y_i, z_i) with y_i + z_i <= a_i for every part size i
    std::vector<unsigned> y(parts.size()), z(parts.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == parts.size()) {
        HilbTerm t;
        unsigned sy = 0, sz = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
          sy += y[j];
          sz += z[j];
          if (y[j] > 0) t.ys.push_back(y[j]);
        }
        std::sort(t.ys.begin(), t.ys.end());
        t.degree = static_cast<int>(2 * (n - l) + 2 * sy + 4 * sz);
        t.twist = (n - l) + 2 * sz;
        out.push_back(std::move(t));
        return;
      }
      const unsigned ai = a[parts[k]];
      for (unsigned yy = 0; yy <= ai; ++yy)
        for (unsigned zz = 0; yy + zz <= ai; ++zz) {
          y[k] = yy;
          z[k] = zz;
          rec(k + 1);
        }
    };
    rec(0);
  }
}

}  // namespace

ZetaFunction hilb_zeta(const WeilPolynomialP2& P, unsigned n, const HilbOptions& options) {
  require_normalized(P);
  if (n < 1 || n > options.max_n) {
    throw Error(ErrorKind::out_of_bounds,
                "n = " + std::to_string(n) + " outside [1, " + std::to_string(options.max_n) + "]");
  }
  std::vector<HilbTerm> terms;
  enumerate_terms(n, terms);

  std::map<std::vector<unsigned>, FactoredPoly> blocks;
  const auto eigen = split_eigenvalues(P.p, P.q);
  if (eigen) {
    for (const auto& t : terms) {
      if (blocks.count(t.ys)) continue;
      EigenMultiset e{{Integer(1), Integer(1)}};
      for (unsigned y : t.ys) e = tensor(e, sym_eigen(*eigen, y));
      blocks.emplace(t.ys, from_eigen(e));
    }
  } else {
    const Integer b2 = P.p.degree();
    std::size_t needed = 0;
    for (const auto& t : terms) {
      Integer D = 1;
      for (unsigned y : t.ys) D *= sym_dimension(b2, y);
      const unsigned ymax = t.ys.empty() ? 1 : t.ys.back();
      needed = std::max(needed, checked_size(D * ymax, "power-sum count"));
    }
    if (needed > options.power_sum_ceiling) {
      throw Error(ErrorKind::out_of_bounds,
                  "n = " + std::to_string(n) + " needs " + std::to_string(needed) +
                      " power sums of P2 (ceiling " + std::to_string(options.power_sum_ceiling) +
                      "); P2 does not split over Z, so the eigenvalue shortcut is unavailable");
    }
    const IntVector base = power_sums(P.p, needed);
    for (const auto& t : terms) {
      if (blocks.count(t.ys)) continue;
      Block b;
      for (unsigned y : t.ys) {
        b.parts.emplace_back(&base, y);
        b.dimension *= sym_dimension(b2, y);
      }
      blocks.emplace(t.ys, FactoredPoly(block_charpoly(b)));
    }
  }

  ZetaFunction Z;
  Z.q = P.q;
  for (const auto& t : terms) {
    Z.factors[t.degree].multiply(scale_eigenvalues(blocks.at(t.ys), pow(P.q, t.twist)));
  }
  return Z;
}

ZetaFunction moduli_zeta(const WeilPolynomialP2& P, long dim, const HilbOptions& options) {
  if (dim % 2 != 0) throw Error(ErrorKind::parity, "moduli spaces of sheaves on a K3 have even dimension");
  if (dim < 2) throw Error(ErrorKind::invalid_argument, "dimension must be at least 2");
  return hilb_zeta(P, static_cast<unsigned>(dim / 2), options);
}

namespace {

// f(x) mod m, evaluated factor by factor.
Integer eval_mod(const FactoredPoly& f, const Integer& x, const Integer& m) {
  Integer out = 1;
  for (const auto& [base, e] : f.factors()) {
    Integer v = 0;
    for (long j = base.degree(); j >= 0; --j) v = (v * x + base[static_cast<std::size_t>(j)]) % m;
    Integer p;
    mpz_powm_ui(p.get_mpz_t(), v.get_mpz_t(), e, m.get_mpz_t());
    out = out * p % m;
  }
  return out < 0 ? out + m : out;
}

// The polynomial whose reciprocal roots are qw / alpha for those alpha of f,
// evaluated at x mod m: rev(base)(qw x) / lead(base), factor by factor.
std::optional<Integer> eval_dual_mod(const FactoredPoly& f, const Integer& qw, const Integer& x, const Integer& m) {
  Integer out = 1;
  const Integer y = qw * x % m;
  for (const auto& [base, e] : f.factors()) {
    const long D = base.degree();
    Integer v = 0;
    for (long j = 0; j <= D; ++j) v = (v * y + base[static_cast<std::size_t>(j)]) % m;
    Integer inv, lead = base[static_cast<std::size_t>(D)] % m;
    if (lead < 0) lead += m;
    if (mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    v = v * inv % m;
    Integer p;
    if (v < 0) v += m;
    mpz_powm_ui(p.get_mpz_t(), v.get_mpz_t(), e, m.get_mpz_t());
    out = out * p % m;
  }
  return out;
}

}  // namespace

bool poincare_dual(const FactoredPoly& a, const FactoredPoly& b, const Integer& q, unsigned long w) {
  if (a.degree() != b.degree()) return false;
  const Integer qw = pow(q, w);
  FactoredPoly dual;
  bool exact = true;
  for (const auto& [base, e] : a.factors()) {
    const long D = base.degree();
    const Integer lead = base[static_cast<std::size_t>(D)];
    IntVector c(static_cast<std::size_t>(D) + 1);
    Integer scale = 1;
    for (long j = 0; j <= D && exact; ++j, scale *= qw) {
      const Integer num = base[static_cast<std::size_t>(D - j)] * scale;
      if (num % lead != 0) exact = false;
      else c[static_cast<std::size_t>(j)] = num / lead;
    }
    if (!exact) break;
    dual.multiply(IntPoly(c), e);
  }
  if (exact && dual == b) return true;
  if (a.degree() <= 400) return poincare_dual(a.expand(), b.expand(), q, w);
  // The two sides may group the same product differently; compare values
  // at fixed points modulo the prime 2^61 - 1.
  const Integer m = (Integer(1) << 61) - 1;
  for (long x = 2; x < 10; ++x) {
    const auto d = eval_dual_mod(a, qw, x, m);
    if (!d) return poincare_dual(a.expand(), b.expand(), q, w);
    if (*d != eval_mod(b, x, m)) return false;
  }
  return true;
}

bool poincare_dual(const IntPoly& a, const IntPoly& b, const Integer& q, unsigned long w) {
  const long D = a.degree();
  if (D != b.degree() || D < 0) return false;
  const Integer lead = a[D];
  if (lead == 0) return false;
  const Integer qw = pow(q, w);
  Integer scale = 1;
  for (long j = 0; j <= D; ++j, scale *= qw) {
    if (b[j] * lead != a[D - j] * scale) return false;
  }
  return true;
}

}  // namespace k3kit
