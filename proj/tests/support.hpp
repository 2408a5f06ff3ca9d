#pragma once

// Shared test fixtures and brute-force oracles.  Nothing here calls the
// library routine it is used to check.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "k3kit/isometry.hpp"
#include "k3kit/lattice.hpp"
#include "k3kit/mukai.hpp"
#include "k3kit/padic.hpp"
#include "k3kit/zeta.hpp"

namespace k3test {

using namespace k3kit;

// Kind of the k3kit::Error raised by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// ---- integers ---------------------------------------------------------------

inline long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline long gcd_l(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Sum of the m-th powers of the primitive k-th roots of unity.
inline long ramanujan_sum(long k, long m) {
  long g = gcd_l(k, m), total = 0;
  for (long d = 1; d <= g; ++d)
    if (g % d == 0) total += mobius(k / d) * d;
  return total;
}

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

// ---- Hilbert symbol by search -----------------------------------------------

// Reduce a nonzero rational to an integer of the same square class with
// p-valuation 0 or 1.
inline Integer square_class_integer(const Rational& a, long p) {
  Integer x = a.get_num() * a.get_den();
  const Integer p2 = Integer(p) * p;
  while (x % p2 == 0) x /= p2;
  return x;
}

inline long mod_pos(const Integer& x, long m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r.get_si();
}

// 1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo p^3 (2^5 at 2),
// which by Hensel lifting is the same as a nontrivial solution over Q_p once
// both coefficients have valuation <= 1.
class HilbertOracle {
 public:
  explicit HilbertOracle(long p) : p_(p), mod_(p == 2 ? 32 : p * p * p) {
    square_.assign(mod_, false);
    unit_square_.assign(mod_, false);
    for (long z = 0; z < mod_; ++z) {
      square_[(z * z) % mod_] = true;
      if (z % p_) unit_square_[(z * z) % mod_] = true;
    }
  }

  int operator()(const Rational& a, const Rational& b) {
    long ra = canonical(square_class_integer(a, p_));
    long rb = canonical(square_class_integer(b, p_));
    auto key = std::make_pair(ra, rb);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int result = search(ra, rb);
    cache_[key] = result;
    return result;
  }

 private:
  // Smallest residue in the orbit of x under multiplication by unit squares.
  long canonical(const Integer& x) const {
    const long r = mod_pos(x, mod_);
    long best = r;
    for (long c = 1; c < mod_; ++c) {
      if (c % p_ == 0) continue;
      best = std::min(best, (r * ((c * c) % mod_)) % mod_);
    }
    return best;
  }

  int search(long a, long b) const {
    for (long x = 0; x < mod_; ++x) {
      for (long y = 0; y < mod_; ++y) {
        const long val = (a * ((x * x) % mod_) + b * ((y * y) % mod_)) % mod_;
        const bool unit_xy = (x % p_) != 0 || (y % p_) != 0;
        if (unit_xy ? square_[val] : unit_square_[val]) return 1;
      }
    }
    return -1;
  }

  long p_, mod_;
  std::vector<bool> square_, unit_square_;
  std::map<std::pair<long, long>, int> cache_;
};

// ---- Weil polynomials with known eigenvalues --------------------------------

// Cyclotomic polynomials of small degree, lowest coefficient first.
inline const std::map<long, std::vector<long>>& cyclotomic_table() {
  static const std::map<long, std::vector<long>> table{
      {1, {-1, 1}},  // 1 - x after the sign flip below
      {2, {1, 1}},
      {3, {1, 1, 1}},
      {4, {1, 0, 1}},
      {5, {1, 1, 1, 1, 1}},
      {6, {1, -1, 1}},
      {7, {1, 1, 1, 1, 1, 1, 1}},
      {8, {1, 0, 0, 0, 1}},
      {9, {1, 0, 0, 1, 0, 0, 1}},
      {10, {1, -1, 1, -1, 1}},
      {12, {1, 0, -1, 0, 1}},
      {14, {1, -1, 1, -1, 1, -1, 1}},
      {18, {1, 0, 0, -1, 0, 0, 1}},
  };
  return table;
}

inline long euler_phi(long k) { return static_cast<long>(cyclotomic_table().at(k).size()) - 1; }

// P2 = prod over k of Phi_k(q t) (with Phi_1 giving 1 - q t), so the
// eigenvalues are q times the primitive k-th roots of unity.
struct KnownWeil {
  Integer q;
  std::vector<long> orders;  // one entry per cyclotomic block

  WeilPolynomialP2 polynomial() const {
    IntPoly p{1};
    for (long k : orders) {
      std::vector<long> c = cyclotomic_table().at(k);
      if (k == 1) c = {1, -1};
      IntVector coeffs;
      Integer qq = 1;
      for (long x : c) {
        coeffs.push_back(Integer(x) * qq);
        qq *= q;
      }
      p = p * IntPoly(coeffs);
    }
    return WeilPolynomialP2{q, p};
  }

  // Trace of Frobenius^m on H^2.
  Integer trace(unsigned long m) const {
    Integer total = 0;
    for (long k : orders) total += ramanujan_sum(k, static_cast<long>(m));
    return total * ipow(q, m);
  }

  // #S(F_{q^m}) = 1 + trace + q^{2m}.
  Integer points(unsigned long m) const { return 1 + trace(m) + ipow(q, 2 * m); }
};

inline KnownWeil random_weil(std::mt19937_64& rng, const Integer& q) {
  static const std::vector<long> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
  KnownWeil w{q, {}};
  long degree = 0;
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  while (degree < 22) {
    long k = orders[pick(rng)];
    if (degree + euler_phi(k) > 22) k = (rng() & 1) ? 1 : 2;
    w.orders.push_back(k);
    degree += euler_phi(k);
  }
  return w;
}

// ---- Hilbert scheme point counts via closed points --------------------------

// Each closed point of degree d over F_Q contributes
// prod_{k>=1} 1/(1 - Q^{d(k-1)} t^{dk}) to sum_n #S^[n](F_Q) t^n.
inline std::vector<Integer> hilb_counts_closed_points(const KnownWeil& w, unsigned long r, unsigned n) {
  std::vector<Integer> N(n + 1);
  for (unsigned m = 1; m <= n; ++m) N[m] = w.points(r * m);
  const Integer Q = ipow(w.q, r);
  std::vector<Integer> series(n + 1, 0);
  series[0] = 1;
  for (unsigned d = 1; d <= n; ++d) {
    Integer a = 0;
    for (unsigned e = 1; e <= d; ++e)
      if (d % e == 0) a += mobius(d / e) * N[e];
    a /= d;
    for (unsigned k = 1; d * k <= n; ++k) {
      // multiply by (1 - c x)^{-a} with x = t^{dk}, c = Q^{d(k-1)}
      const Integer c = ipow(Q, d * (k - 1));
      const unsigned step = d * k;
      std::vector<Integer> next(n + 1, 0);
      for (unsigned i = 0; i <= n; ++i) {
        if (series[i] == 0) continue;
        Integer binom = 1, cpow = 1;  // C(a+j-1, j) c^j
        for (unsigned j = 0; i + j * step <= n; ++j) {
          next[i + j * step] += series[i] * binom * cpow;
          binom = binom * (a + j) / (j + 1);
          cpow *= c;
        }
      }
      series = next;
    }
  }
  return series;
}

// #S^(2)(F_Q) = (N_1^2 + N_2)/2 over F_Q = F_{q^r}.
inline Integer sym2_count(const KnownWeil& w, unsigned long r) {
  const Integer n1 = w.points(r), n2 = w.points(2 * r);
  return (n1 * n1 + n2) / 2;
}

// ---- Betti numbers of S^[n] from the product formula ------------------------

// prod_k 1/((1 - z^{2k-2} t^k)(1 - z^{2k} t^k)^22 (1 - z^{2k+2} t^k)),
// coefficient of t^n as a polynomial in z.
inline std::vector<Integer> k3_hilb_betti(unsigned n) {
  // series[i][j]: coefficient of t^i z^j
  const unsigned zmax = 4 * n;
  std::vector<std::vector<Integer>> series(n + 1, std::vector<Integer>(zmax + 1, 0));
  series[0][0] = 1;
  auto multiply_geometric = [&](unsigned tdeg, unsigned zdeg, unsigned times) {
    for (unsigned rep = 0; rep < times; ++rep) {
      for (unsigned i = tdeg; i <= n; ++i)
        for (unsigned j = zdeg; j <= zmax; ++j) series[i][j] += series[i - tdeg][j - zdeg];
    }
  };
  for (unsigned k = 1; k <= n; ++k) {
    multiply_geometric(k, 2 * k - 2, 1);
    multiply_geometric(k, 2 * k, 22);
    multiply_geometric(k, 2 * k + 2, 1);
  }
  return series[n];
}

// ---- Sym^m by listing eigenvalue multisets ----------------------------------

struct GradedEigen {
  int degree;
  Integer value;
};

inline std::map<int, IntPoly> brute_sym_power(const std::vector<GradedEigen>& eig, unsigned m) {
  std::map<int, IntPoly> out;
  std::vector<std::size_t> idx(m, 0);
  if (m == 0) {
    out[0] = IntPoly{1, -1};
    return out;
  }
  while (true) {
    int deg = 0;
    Integer val = 1;
    for (auto i : idx) {
      deg += eig[i].degree;
      val *= eig[i].value;
    }
    auto it = out.find(deg);
    if (it == out.end()) out[deg] = IntPoly::one_minus(val);
    else it->second = it->second * IntPoly::one_minus(val);
    // next non-decreasing index tuple
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == eig.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < m; ++j) idx[j] = idx[k - 1];
  }
  return out;
}

// ---- random NS lattices inside the K3 lattice -------------------------------

struct EmbeddedNS {
  SurfaceDescriptor surface;
  IntMatrix basis;  // rows are vectors of U^3 + E8(-1)^2
};

// Random sublattice of U^3 + E8(-1)^2 of rank rho with hyperbolic signature.
// The first basis vector e + k f has square 2k and serves as the ample class.
inline EmbeddedNS random_ns(std::mt19937_64& rng, std::size_t rho) {
  const IntegerLattice k3 = k3_lattice();
  std::uniform_int_distribution<int> coeff(-2, 2), kdist(1, 3);
  while (true) {
    IntMatrix basis(rho, 22);
    basis(0, 0) = 1;
    basis(0, 1) = kdist(rng);
    for (std::size_t i = 1; i < rho; ++i) {
      for (std::size_t j = 0; j < 22; ++j) {
        if (j < 2 || (rng() % 3) == 0) basis(i, j) = coeff(rng);
      }
    }
    const IntMatrix gram = basis * k3.gram() * basis.transpose();
    const IntegerLattice ns(gram);
    const Signature sig = signature(ns);
    if (sig.positive != 1 || sig.null != 0 || sig.negative != rho - 1) continue;
    EmbeddedNS out;
    out.surface = SurfaceDescriptor(gram);
    out.surface.ample = IntVector(rho, 0);
    (*out.surface.ample)[0] = 1;
    out.basis = basis;
    return out;
  }
}

// Image of a Mukai vector in U + (U^3 + E8(-1)^2): r e - s f + c1.
inline IntVector mukai_in_extended(const EmbeddedNS& ns, const MukaiVector& v) {
  IntVector out(24, 0);
  out[0] = v.r;
  out[1] = -v.s;
  for (std::size_t i = 0; i < v.c1.size(); ++i)
    for (std::size_t j = 0; j < 22; ++j) out[2 + j] += v.c1[i] * ns.basis(i, j);
  return out;
}

inline IntegerLattice extended_with_mukai_sign() {
  return direct_sum(hyperbolic_plane(), k3_lattice());
}

// Square-class and local comparison of two nondegenerate Gram matrices.
inline bool rationally_matching(const IntMatrix& a, const IntMatrix& b, const std::vector<long>& primes) {
  const QuadraticForm fa = diagonalize(a), fb = diagonalize(b);
  if (fa.rank() != fb.rank()) return false;
  const RealSignature sa = real_signature(fa), sb = real_signature(fb);
  if (sa.positive != sb.positive || sa.negative != sb.negative) return false;
  const Rational ratio = Rational(determinant(a)) / Rational(determinant(b));
  if (ratio <= 0) return false;
  mpz_class num = ratio.get_num(), den = ratio.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  for (long p : primes)
    if (hasse_invariant(fa, Place(p)) != hasse_invariant(fb, Place(p))) return false;
  return true;
}

inline RatVector apply(const RatMatrix& g, const MukaiVector& v) { return g * to_rational(v.coords()); }

}  // namespace k3test
