#include "k3kit/polynomial.hpp"

#include <sstream>

namespace k3kit {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(to_integer(x));
  return IntPoly(std::move(c));
}

namespace {

template <class T>
std::string render(const Poly<T>& p, const std::string& var, bool ascending) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const long deg = p.degree();
  for (long i = 0; i <= deg; ++i) {
    const long k = ascending ? i : deg - i;
    T c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var, bool ascending) {
  return render(p, var, ascending);
}
std::string to_string(const RatPoly& p, const std::string& var, bool ascending) {
  return render(p, var, ascending);
}

void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quotient, RatPoly& remainder) {
  if (den.is_zero()) throw Error(ErrorKind::invalid_argument, "polynomial division by zero");
  std::vector<Rational> r = num.coeffs();
  const long dd = den.degree();
  std::vector<Rational> q(r.size() > static_cast<std::size_t>(dd) ? r.size() - static_cast<std::size_t>(dd) : 0,
                          Rational(0));
  const Rational lead = den.leading();
  for (long k = static_cast<long>(r.size()) - 1; k >= dd; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / lead;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - dd)] = f;
    for (long j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= f * den[static_cast<std::size_t>(j)];
  }
  quotient = RatPoly(std::move(q));
  remainder = RatPoly(std::move(r));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.leading());
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  RatPoly g = gcd(p, p.derivative());
  RatPoly q, r;
  divmod(p, g, q, r);
  if (q[0] != 0 && p[0] != 0) q = q.scaled(p[0] / q[0]);
  return q;
}

IntVector power_sums(const IntPoly& p, std::size_t count) {
  if (p[0] != 1) throw Error(ErrorKind::invalid_argument, "power_sums needs P(0) = 1");
  const auto& c = p.coeffs();
  IntVector sums(count + 1, Integer(0));
  for (std::size_t m = 1; m <= count; ++m) {
    Integer acc = 0;
    if (m < c.size()) acc = -Integer(static_cast<unsigned long>(m)) * c[m];
    const std::size_t top = std::min(m - 1, c.empty() ? 0 : c.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      mpz_submul(acc.get_mpz_t(), c[i].get_mpz_t(), sums[m - i].get_mpz_t());
    }
    sums[m] = std::move(acc);
  }
  sums.erase(sums.begin());
  return sums;
}

IntPoly from_power_sums(const IntVector& sums, std::size_t dimension) {
  if (sums.size() < dimension) {
    throw Error(ErrorKind::invalid_argument, "not enough power sums for the requested dimension");
  }
  std::vector<Integer> c(dimension + 1, Integer(0));
  c[0] = 1;
  Integer acc;
  for (std::size_t m = 1; m <= dimension; ++m) {
    acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
      mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), sums[m - i - 1].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), m)) {
      throw Error(ErrorKind::non_integral,
                  "power sums do not come from an integral characteristic polynomial");
    }
    mpz_divexact_ui(c[m].get_mpz_t(), acc.get_mpz_t(), m);
    c[m] = -c[m];
  }
  return IntPoly(std::move(c));
}

}  // namespace k3kit
