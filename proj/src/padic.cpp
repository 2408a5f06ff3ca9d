#include "k3kit/padic.hpp"

#include <sstream>

namespace k3kit {

Place::Place(long p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
}

Place parse_place(const std::string& text) {
  if (text == "real" || text == "inf" || text == "R") return Place::real();
  return Place(to_int64(parse_integer(text)));
}

QuadraticForm::QuadraticForm(const RatVector& entries) {
  for (const auto& e : entries) {
    if (e == 0) ++nullity_;
    else entries_.push_back(e);
  }
}

QuadraticForm::QuadraticForm(std::initializer_list<long> entries) {
  for (long e : entries) {
    if (e == 0) ++nullity_;
    else entries_.emplace_back(e);
  }
}

Rational QuadraticForm::discriminant() const {
  Rational d = 1;
  for (const auto& e : entries_) d *= e;
  return d;
}

QuadraticForm QuadraticForm::negated() const {
  QuadraticForm out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm out = a;
  out.entries_.insert(out.entries_.end(), b.entries_.begin(), b.entries_.end());
  out.nullity_ += b.nullity_;
  return out;
}

QuadraticForm diagonalize(const RatMatrix& gram) { return QuadraticForm(congruence_diagonal(gram)); }

QuadraticForm diagonalize(const IntMatrix& gram) { return diagonalize(to_rational(gram)); }

namespace {

// Integer in the same square class as a nonzero rational.
Integer square_class_integer(const Rational& a) {
  if (a == 0) throw Error(ErrorKind::invalid_argument, "zero has no square class");
  return a.get_num() * a.get_den();
}

long mod8(const Integer& odd) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), odd.get_mpz_t(), 8);
  return static_cast<long>(r.get_si());
}

int sign_of_exponent(long e) { return (e % 2 == 0) ? 1 : -1; }

bool unit_is_square(const Integer& unit, long p) {
  if (p == 2) return mod8(unit) == 1;
  return legendre(unit, p) == 1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw Error(ErrorKind::invalid_argument, "Hilbert symbol of zero");
  if (place.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  const long p = place.prime();
  const Integer A = square_class_integer(a);
  const Integer B = square_class_integer(b);
  const long alpha = valuation(A, p);
  const long beta = valuation(B, p);
  const Integer u = strip_prime(A, p);
  const Integer v = strip_prime(B, p);
  if (p == 2) {
    const long u8 = mod8(u), v8 = mod8(v);
    const long eps_u = (u8 % 4 == 3), eps_v = (v8 % 4 == 3);
    const long om_u = (u8 == 3 || u8 == 5), om_v = (v8 == 3 || v8 == 5);
    return sign_of_exponent(eps_u * eps_v + alpha * om_v + beta * om_u);
  }
  int result = sign_of_exponent(alpha * beta * ((p - 1) / 2));
  if (beta % 2) result *= legendre(u, p);
  if (alpha % 2) result *= legendre(v, p);
  return result;
}

int hasse_invariant(const QuadraticForm& f, const Place& place) {
  if (f.is_degenerate()) throw Error(ErrorKind::degenerate, "Hasse invariant of a degenerate form");
  const auto& e = f.entries();
  int h = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) h *= hilbert_symbol(e[i], e[j], place);
  return h;
}

bool same_square_class(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw Error(ErrorKind::invalid_argument, "square class of zero");
  if (place.is_real()) return (a > 0) == (b > 0);
  const long p = place.prime();
  const Integer c = square_class_integer(a / b);
  if (valuation(c, p) % 2 != 0) return false;
  return unit_is_square(strip_prime(c, p), p);
}

RealSignature real_signature(const QuadraticForm& f) {
  RealSignature s;
  for (const auto& e : f.entries()) (e > 0 ? s.positive : s.negative)++;
  return s;
}

bool qp_isometric(const QuadraticForm& f, const QuadraticForm& g, const Place& place) {
  if (f.is_degenerate() || g.is_degenerate()) {
    throw Error(ErrorKind::degenerate, "isometry test on a degenerate form");
  }
  if (f.rank() != g.rank()) return false;
  if (place.is_real()) return real_signature(f) == real_signature(g);
  if (f.rank() == 0) return true;
  return same_square_class(f.discriminant(), g.discriminant(), place) &&
         hasse_invariant(f, place) == hasse_invariant(g, place);
}

IntVector square_class_representatives(long p) {
  Place checked(p);
  if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
  long u = 2;
  while (legendre(u, p) != -1) ++u;
  return {1, u, p, u * p};
}

namespace {

QuadraticForm hyperbolic_part(std::size_t planes) {
  RatVector e;
  for (std::size_t i = 0; i < planes; ++i) {
    e.emplace_back(1);
    e.emplace_back(-1);
  }
  return QuadraticForm(e);
}

// Calls visit on every non-decreasing index sequence of length m over [0, k),
// stopping early when visit returns true.
template <class Visit>
bool for_each_multiset(std::size_t k, std::size_t m, Visit&& visit) {
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == k - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[i - 1];
  }
}

}  // namespace

WittClass witt_class(const QuadraticForm& f, const Place& place) {
  if (f.is_degenerate()) throw Error(ErrorKind::degenerate, "Witt class of a degenerate form");
  if (place.is_real()) {
    const auto s = real_signature(f);
    const long diff = static_cast<long>(s.positive) - static_cast<long>(s.negative);
    return WittClass(place, IntVector(static_cast<std::size_t>(diff < 0 ? -diff : diff), Integer(diff < 0 ? -1 : 1)));
  }
  const std::size_t n = f.rank();
  if (n == 0) return WittClass(place, {});
  const IntVector reps = square_class_representatives(place.prime());
  for (std::size_t m = n % 2; m <= std::min<std::size_t>(n, 4); m += 2) {
    const QuadraticForm planes = hyperbolic_part((n - m) / 2);
    IntVector found;
    const bool hit = for_each_multiset(reps.size(), m, [&](const std::vector<std::size_t>& idx) {
      RatVector entries;
      for (auto i : idx) entries.emplace_back(reps[i]);
      if (!qp_isometric(orthogonal_sum(QuadraticForm(entries), planes), f, place)) return false;
      for (auto i : idx) found.push_back(reps[i]);
      return true;
    });
    if (hit) return WittClass(place, std::move(found));
  }
  throw std::logic_error("no anisotropic representative of dimension <= 4 found");
}

bool zl_square_class_equal(const Rational& a, const Rational& b, long ell) {
  Place place(ell);
  if (a == 0 || b == 0) throw Error(ErrorKind::invalid_argument, "square class of zero");
  const Integer c = square_class_integer(a / b);
  if (valuation(c, ell) != 0) return false;
  return unit_is_square(c, ell);
}

bool nth_root_of_unity_exists(long n, long ell) {
  Place place(ell);
  if (n < 1) throw Error(ErrorKind::invalid_argument, "root-of-unity order must be positive");
  if (ell == 2) return n % 2 == 0;
  return gcd(Integer(n), Integer(ell - 1)) > 1;
}

std::string to_string(const QuadraticForm& f) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < f.entries().size(); ++i) os << (i ? ", " : "") << f.entries()[i];
  for (std::size_t i = 0; i < f.nullity(); ++i) os << (f.entries().empty() && i == 0 ? "" : ", ") << 0;
  os << '>';
  return os.str();
}

std::string to_string(const WittClass& w) {
  if (w.is_zero()) return "0 in W(Q_" + w.place().name() + ")";
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < w.representative().size(); ++i) os << (i ? ", " : "") << w.representative()[i];
  os << "> in W(" << (w.place().is_real() ? std::string("R") : "Q_" + w.place().name()) << ')';
  return os.str();
}

}  // namespace k3kit
