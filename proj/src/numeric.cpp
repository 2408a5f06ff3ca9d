#include "k3kit/numeric.hpp"

#include <cctype>
#include <limits>

namespace k3kit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::singular: return "singular";
    case ErrorKind::isotropic: return "isotropic";
    case ErrorKind::not_isometry: return "not_isometry";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::not_prime: return "not_prime";
    case ErrorKind::empty_moduli: return "empty_moduli";
    case ErrorKind::parity: return "parity";
    case ErrorKind::missing_data: return "missing_data";
    case ErrorKind::out_of_bounds: return "out_of_bounds";
    case ErrorKind::non_integral: return "non_integral";
    case ErrorKind::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

Integer gcd_of(const IntVector& values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  return make_rational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  Integer z = p;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

long valuation(const Integer& value, long p) {
  if (value == 0) throw Error(ErrorKind::invalid_argument, "valuation of zero");
  Integer prime = p;
  Integer rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& value, long p) {
  return valuation(value.get_num(), p) - valuation(value.get_den(), p);
}

Integer strip_prime(const Integer& value, long p) {
  if (value == 0) throw Error(ErrorKind::invalid_argument, "strip_prime of zero");
  Integer prime = p;
  Integer rest;
  mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t());
  return rest;
}

int legendre(const Integer& a, long p) {
  Integer prime = p;
  return mpz_legendre(a.get_mpz_t(), prime.get_mpz_t());
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integral(value)) {
    throw Error(ErrorKind::non_integral, "expected an integer, got " + to_string(value));
  }
  return value.get_num();
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_integer(x));
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v) {
    if (!is_integral(x)) return false;
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal(s)) {
    throw Error(ErrorKind::parse, "not an integer: '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool fits_int64(const Integer& value) {
  static const Integer lo = Integer(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi = Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) {
    throw Error(ErrorKind::out_of_bounds, "integer does not fit in 64 bits");
  }
  return std::stoll(value.get_str());
}

}  // namespace k3kit
