#pragma once

// Exact scalar arithmetic shared by every k3kit module.  Integers and
// rationals are GMP-backed; nothing in the library rounds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3kit {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

enum class ErrorKind {
  parse,
  dimension,
  singular,
  isotropic,
  not_isometry,
  degenerate,
  not_prime,
  empty_moduli,
  parity,
  missing_data,
  out_of_bounds,
  non_integral,
  invalid_argument,
};

const char* to_string(ErrorKind kind);

/// Every precondition failure in the library surfaces as this type.  The kind
/// lets callers (the CLI in particular) classify failures without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Two-argument gcd/lcm come from gmpxx; this is the list form (0 for all zeros).
Integer gcd_of(const IntVector& values);
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);

bool is_prime(long p);

/// Exponent of the prime p in a nonzero integer.
long valuation(const Integer& value, long p);
long valuation(const Rational& value, long p);

/// Removes every factor p from a nonzero integer.
Integer strip_prime(const Integer& value, long p);

/// Legendre symbol (a | p) for an odd prime p.
int legendre(const Integer& a, long p);

bool is_integral(const Rational& value);
Integer to_integer(const Rational& value);  // throws ErrorKind::non_integral

RatVector to_rational(const IntVector& v);
IntVector to_integer(const RatVector& v);
bool is_integral(const RatVector& v);

/// Parses "17", "-3", "5/2" (and leading '+').  Throws ErrorKind::parse.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace k3kit
