#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "k3kit/numeric.hpp"

namespace k3kit {

/// Dense univariate polynomial, coefficients stored lowest degree first and
/// kept trimmed (no trailing zeros).  The zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Poly(std::move(v));
  }

  /// 1 - a t, the characteristic-polynomial factor of a single eigenvalue a.
  static Poly one_minus(const T& a) { return Poly{T(1), T(-a)}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator+(const Poly& rhs) const {
    std::vector<T> out(std::max(coeffs_.size(), rhs.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Poly(std::move(out));
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Poly operator-(const Poly& rhs) const { return *this + (-rhs); }

  Poly operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<T> out(coeffs_.size() + rhs.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  Poly scaled(const T& factor) const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    out.trim();
    return out;
  }

  /// p(c t): multiplies every eigenvalue of a characteristic polynomial by c.
  Poly substitute_scaled(const T& c) const {
    Poly out = *this;
    T power = 1;
    for (auto& coeff : out.coeffs_) {
      coeff *= power;
      power *= c;
    }
    out.trim();
    return out;
  }

  Poly pow(unsigned long exponent) const {
    Poly result = constant(T(1));
    Poly base = *this;
    while (exponent) {
      if (exponent & 1UL) result = result * base;
      exponent >>= 1;
      if (exponent) base = base * base;
    }
    return result;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Poly(std::move(out));
  }

  /// Truncates to terms of degree < n.
  Poly truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return Poly(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
IntPoly to_integer(const RatPoly& p);  // throws ErrorKind::non_integral

/// Human-readable rendering in the variable `var`, highest degree first.
std::string to_string(const IntPoly& p, const std::string& var = "t", bool ascending = false);
std::string to_string(const RatPoly& p, const std::string& var = "t", bool ascending = false);

/// Division with remainder over Q.
void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quotient, RatPoly& remainder);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero

/// Product of the distinct irreducible factors (over Q) of p, scaled so the
/// constant term matches p's when nonzero.
RatPoly squarefree_part(const RatPoly& p);

/// Power sums p_1..p_count of the reciprocal roots of P(t) = prod(1 - a_j t),
/// i.e. p_m = sum_j a_j^m, from P's coefficients by Newton's identities.
/// Requires P(0) = 1.
IntVector power_sums(const IntPoly& p, std::size_t count);

/// Inverse of power_sums: the unique P(t) = prod_{j<=dimension}(1 - a_j t)
/// whose reciprocal roots have the given power sums p_1..p_dimension.  Exact
/// division by k at each step is asserted (ErrorKind::non_integral otherwise).
IntPoly from_power_sums(const IntVector& sums, std::size_t dimension);

}  // namespace k3kit
