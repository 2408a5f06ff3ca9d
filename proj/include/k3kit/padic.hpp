#pragma once

// Rational quadratic forms and their local invariants: Hilbert symbols, Hasse
// invariants, square classes, Q_p-isometry and Witt classes.  Forms live over
// Q; a "place" selects which completion the invariants are computed in.

#include <string>
#include <vector>

#include "k3kit/matrix.hpp"
#include "k3kit/numeric.hpp"

namespace k3kit {

/// A finite prime p or the real place (stored as p = 0).
class Place {
 public:
  /// Throws ErrorKind::not_prime unless p is prime.
  explicit Place(long p);
  static Place real() { return Place(); }

  bool is_real() const noexcept { return p_ == 0; }
  long prime() const noexcept { return p_; }
  std::string name() const { return is_real() ? "real" : std::to_string(p_); }

  bool operator==(const Place&) const = default;

 private:
  Place() = default;
  long p_ = 0;
};

/// Parses "real"/"inf" or a prime.
Place parse_place(const std::string& text);

/// Diagonal quadratic form <a_1, ..., a_k> plus a recorded radical dimension.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Nonzero entries; zeros are moved into the radical.
  explicit QuadraticForm(const RatVector& entries);
  QuadraticForm(std::initializer_list<long> entries);

  const RatVector& entries() const noexcept { return entries_; }
  std::size_t rank() const noexcept { return entries_.size(); }
  std::size_t nullity() const noexcept { return nullity_; }
  std::size_t dimension() const noexcept { return entries_.size() + nullity_; }
  bool is_degenerate() const noexcept { return nullity_ != 0; }

  /// Product of the diagonal entries (of the nondegenerate part).
  Rational discriminant() const;

  QuadraticForm negated() const;
  friend QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);

 private:
  RatVector entries_;
  std::size_t nullity_ = 0;
};

/// Congruent diagonal form of a symmetric rational matrix; throws
/// ErrorKind::invalid_argument for non-symmetric input.
QuadraticForm diagonalize(const RatMatrix& gram);
QuadraticForm diagonalize(const IntMatrix& gram);

/// (a, b)_p = 1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_p (or R).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// prod_{i<j} (a_i, a_j)_p; throws ErrorKind::degenerate for degenerate forms.
int hasse_invariant(const QuadraticForm& f, const Place& place);

/// a/b is a square in Q_p^* (or positive, at the real place).
bool same_square_class(const Rational& a, const Rational& b, const Place& place);

struct RealSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool operator==(const RealSignature&) const = default;
};
RealSignature real_signature(const QuadraticForm& f);

/// Rank, discriminant square class and Hasse invariant agree (signature at
/// the real place).  Throws ErrorKind::degenerate.
bool qp_isometric(const QuadraticForm& f, const QuadraticForm& g, const Place& place);

/// Class of a form in W(Q_p) or W(R), stored as a canonical anisotropic
/// diagonal representative (empty for the zero class).
class WittClass {
 public:
  WittClass(Place place, IntVector representative)
      : place_(place), representative_(std::move(representative)) {}

  const Place& place() const noexcept { return place_; }
  const IntVector& representative() const noexcept { return representative_; }
  bool is_zero() const noexcept { return representative_.empty(); }

  bool operator==(const WittClass&) const = default;

 private:
  Place place_;
  IntVector representative_;
};

/// Representatives of Q_p^*/Q_p^*2 used for canonical Witt representatives:
/// {1, u, p, u p} with u the least positive non-residue for odd p, and
/// {1, 3, 5, 7, 2, 6, 10, 14} for p = 2.
IntVector square_class_representatives(long p);

WittClass witt_class(const QuadraticForm& f, const Place& place);

/// a/b = u^2 for a unit u of Z_l.
bool zl_square_class_equal(const Rational& a, const Rational& b, long ell);

/// Whether Q_l contains a primitive k-th root of unity for some k > 1 dividing n,
/// i.e. gcd(n, l - 1) > 1 for odd l and n even for l = 2.
bool nth_root_of_unity_exists(long n, long ell);

std::string to_string(const QuadraticForm& f);
std::string to_string(const WittClass& w);

}  // namespace k3kit
