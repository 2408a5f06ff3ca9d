#pragma once

// Integral lattices given by Gram matrices: construction from a small
// expression language, pairings, discriminants, saturated complements,
// fixed sublattices and reflections.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "k3kit/matrix.hpp"
#include "k3kit/numeric.hpp"

namespace k3kit {

class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Throws ErrorKind::dimension for a non-square Gram and
  /// ErrorKind::invalid_argument for a non-symmetric one.
  explicit IntegerLattice(IntMatrix gram, std::string label = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& label() const noexcept { return label_; }

  bool operator==(const IntegerLattice& rhs) const { return gram_ == rhs.gram_; }

 private:
  IntMatrix gram_;
  std::string label_;
};

/// A sublattice together with its basis, one ambient vector per row.
struct Sublattice {
  IntegerLattice lattice;
  IntMatrix basis;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  bool operator==(const Signature&) const = default;
};

/// An isometry of a fixed lattice, acting on coordinate columns.
class LatticeIsometry {
 public:
  /// Throws ErrorKind::not_isometry unless matrix^T gram matrix == gram.
  LatticeIsometry(const IntegerLattice& ambient, RatMatrix matrix);

  const RatMatrix& matrix() const noexcept { return matrix_; }
  const IntegerLattice& ambient() const noexcept { return ambient_; }

 private:
  IntegerLattice ambient_;
  RatMatrix matrix_;
};

bool preserves_gram(const IntMatrix& gram, const RatMatrix& matrix);

// Standard atoms.
IntegerLattice hyperbolic_plane();                 // U = [[0,1],[1,0]]
IntegerLattice e8_lattice();                       // positive definite E8
IntegerLattice rank_one_lattice(const Integer& m); // <m>

IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice scaled(const IntegerLattice& l, const Integer& factor);
IntegerLattice power(const IntegerLattice& l, unsigned exponent);

/// The K3 lattice U^3 + E8(-1)^2 and the Mukai lattice U^4 + E8(-1)^2.
IntegerLattice k3_lattice();
IntegerLattice extended_k3_lattice();

/// Parses a lattice expression:
///   atom := "U" | "E8" | "<" int-expr ">" | "gram(" rows ")" | "(" expr ")"
///   postfix: atom "(" int ")" scales the Gram; expr "^" int is a direct power
///   prefix "-" scales by -1; "+" and "⊕" are direct sums.
/// Inside <...> an integer expression over + - * with named parameters is
/// accepted, e.g. "<2-2n>" with params {{"n", 6}}.  Gram rows are written
/// "gram([a,b],[c,d])" or "gram([[a,b],[c,d]])".
IntegerLattice build_lattice(std::string_view expression,
                             const std::map<std::string, Integer>& params = {});

Rational gram_pairing(const IntegerLattice& l, const RatVector& x, const RatVector& y);
Integer gram_pairing(const IntegerLattice& l, const IntVector& x, const IntVector& y);

Integer discriminant(const IntegerLattice& l);

/// Invariant factors > 1 of the discriminant group; throws ErrorKind::singular.
IntVector discriminant_group(const IntegerLattice& l);

Signature signature(const IntegerLattice& l);

/// gcd of the coordinates is 1; throws for the zero vector or a length mismatch.
bool is_primitive_vector(const IntegerLattice& l, const IntVector& x);

/// Saturated kernel of x -> (x, v), basis in Hermite normal form.
Sublattice orthogonal_complement(const IntegerLattice& l, const IntVector& v);

/// Saturated kernel of (phi - 1).
Sublattice invariant_sublattice(const LatticeIsometry& phi);

/// x - 2 (x,u)/(u,u) u; throws ErrorKind::isotropic when (u,u) = 0.
RatVector reflect(const IntegerLattice& l, const RatVector& u, const RatVector& x);

/// Matrix of the reflection through u acting on coordinate columns.
RatMatrix reflection_matrix(const IntMatrix& gram, const RatVector& u);

/// Gram of the sublattice spanned by the given rows.
IntMatrix restricted_gram(const IntMatrix& gram, const IntMatrix& rows);

/// Exhaustive isometry search for small rank (<= 4).  Looks for an integral
/// change of basis M with det M = +-1, entries bounded by `bound`, and
/// M^T gram(a) M = gram(b).
std::optional<IntMatrix> find_isometry(const IntegerLattice& a, const IntegerLattice& b,
                                       int bound);

}  // namespace k3kit
