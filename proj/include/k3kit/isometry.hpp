#pragma once

// Explicit rational isometries of N(S-bar) carrying a Mukai vector v to
// +-(1, 0, 1-n), built from reflections, and the lattice model of H^2(M(v)).
// Every mirror lies in N(S-bar), so the maps extend by the identity to the
// transcendental part of the full Mukai lattice; that part is not stored.

#include <string>
#include <vector>

#include "k3kit/lattice.hpp"
#include "k3kit/mukai.hpp"

namespace k3kit {

enum class IsometryBranch {
  identity,            // v = w
  reflect_v_minus_w,   // one reflection through v - w
  reflect_v_plus_w,    // v^2 > 0 and (v - w)^2 = 0: reflection through v + w, sends v to -w
  through_point,       // v^2 = 0, r != 0: through v - (0,0,1), then (0,0,1) - w
  twist_then_reflect,  // v = (0, c1, 0): twist by exp(H), then reflect through v' - w
};

const char* to_string(IsometryBranch branch);

struct MukaiIsometry {
  /// Acts on coordinate columns of N(S-bar), size 2 + rho_bar.
  RatMatrix matrix;
  IsometryBranch branch = IsometryBranch::identity;
  /// g(v) = sign * w.
  int sign = 1;
  bool acts_as_identity_on_transcendental = true;
  /// w in N(S-bar) coordinates.
  MukaiVector target;
  /// Mirror vectors, in the order applied.
  std::vector<RatVector> mirrors;
};

/// w = (1, 0, 1-n) with n = (v^2 + 2)/2, c1 of length rho_bar.  Throws
/// ErrorKind::empty_moduli for v^2 < 0.
MukaiVector construct_w(const SurfaceDescriptor& S, const MukaiVector& v);

/// g with g(v) = +-w, by the reflection case analysis.  v is given in NS(S)
/// coordinates and embedded into N(S-bar).  Throws ErrorKind::missing_data in
/// the v = (0, c1, 0) branch when there is no ample class, and
/// ErrorKind::invalid_argument when c1.H = 0 there.
MukaiIsometry perp_isometry(const SurfaceDescriptor& S, const MukaiVector& v);

/// g^T G g = G for the Mukai Gram G of N(S-bar).
bool verify_isometry(const SurfaceDescriptor& S, const RatMatrix& g);
inline bool verify_isometry(const SurfaceDescriptor& S, const MukaiIsometry& g) {
  return verify_isometry(S, g.matrix);
}

/// g phi = phi g.  phi must preserve the Mukai Gram (ErrorKind::not_isometry)
/// and fix (1,0,0) and (0,0,1) (ErrorKind::invalid_argument).
bool equivariance_check(const SurfaceDescriptor& S, const RatMatrix& g, const IntMatrix& phi);
/// Uses the descriptor's Frobenius, extended by the identity on H^0 and H^4.
bool equivariance_check(const SurfaceDescriptor& S, const MukaiIsometry& g);

/// v-perp in N(S-bar) when v^2 > 0, and v-perp/<v> when v^2 = 0, with the
/// basis vectors (representatives for the quotient) as rows.
Sublattice moduli_h2_lattice(const SurfaceDescriptor& S, const MukaiVector& v);

}  // namespace k3kit
