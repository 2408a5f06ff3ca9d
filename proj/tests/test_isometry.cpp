#include <doctest.h>

#include "support.hpp"

using namespace k3test;

namespace {

SurfaceDescriptor two_curves_with_swap() {
  SurfaceDescriptor S(IntMatrix{{-2, 3}, {3, -2}});
  S.q = 3;
  S.ample = IntVector{1, 1};
  S.frobenius_ns = IntMatrix{{0, 1}, {1, 0}};
  return S;
}

SurfaceDescriptor plane_u() {
  SurfaceDescriptor S(IntMatrix{{0, 1}, {1, 0}});
  S.ample = IntVector{1, 1};
  return S;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector signed_coords(const MukaiVector& v, int sign) {
  RatVector out = to_rational(v.coords());
  for (auto& x : out) x *= sign;
  return out;
}

bool isometric(const IntegerLattice& a, const IntMatrix& gram) {
  return find_isometry(a, IntegerLattice(gram), 3).has_value();
}

}  // namespace

TEST_SUITE("isometry") {

TEST_CASE("target vector") {
  const auto S = two_curves_with_swap();
  CHECK(construct_w(S, MukaiVector{5, {2, 3}, 0}) == MukaiVector{1, {0, 0}, -5});
  CHECK(construct_w(S, MukaiVector{1, {0, 0}, 0}) == MukaiVector{1, {0, 0}, 0});
  CHECK(construct_w(S, MukaiVector{0, {0, 0}, 1}) == MukaiVector{1, {0, 0}, 0});
  const MukaiVector w{1, {0, 0}, -5};
  CHECK(construct_w(S, w) == w);
  CHECK(error_kind([&] { construct_w(S, MukaiVector{0, {1, 0}, 0}); }) == ErrorKind::empty_moduli);
}

TEST_CASE("reflection through v - w") {
  const auto S = two_curves_with_swap();
  const MukaiVector v{5, {2, 3}, 0}, w{1, {0, 0}, -5};
  CHECK(mukai_pairing(S, v, w) == 25);
  const MukaiVector u{4, {2, 3}, 5};
  CHECK(mukai_square(S, u) == -30);
  CHECK(mukai_pairing(S, v, u) == -15);

  const auto g = perp_isometry(S, v);
  CHECK(g.branch == IsometryBranch::reflect_v_minus_w);
  CHECK(g.sign == 1);
  CHECK(g.target == w);
  REQUIRE(g.mirrors.size() == 1);
  CHECK(g.mirrors[0] == to_rational(u.coords()));
  CHECK(apply(g.matrix, v) == to_rational(w.coords()));
  CHECK(verify_isometry(S, g));
  CHECK(g.acts_as_identity_on_transcendental);
  CHECK(g.matrix * g.matrix == to_rational(identity(4)));
}

TEST_CASE("identity branch") {
  const auto S = two_curves_with_swap();
  for (long n = 1; n <= 5; ++n) {
    const MukaiVector w{1, {0, 0}, 1 - n};
    const auto g = perp_isometry(S, w);
    CHECK(g.branch == IsometryBranch::identity);
    CHECK(g.matrix == to_rational(identity(4)));
    CHECK(g.sign == 1);
  }
}

TEST_CASE("isotropic vectors") {
  const auto S = plane_u();
  const MukaiVector w{1, {0, 0}, 0};

  const MukaiVector fibre{0, {1, 0}, 0};
  const auto g = perp_isometry(S, fibre);
  CHECK(g.branch == IsometryBranch::twist_then_reflect);
  CHECK(apply(g.matrix, fibre) == signed_coords(w, g.sign));
  CHECK(verify_isometry(S, g));
  // after the twist v' = (0, c1, 1) and (v' - w)^2 = 2 c1.h = 2
  const MukaiVector twisted = twist_by_exp(S, fibre, *S.ample);
  CHECK(twisted == MukaiVector{0, {1, 0}, 1});
  CHECK(mukai_square(S, MukaiVector{-1, {1, 0}, 1}) == 2);

  const MukaiVector v{1, {1, 0}, 0};
  const auto k = perp_isometry(S, v);
  CHECK(k.branch == IsometryBranch::through_point);
  CHECK(k.mirrors.size() == 2);
  CHECK(apply(k.matrix, v) == signed_coords(w, k.sign));
  CHECK(verify_isometry(S, k));

  SurfaceDescriptor bare = plane_u();
  bare.ample.reset();
  CHECK(error_kind([&] { perp_isometry(bare, fibre); }) == ErrorKind::missing_data);
  SurfaceDescriptor flat = plane_u();
  flat.ample = IntVector{0, 1};
  CHECK(error_kind([&] { perp_isometry(flat, MukaiVector{0, {0, 1}, 0}); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { perp_isometry(S, MukaiVector{0, {1, -1}, 0}); }) == ErrorKind::empty_moduli);
}

TEST_CASE("every branch occurs and lands on +-w") {
  const auto S = plane_u();
  std::set<IsometryBranch> seen;
  for (int r = -3; r <= 3; ++r)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int s = -3; s <= 3; ++s) {
          const MukaiVector v{r, {a, b}, s};
          if (v.is_zero() || mukai_square(S, v) < 0) continue;
          if (v.r == 0 && v.s == 0 && mukai_square(S, v) == 0 && ns_pairing(S, v.c1, *S.ample) == 0) continue;
          const auto g = perp_isometry(S, v);
          seen.insert(g.branch);
          CHECK(verify_isometry(S, g));
          CHECK(apply(g.matrix, v) == signed_coords(construct_w(S, v), g.sign));
          if (g.branch == IsometryBranch::reflect_v_plus_w) CHECK(g.sign == -1);
        }
  CHECK(seen.size() == 5);
}

TEST_CASE("verification") {
  const auto S = two_curves_with_swap();
  CHECK(verify_isometry(S, to_rational(identity(4))));
  const auto g = perp_isometry(S, MukaiVector{5, {2, 3}, 0});
  RatMatrix doubled = g.matrix;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) doubled(i, j) *= 2;
  CHECK_FALSE(verify_isometry(S, doubled));
  RatMatrix sheared = to_rational(identity(4));
  sheared(0, 1) = 1;
  CHECK_FALSE(verify_isometry(S, sheared));
}

TEST_CASE("Galois equivariance") {
  const auto S = two_curves_with_swap();
  const auto g = perp_isometry(S, MukaiVector{2, {-1, -1}, 0});
  CHECK(equivariance_check(S, g));
  const IntMatrix phi{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  CHECK(equivariance_check(S, g.matrix, phi));
  CHECK(g.matrix * to_rational(phi) == to_rational(phi) * g.matrix);
  CHECK(equivariance_check(S, g.matrix, identity(4)));

  const auto h = perp_isometry(S, MukaiVector{5, {2, 3}, 0});
  CHECK(equivariance_check(S, h.matrix, identity(4)));
  // the mirror (4, 2, 3, 5) is not swap-invariant
  CHECK_FALSE(equivariance_check(S, h));

  const auto U = plane_u();
  const IntMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  const RatMatrix mirror = reflection_matrix(U.mukai_gram(), RatVector{0, 1, 2, 0});
  CHECK(verify_isometry(U, mirror));
  CHECK_FALSE(equivariance_check(U, mirror, swap));
  CHECK(equivariance_check(U, reflection_matrix(U.mukai_gram(), RatVector{0, 1, -1, 0}), swap));

  CHECK(error_kind([&] { equivariance_check(U, mirror, IntMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}); }) ==
        ErrorKind::not_isometry);
  CHECK(error_kind([&] { equivariance_check(U, mirror, IntMatrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("invariant vectors give equivariant isometries") {
  const auto S = two_curves_with_swap();
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-6, 6);
  int tested = 0;
  while (tested < 60) {
    const int a = d(rng);
    const MukaiVector v{d(rng), {a, a}, d(rng)};
    if (v.is_zero() || mukai_square(S, v) < 0) continue;
    const auto g = perp_isometry(S, v);
    CHECK(equivariance_check(S, g));
    ++tested;
  }
}

TEST_CASE("geometric embedding") {
  SurfaceDescriptor S(IntMatrix{{2}});
  S.q = 3;
  S.geo_ns_gram = IntMatrix{{-2, 3}, {3, -2}};
  S.embedding = IntMatrix{{1}, {1}};
  S.frobenius_ns = IntMatrix{{0, 1}, {1, 0}};
  S.ample = IntVector{1};
  const MukaiVector v{2, {-1}, 0};
  const auto g = perp_isometry(S, v);
  CHECK(g.matrix.rows() == 4);
  CHECK(g.target == MukaiVector{1, {0, 0}, -1});
  CHECK(apply(g.matrix, S.embed(v)) == signed_coords(g.target, g.sign));
  CHECK(equivariance_check(S, g));
}

TEST_CASE("H^2 lattice of the moduli space") {
  const auto S = two_curves_with_swap();
  const auto h2 = moduli_h2_lattice(S, MukaiVector{5, {2, 3}, 0});
  CHECK(h2.lattice.rank() == 3);
  CHECK(isometric(h2.lattice, IntMatrix{{-2, 3, -1}, {3, -2, 0}, {-1, 0, 0}}));
  CHECK(discriminant(h2.lattice) == 2);

  const auto point = moduli_h2_lattice(S, MukaiVector{0, {0, 0}, 1});
  CHECK(point.lattice.rank() == 2);
  CHECK(isometric(point.lattice, S.ns_gram));

  for (long n = 2; n <= 6; ++n) {
    const auto hw = moduli_h2_lattice(S, MukaiVector{1, {0, 0}, 1 - n});
    CHECK(isometric(hw.lattice, IntMatrix{{-2, 3, 0}, {3, -2, 0}, {0, 0, 2 - 2 * n}}));
  }
  const MukaiVector v{5, {2, 3}, 0};
  for (std::size_t i = 0; i < h2.basis.rows(); ++i) {
    IntVector row(4);
    for (std::size_t j = 0; j < 4; ++j) row[j] = h2.basis(i, j);
    CHECK(mukai_pairing(S, MukaiVector::from_coords(row), v) == 0);
  }
  CHECK(error_kind([&] { moduli_h2_lattice(S, MukaiVector{0, {1, 0}, 0}); }) == ErrorKind::empty_moduli);
}

TEST_CASE("random vectors over random Neron-Severi lattices") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> d(-4, 4), rho_d(1, 4);
  int done = 0;
  while (done < 120) {
    const auto ns = random_ns(rng, rho_d(rng));
    const auto& S = ns.surface;
    MukaiVector v{d(rng), IntVector(S.rho()), d(rng)};
    for (auto& x : v.c1) x = d(rng);
    if (v.is_zero() || mukai_square(S, v) < 0) continue;
    ++done;
    const bool twist_case = v.r == 0 && v.s == 0 && mukai_square(S, v) == 0;
    if (twist_case && ns_pairing(S, v.c1, *S.ample) == 0) {
      CHECK(error_kind([&] { perp_isometry(S, v); }) == ErrorKind::invalid_argument);
      continue;
    }
    const auto g = perp_isometry(S, v);
    CHECK(verify_isometry(S, g));
    CHECK(apply(g.matrix, v) == signed_coords(construct_w(S, v), g.sign));
    const auto h2 = moduli_h2_lattice(S, v);
    const Integer v2 = mukai_square(S, v);
    CHECK(h2.lattice.rank() == (v2 > 0 ? S.rho() + 1 : S.rho()));
  }
}

}  // TEST_SUITE
