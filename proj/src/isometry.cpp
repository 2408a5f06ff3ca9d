#include "k3kit/isometry.hpp"

#include <stdexcept>

namespace k3kit {

const char* to_string(IsometryBranch branch) {
  switch (branch) {
    case IsometryBranch::identity: return "identity";
    case IsometryBranch::reflect_v_minus_w: return "reflect(v-w)";
    case IsometryBranch::reflect_v_plus_w: return "reflect(v+w)";
    case IsometryBranch::through_point: return "reflect(v-o),reflect(o-w)";
    case IsometryBranch::twist_then_reflect: return "twist(h),reflect(v'-w)";
  }
  return "?";
}

MukaiVector construct_w(const SurfaceDescriptor& S, const MukaiVector& v) {
  const Integer sq = mukai_square(S, v);
  if (sq < 0) throw Error(ErrorKind::empty_moduli, "v^2 < 0");
  if (sq % 2 != 0) throw Error(ErrorKind::parity, "v^2 is odd");
  const Integer n = (sq + 2) / 2;
  return MukaiVector{1, IntVector(S.geometric_rho(), Integer(0)), 1 - n};
}

namespace {

RatVector difference(const IntVector& a, const IntVector& b, int sign = -1) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sign < 0 ? Rational(a[i] - b[i]) : Rational(a[i] + b[i]);
  return out;
}

Rational square(const IntMatrix& gram, const RatVector& u) {
  const RatVector gu = to_rational(gram) * u;
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * gu[i];
  return acc;
}

}  // namespace

MukaiIsometry perp_isometry(const SurfaceDescriptor& S, const MukaiVector& v) {
  const SurfaceDescriptor G = S.geometric();
  const MukaiVector V = S.embed(v);
  if (V.is_zero()) throw Error(ErrorKind::invalid_argument, "zero Mukai vector");
  const Integer sq = mukai_square(G, V);
  const MukaiVector W = construct_w(G, V);
  const IntMatrix gram = G.mukai_gram();
  const std::size_t N = gram.rows();
  const IntVector vc = V.coords(), wc = W.coords();

  MukaiIsometry out;
  out.target = W;
  out.matrix = RatMatrix::identity(N);

  if (V == W) {
    out.branch = IsometryBranch::identity;
  } else if (sq > 0) {
    RatVector u = difference(vc, wc);
    if (square(gram, u) != 0) {
      out.branch = IsometryBranch::reflect_v_minus_w;
    } else {
      u = difference(vc, wc, +1);
      out.branch = IsometryBranch::reflect_v_plus_w;
      out.sign = -1;
    }
    out.matrix = reflection_matrix(gram, u);
    out.mirrors.push_back(u);
  } else {
    RatVector u = difference(vc, wc);
    if (square(gram, u) != 0) {
      out.branch = IsometryBranch::reflect_v_minus_w;
      out.matrix = reflection_matrix(gram, u);
      out.mirrors.push_back(u);
    } else if (V.r != 0) {
      IntVector o(N, Integer(0));
      o.back() = 1;
      const RatVector u1 = difference(vc, o), u2 = difference(o, wc);
      out.branch = IsometryBranch::through_point;
      out.matrix = reflection_matrix(gram, u2) * reflection_matrix(gram, u1);
      out.mirrors = {u1, u2};
    } else {
      if (!G.ample) {
        throw Error(ErrorKind::missing_data, "v = (0, c1, 0) needs an ample class to twist by");
      }
      const IntVector& h = *G.ample;
      if (ns_pairing(G, V.c1, h) == 0) {
        throw Error(ErrorKind::invalid_argument, "c1.H = 0: the ample class cannot be used to twist");
      }
      const RatMatrix T = twist_matrix(G, h);
      const RatVector vt = T * to_rational(vc);
      RatVector u(N);
      for (std::size_t i = 0; i < N; ++i) u[i] = vt[i] - wc[i];
      out.branch = IsometryBranch::twist_then_reflect;
      out.matrix = reflection_matrix(gram, u) * T;
      out.mirrors.push_back(u);
    }
  }

  RatVector expect = to_rational(wc);
  for (auto& x : expect) x *= out.sign;
  if (out.matrix * to_rational(vc) != expect) {
    throw std::logic_error("reflection construction did not send v to +-w");
  }
  return out;
}

bool verify_isometry(const SurfaceDescriptor& S, const RatMatrix& g) {
  const RatMatrix gram = to_rational(S.geometric().mukai_gram());
  if (g.rows() != gram.rows() || g.cols() != gram.cols()) return false;
  return g.transpose() * gram * g == gram;
}

bool equivariance_check(const SurfaceDescriptor& S, const RatMatrix& g, const IntMatrix& phi) {
  const IntMatrix gram = S.geometric().mukai_gram();
  const std::size_t N = gram.rows();
  if (phi.rows() != N || phi.cols() != N || g.rows() != N || g.cols() != N) {
    throw Error(ErrorKind::dimension, "equivariance check needs matrices on N(S-bar)");
  }
  if (phi.transpose() * gram * phi != gram) {
    throw Error(ErrorKind::not_isometry, "Frobenius action does not preserve the Mukai pairing");
  }
  for (std::size_t i = 0; i < N; ++i) {
    const Integer first = (i == 0) ? 1 : 0, last = (i == N - 1) ? 1 : 0;
    if (phi(i, 0) != first || phi(i, N - 1) != last) {
      throw Error(ErrorKind::invalid_argument, "Frobenius must fix (1,0,0) and (0,0,1)");
    }
  }
  const RatMatrix f = to_rational(phi);
  return g * f == f * g;
}

bool equivariance_check(const SurfaceDescriptor& S, const MukaiIsometry& g) {
  return equivariance_check(S, g.matrix, S.mukai_frobenius());
}

Sublattice moduli_h2_lattice(const SurfaceDescriptor& S, const MukaiVector& v) {
  const SurfaceDescriptor G = S.geometric();
  const MukaiVector V = S.embed(v);
  if (V.is_zero()) throw Error(ErrorKind::invalid_argument, "zero Mukai vector");
  const Integer sq = mukai_square(G, V);
  if (sq < 0) throw Error(ErrorKind::empty_moduli, "v^2 < 0");
  const IntegerLattice L = G.mukai_lattice();
  Sublattice perp = orthogonal_complement(L, V.coords());
  if (sq > 0) return perp;

  // v lies in its own complement; pick a basis of v-perp whose first vector is
  // the primitive part of v and drop it.
  const RatMatrix K = to_rational(perp.basis);
  const RatMatrix kkt = K * K.transpose();
  const RatVector kv = K * to_rational(V.coords());
  const RatVector a_rat = inverse(kkt) * kv;
  IntVector a = to_integer(a_rat);
  const Integer g = gcd_of(a);
  for (auto& x : a) x /= g;
  const IntMatrix B = complete_to_basis(a) * perp.basis;
  IntMatrix rows(B.rows() - 1, B.cols());
  for (std::size_t i = 1; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) rows(i - 1, j) = B(i, j);
  return {IntegerLattice(restricted_gram(L.gram(), rows)), rows};
}

}  // namespace k3kit
