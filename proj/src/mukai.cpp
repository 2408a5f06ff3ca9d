#include "k3kit/mukai.hpp"

#include <sstream>

namespace k3kit {

IntVector MukaiVector::coords() const {
  IntVector out;
  out.reserve(c1.size() + 2);
  out.push_back(r);
  out.insert(out.end(), c1.begin(), c1.end());
  out.push_back(s);
  return out;
}

MukaiVector MukaiVector::from_coords(const IntVector& coords) {
  if (coords.size() < 2) throw Error(ErrorKind::dimension, "Mukai coordinates need at least r and s");
  return MukaiVector{coords.front(), IntVector(coords.begin() + 1, coords.end() - 1), coords.back()};
}

MukaiVector MukaiVector::operator-() const {
  MukaiVector out{-r, c1, -s};
  for (auto& x : out.c1) x = -x;
  return out;
}

bool MukaiVector::is_zero() const {
  if (r != 0 || s != 0) return false;
  for (const auto& x : c1)
    if (x != 0) return false;
  return true;
}

std::string to_string(const MukaiVector& v) {
  std::ostringstream os;
  os << '(' << v.r << ", (";
  for (std::size_t i = 0; i < v.c1.size(); ++i) os << (i ? "," : "") << v.c1[i];
  os << "), " << v.s << ')';
  return os.str();
}

namespace {

void check_length(const SurfaceDescriptor& S, const IntVector& c1) {
  if (c1.size() != S.rho()) {
    throw Error(ErrorKind::dimension, "class has " + std::to_string(c1.size()) +
                                          " coordinates, NS has rank " + std::to_string(S.rho()));
  }
}

}  // namespace

void SurfaceDescriptor::validate() const {
  if (!ns_gram.is_square()) throw Error(ErrorKind::dimension, "NS Gram must be square");
  if (!ns_gram.is_symmetric()) throw Error(ErrorKind::invalid_argument, "NS Gram must be symmetric");
  for (std::size_t i = 0; i < rho(); ++i) {
    if (ns_gram(i, i) % 2 != 0) throw Error(ErrorKind::invalid_argument, "NS Gram must be even");
  }
  if (rho() > 0) {
    const auto sig = signature(IntegerLattice(ns_gram));
    if (sig.positive != 1 || sig.null != 0) {
      throw Error(ErrorKind::invalid_argument, "NS Gram must have signature (1, rho-1)");
    }
  }
  if (q && *q < 2) throw Error(ErrorKind::invalid_argument, "q must be a prime power >= 2");
  const IntMatrix& geo = geometric_gram();
  if (geo_ns_gram) {
    if (!geo.is_square() || !geo.is_symmetric()) {
      throw Error(ErrorKind::invalid_argument, "geometric NS Gram must be square and symmetric");
    }
    if (!embedding && geo.rows() != rho()) {
      throw Error(ErrorKind::missing_data, "embedding required when geometric rank differs");
    }
  }
  if (embedding) {
    const IntMatrix& E = *embedding;
    if (E.rows() != geo.rows() || E.cols() != rho()) {
      throw Error(ErrorKind::dimension, "embedding must be rho_bar x rho");
    }
    if (E.transpose() * geo * E != ns_gram) {
      throw Error(ErrorKind::not_isometry, "embedding does not carry the geometric form to the NS form");
    }
    if (rho() > 0 && !is_saturated(E.transpose())) {
      throw Error(ErrorKind::invalid_argument, "embedding image is not primitive");
    }
  }
  if (frobenius_ns) {
    const IntMatrix& F = *frobenius_ns;
    if (F.rows() != geo.rows() || F.cols() != geo.rows()) {
      throw Error(ErrorKind::dimension, "Frobenius must act on the geometric NS lattice");
    }
    if (F.transpose() * geo * F != geo) {
      throw Error(ErrorKind::not_isometry, "Frobenius does not preserve the geometric NS form");
    }
  }
  if (ample) {
    check_length(*this, *ample);
    if (ns_pairing(*this, *ample, *ample) <= 0) {
      throw Error(ErrorKind::invalid_argument, "ample class must have positive square");
    }
  }
  if (weil_p2 && (*weil_p2)[0] != 1) {
    throw Error(ErrorKind::invalid_argument, "Weil polynomial must have constant term 1");
  }
}

IntVector SurfaceDescriptor::embed_class(const IntVector& c1) const {
  check_length(*this, c1);
  if (embedding) return (*embedding) * c1;
  if (geometric_rho() != rho()) {
    throw Error(ErrorKind::missing_data, "no embedding NS(S) -> NS(S-bar) was given");
  }
  return c1;
}

MukaiVector SurfaceDescriptor::embed(const MukaiVector& v) const {
  return MukaiVector{v.r, embed_class(v.c1), v.s};
}

SurfaceDescriptor SurfaceDescriptor::geometric() const {
  SurfaceDescriptor out(geometric_gram());
  out.q = q;
  out.frobenius_ns = frobenius_ns;
  out.weil_p2 = weil_p2;
  if (ample) out.ample = embed_class(*ample);
  return out;
}

IntMatrix SurfaceDescriptor::mukai_gram() const {
  const std::size_t n = rho() + 2;
  IntMatrix g(n, n, Integer(0));
  g(0, n - 1) = -1;
  g(n - 1, 0) = -1;
  for (std::size_t i = 0; i < rho(); ++i)
    for (std::size_t j = 0; j < rho(); ++j) g(i + 1, j + 1) = ns_gram(i, j);
  return g;
}

IntegerLattice SurfaceDescriptor::mukai_lattice() const { return IntegerLattice(mukai_gram(), "N(S)"); }

IntMatrix SurfaceDescriptor::mukai_frobenius() const {
  const std::size_t rb = geometric_rho();
  IntMatrix m = IntMatrix::identity(rb + 2);
  if (frobenius_ns) {
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j) m(i + 1, j + 1) = (*frobenius_ns)(i, j);
  }
  return m;
}

Integer ns_pairing(const SurfaceDescriptor& S, const IntVector& a, const IntVector& b) {
  check_length(S, a);
  check_length(S, b);
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * S.ns_gram(i, j) * b[j];
  }
  return acc;
}

Integer mukai_pairing(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& w) {
  return ns_pairing(S, v.c1, w.c1) - v.r * w.s - w.r * v.s;
}

Integer euler_pairing(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& w) {
  return -mukai_pairing(S, v, w);
}

MukaiVector mukai_vector_of_sheaf(const Integer& rank, const IntVector& c1, const Integer& chi) {
  return MukaiVector{rank, c1, chi - rank};
}

Effectivity is_effective(const SurfaceDescriptor& S, const MukaiVector& v,
                         const EffectivityOracle& oracle) {
  check_length(S, v.c1);
  if (v.r > 0) return {true, false};
  if (v.r < 0) return {false, false};
  bool c1_zero = true;
  for (const auto& x : v.c1) c1_zero = c1_zero && x == 0;
  if (c1_zero) return {v.s > 0, false};
  if (oracle) return {oracle(v.c1), false};
  if (!S.ample) {
    throw Error(ErrorKind::missing_data,
                "rank-zero vector with c1 != 0: need an effectivity oracle or an ample class");
  }
  return {ns_pairing(S, v.c1, *S.ample) > 0, true};
}

bool is_geometrically_primitive(const SurfaceDescriptor& S, const MukaiVector& v) {
  const MukaiVector image = S.embed(v);
  if (image.is_zero()) throw Error(ErrorKind::invalid_argument, "zero Mukai vector");
  return gcd_of(image.coords()) == 1;
}

ModuliDimension moduli_dimension(const SurfaceDescriptor& S, const MukaiVector& v) {
  const Integer sq = mukai_square(S, v);
  if (sq < 0) {
    throw Error(ErrorKind::empty_moduli, "v^2 = " + sq.get_str() + " < 0: no stable sheaves");
  }
  ModuliDimension out{sq + 2, {}};
  try {
    const Effectivity e = is_effective(S, v);
    if (!e.effective) out.warnings.push_back("v is not effective");
    if (e.via_ample_proxy) out.warnings.push_back("effectivity of c1 decided by the c1.H > 0 proxy");
  } catch (const Error& err) {
    out.warnings.push_back(std::string("effectivity undecided: ") + err.what());
  }
  try {
    if (!is_geometrically_primitive(S, v)) out.warnings.push_back("v is not geometrically primitive");
  } catch (const Error& err) {
    out.warnings.push_back(std::string("primitivity undecided: ") + err.what());
  }
  return out;
}

HilbertPolynomial hilbert_polynomial(const SurfaceDescriptor& S, const MukaiVector& v,
                                     const IntVector& H) {
  if (v.r <= 0) throw Error(ErrorKind::invalid_argument, "Hilbert polynomial needs positive rank");
  const Integer h2 = ns_pairing(S, H, H);
  if (h2 <= 0) throw Error(ErrorKind::invalid_argument, "polarization must have positive square");
  RatPoly chi{Rational(v.r + v.s), Rational(ns_pairing(S, v.c1, H)), make_rational(v.r * h2, 2)};
  const Rational lead = chi.leading();
  return {chi, chi.scaled(Rational(1 / lead))};
}

int compare_reduced(const RatPoly& a, const RatPoly& b) {
  const long top = std::max(a.degree(), b.degree());
  for (long k = top; k >= 0; --k) {
    const int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool on_wall(const SurfaceDescriptor& S, const MukaiVector& v, const MukaiVector& sub,
             const IntVector& H) {
  return hilbert_polynomial(S, v, H).reduced == hilbert_polynomial(S, sub, H).reduced;
}

bool is_fine(const SurfaceDescriptor& S, const MukaiVector& v) {
  check_length(S, v.c1);
  if (v.is_zero()) throw Error(ErrorKind::invalid_argument, "zero Mukai vector");
  IntVector gens{v.r, v.s};
  const IntVector gc = S.ns_gram * v.c1;
  gens.insert(gens.end(), gc.begin(), gc.end());
  return gcd_of(gens) == 1;
}

MukaiVector twist_by_exp(const SurfaceDescriptor& S, const MukaiVector& v, const IntVector& h) {
  check_length(S, v.c1);
  check_length(S, h);
  const Integer rh2 = v.r * ns_pairing(S, h, h);
  if (rh2 % 2 != 0) throw Error(ErrorKind::parity, "r h^2 is odd, so v.exp(h) is not integral");
  MukaiVector out = v;
  for (std::size_t i = 0; i < h.size(); ++i) out.c1[i] += v.r * h[i];
  out.s += ns_pairing(S, v.c1, h) + rh2 / 2;
  return out;
}

RatMatrix twist_matrix(const SurfaceDescriptor& S, const IntVector& h) {
  check_length(S, h);
  const std::size_t n = S.rho() + 2;
  RatMatrix m = RatMatrix::identity(n);
  const IntVector gh = S.ns_gram * h;
  for (std::size_t i = 0; i < S.rho(); ++i) {
    m(i + 1, 0) = h[i];
    m(n - 1, i + 1) = gh[i];
  }
  m(n - 1, 0) = make_rational(ns_pairing(S, h, h), 2);
  return m;
}

}  // namespace k3kit
