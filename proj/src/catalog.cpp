#include "k3kit/catalog.hpp"

namespace k3kit {

const NamedVector& CatalogEntry::vector(const std::string& wanted) const {
  for (const auto& nv : vectors)
    if (nv.name == wanted) return nv;
  throw Error(ErrorKind::invalid_argument, "entry '" + name + "' has no vector named '" + wanted + "'");
}

std::vector<std::string> catalog_names() { return {"hassva-f3", "hvv-f2", "trivial-q"}; }

namespace {

CatalogEntry hassva_f3() {
  CatalogEntry e;
  e.name = "hassva-f3";
  SurfaceDescriptor& S = e.surface;
  S.ns_gram = IntMatrix{{2}};
  S.q = Integer(3);
  S.geo_ns_gram = IntMatrix{{-2, 3}, {3, -2}};
  S.embedding = IntMatrix{{1}, {1}};
  S.frobenius_ns = IntMatrix{{0, 1}, {1, 0}};
  S.ample = IntVector{1};
  e.vectors = {
      {"v", MukaiVector{2, {-1}, 0}, false},
      {"O(-C1)", MukaiVector{1, {-1, 0}, 0}, true},
      {"O(-C2)", MukaiVector{1, {0, -1}, 0}, true},
  };
  e.notes =
      "Degree two K3 surface over F_3, w^2 = 2y^2(x^2+2xy+2y^2)^2 + (2x+z)(x^5+x^4y+x^3yz+x^2y^3"
      "+x^2y^2z+2x^2z^3+xy^4+2xy^3z+xy^2z^2+y^5+2y^4z+2y^3z^2+2z^5) in P(3,1,1,1). "
      "NS(S) = Z H, NS(S-bar) = Z C1 + Z C2 with C1, C2 (-2)-curves over F_9 above the "
      "tritangent line 2x+z = 0, H = C1 + C2, and Frobenius swapping C1 and C2. "
      "v = (2,-H,0) is the class of an extension of O(-C1) by O(-C2); H lies on a wall for v.";
  return e;
}

CatalogEntry hvv_f2() {
  CatalogEntry e;
  e.name = "hvv-f2";
  SurfaceDescriptor& S = e.surface;
  S.ns_gram = IntMatrix{{-2, 3}, {3, -2}};
  S.q = Integer(2);
  e.vectors = {
      {"v", MukaiVector{5, {2, 3}, 0}, false},
      {"w", MukaiVector{1, {0, 0}, -5}, false},
  };
  e.notes =
      "K3 surface over F_2 with NS(S) = NS(S-bar) of rank 2 and square-free discriminant -5. "
      "v = (5,(2,3),0) is geometrically primitive with v^2 = 10, so M(v) has dimension 12 and is "
      "not fine; w = (1,0,-5) gives S^[6].  The complement of v in N(S) has discriminant 2 while "
      "NS + <-10> has discriminant 50, and 50/2 = 25 is not a unit square in Z_5.";
  return e;
}

CatalogEntry trivial_q(const Integer& q) {
  if (q < 2) throw Error(ErrorKind::invalid_argument, "trivial-q needs q >= 2");
  CatalogEntry e;
  e.name = "trivial-q";
  SurfaceDescriptor& S = e.surface;
  S.ns_gram = IntMatrix{{2}};
  S.q = q;
  S.ample = IntVector{1};
  S.weil_p2 = IntPoly::one_minus(q).pow(22);
  e.vectors = {{"O", MukaiVector{1, {0}, 1}, false}};
  e.notes =
      "Synthetic test surface: every Frobenius eigenvalue on H^2 equals q, P2 = (1 - q t)^22. "
      "Only the zeta data is meaningful; the NS Gram is a placeholder degree-two polarization.";
  return e;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name, const std::optional<Integer>& q) {
  if (name == "trivial-q") return trivial_q(q.value_or(Integer(2)));
  if (q) throw Error(ErrorKind::invalid_argument, "only trivial-q takes a q parameter");
  if (name == "hassva-f3") return hassva_f3();
  if (name == "hvv-f2") return hvv_f2();
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorKind::invalid_argument, "unknown catalog entry '" + name + "'; available: " + known);
}

}  // namespace k3kit
