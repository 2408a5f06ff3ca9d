#include "k3kit/request.hpp"

#include <openssl/evp.h>

#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace k3kit {

void to_json(json& j, const NamedVector& v) {
  j = json{{"name", v.name}, {"v", v.v}, {"geometric", v.geometric}};
}

void from_json(const json& j, NamedVector& v) {
  v.name = j.at("name").get<std::string>();
  v.v = j.at("v").get<MukaiVector>();
  v.geometric = j.value("geometric", false);
}

void to_json(json& j, const CatalogEntry& e) {
  j = json{{"name", e.name}, {"surface", e.surface}, {"vectors", e.vectors}, {"notes", e.notes}};
}

void from_json(const json& j, CatalogEntry& e) {
  e.name = j.at("name").get<std::string>();
  e.surface = j.at("surface").get<SurfaceDescriptor>();
  e.vectors = j.at("vectors").get<std::vector<NamedVector>>();
  e.notes = j.value("notes", std::string());
}

bool Report::checks_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int Report::exit_code() const {
  if (error) return 2;
  return checks_passed() ? 0 : 1;
}

json Report::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) checks_json.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j{{"verb", verb},         {"result", result},   {"checks", checks_json},
         {"warnings", warnings}, {"version", version}, {"input_hash", input_hash},
         {"ok", exit_code() == 0}};
  if (error) j["error"] = json{{"kind", to_string(error->kind)}, {"message", error->message}};
  return j;
}

namespace {

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::to_pretty() const {
  std::ostringstream os;
  os << verb << "  (k3kit " << version << ", input " << input_hash.substr(0, 12) << ")\n";
  if (error) os << "error [" << to_string(error->kind) << "]: " << error->message << "\n";
  if (result.is_object()) {
    for (const auto& [k, v] : result.items()) os << "  " << k << ": " << render_value(v) << "\n";
  } else if (!result.is_null()) {
    os << "  " << render_value(result) << "\n";
  }
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string input_hash(const ComputationRequest& request) {
  const std::string payload = request.verb + "\n" + request.args.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

namespace {

// ---- argument helpers -------------------------------------------------------

const json& need(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key)) {
    throw Error(ErrorKind::parse, std::string("missing argument '") + key + "'");
  }
  return args.at(key);
}

template <class T>
T need_as(const json& args, const char* key) {
  try {
    return need(args, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("argument '") + key + "': " + e.what());
  }
}

Place place_arg(const json& args) {
  const json& p = need(args, "place");
  return parse_place(p.is_string() ? p.get<std::string>() : p.dump());
}

long long_arg(const json& args, const char* key, long fallback) {
  if (!args.contains(key)) return fallback;
  return to_int64(need_as<Integer>(args, key));
}

// Surface plus the vectors of one request, all in one coordinate system.
struct MukaiContext {
  SurfaceDescriptor surface;
  std::optional<CatalogEntry> entry;
  std::vector<MukaiVector> vectors;
  bool geometric = false;
};

MukaiContext mukai_context(const json& args, const std::vector<const char*>& keys) {
  MukaiContext ctx;
  if (args.contains("surface")) {
    ctx.surface = need_as<SurfaceDescriptor>(args, "surface");
  } else if (args.contains("catalog")) {
    std::optional<Integer> q;
    if (args.contains("q")) q = need_as<Integer>(args, "q");
    ctx.entry = catalog_get(need_as<std::string>(args, "catalog"), q);
    ctx.surface = ctx.entry->surface;
  } else {
    throw Error(ErrorKind::parse, "need a \"surface\" descriptor or a \"catalog\" entry name");
  }
  ctx.surface.validate();
  ctx.geometric = args.value("geometric", false);

  std::vector<std::pair<MukaiVector, bool>> raw;
  for (const char* key : keys) {
    const json& value = need(args, key);
    if (value.is_string()) {
      if (!ctx.entry) throw Error(ErrorKind::parse, std::string("named vector '") + key + "' needs a catalog entry");
      const NamedVector& nv = ctx.entry->vector(value.get<std::string>());
      raw.emplace_back(nv.v, nv.geometric);
      ctx.geometric = ctx.geometric || nv.geometric;
    } else {
      try {
        raw.emplace_back(value.get<MukaiVector>(), false);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::parse, std::string("argument '") + key + "': " + e.what());
      }
    }
  }
  for (auto& [v, geo] : raw) {
    ctx.vectors.push_back(ctx.geometric && !geo ? ctx.surface.embed(v) : v);
  }
  if (ctx.geometric) ctx.surface = ctx.surface.geometric();
  return ctx;
}

IntVector polarization(const json& args, const MukaiContext& ctx) {
  if (args.contains("H")) return need_as<IntVector>(args, "H");
  if (!ctx.surface.ample) throw Error(ErrorKind::missing_data, "no polarization: pass H or give the surface an ample class");
  return *ctx.surface.ample;
}

WeilPolynomialP2 weil_arg(const json& args) {
  if (args.contains("p2")) {
    WeilPolynomialP2 P;
    P.q = need_as<Integer>(args, "q");
    P.p = need_as<IntPoly>(args, "p2");
    return P;
  }
  if (args.contains("catalog")) {
    std::optional<Integer> q;
    if (args.contains("q")) q = need_as<Integer>(args, "q");
    const CatalogEntry e = catalog_get(need_as<std::string>(args, "catalog"), q);
    if (!e.surface.weil_p2 || !e.surface.q) {
      throw Error(ErrorKind::missing_data, "catalog entry '" + e.name + "' has no Weil polynomial");
    }
    return WeilPolynomialP2{*e.surface.q, *e.surface.weil_p2};
  }
  throw Error(ErrorKind::parse, "need \"q\" and \"p2\", or a \"catalog\" entry with a Weil polynomial");
}

HilbOptions hilb_options(const json& args) {
  HilbOptions o;
  o.max_n = static_cast<unsigned>(long_arg(args, "max_n", o.max_n));
  o.power_sum_ceiling = static_cast<std::size_t>(long_arg(args, "power_sum_ceiling", static_cast<long>(o.power_sum_ceiling)));
  return o;
}

QuadraticForm form_arg(const json& args, const char* key) {
  const json& f = need(args, key);
  if (f.is_string()) return diagonalize(build_lattice(f.get<std::string>()).gram());
  try {
    return f.get<QuadraticForm>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("argument '") + key + "': " + e.what());
  }
}

void add_check(Report& r, const std::string& name, bool passed, const std::string& detail = {}) {
  r.checks.push_back(Check{name, passed, detail});
}

std::string str(const Integer& x) { return x.get_str(); }

// ---- verbs ------------------------------------------------------------------

void verb_lattice(const json& args, Report& r) {
  std::map<std::string, Integer> params;
  if (args.contains("params")) params = need_as<std::map<std::string, Integer>>(args, "params");
  const json& spec = need(args, "lattice");
  const IntegerLattice L = spec.is_string() ? build_lattice(spec.get<std::string>(), params) : spec.get<IntegerLattice>();
  const Integer d = discriminant(L);
  r.result["rank"] = L.rank();
  r.result["gram"] = L.gram();
  r.result["discriminant"] = d;
  r.result["signature"] = signature(L);
  if (d != 0) r.result["discriminant_group"] = discriminant_group(L);
  if (args.contains("perp")) {
    const Sublattice s = orthogonal_complement(L, need_as<IntVector>(args, "perp"));
    r.result["perp"] = json{{"gram", s.lattice.gram()}, {"basis", s.basis},
                            {"discriminant", discriminant(s.lattice)}};
  }
  if (args.contains("phi")) {
    const Sublattice s = invariant_sublattice(LatticeIsometry(L, need_as<RatMatrix>(args, "phi")));
    r.result["invariant"] = json{{"gram", s.lattice.gram()}, {"basis", s.basis}};
  }
  if (args.contains("reflect")) {
    const json& rf = need(args, "reflect");
    r.result["reflected"] = reflect(L, need_as<RatVector>(rf, "u"), need_as<RatVector>(rf, "x"));
  }
}

void verb_forms_hasse(const json& args, Report& r) {
  const QuadraticForm f = form_arg(args, "form");
  const Place p = place_arg(args);
  r.result["form"] = f;
  r.result["place"] = p.name();
  r.result["hasse"] = hasse_invariant(f, p);
  r.result["discriminant"] = f.discriminant();
  if (args.contains("other")) {
    const QuadraticForm g = form_arg(args, "other");
    r.result["isometric"] = qp_isometric(f, g, p);
  }
}

void verb_forms_witt(const json& args, Report& r) {
  const QuadraticForm f = form_arg(args, "form");
  const Place p = place_arg(args);
  const WittClass w = witt_class(f, p);
  r.result["witt_class"] = w;
  if (args.contains("other")) r.result["equal"] = (w == witt_class(form_arg(args, "other"), p));
}

void verb_forms_sqclass(const json& args, Report& r) {
  const Rational a = need_as<Rational>(args, "a"), b = need_as<Rational>(args, "b");
  const long ell = long_arg(args, "ell", 0);
  r.result["a"] = a;
  r.result["b"] = b;
  r.result["ell"] = ell;
  r.result["unit_square_ratio"] = zl_square_class_equal(a, b, ell);
  r.result["same_qp_square_class"] = same_square_class(a, b, Place(ell));
}

void verb_forms_hilbert(const json& args, Report& r) {
  const Place p = place_arg(args);
  r.result["symbol"] = hilbert_symbol(need_as<Rational>(args, "a"), need_as<Rational>(args, "b"), p);
}

void verb_mukai_dim(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  const ModuliDimension d = moduli_dimension(ctx.surface, ctx.vectors[0]);
  r.result["v"] = ctx.vectors[0];
  r.result["v_squared"] = mukai_square(ctx.surface, ctx.vectors[0]);
  r.result["dimension"] = d.dimension;
  r.warnings = d.warnings;
}

void verb_mukai_pair(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v", "w"});
  r.result["mukai_pairing"] = mukai_pairing(ctx.surface, ctx.vectors[0], ctx.vectors[1]);
  r.result["euler_pairing"] = euler_pairing(ctx.surface, ctx.vectors[0], ctx.vectors[1]);
  r.warnings.push_back("only chi is computed; vanishing of hom and ext^2 is not asserted");
}

void verb_mukai_hilb(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  const IntVector H = polarization(args, ctx);
  const HilbertPolynomial hp = hilbert_polynomial(ctx.surface, ctx.vectors[0], H);
  r.result["chi"] = to_string(hp.chi);
  r.result["reduced"] = to_string(hp.reduced);
  r.result["chi_coefficients"] = hp.chi.coeffs();
  r.result["reduced_coefficients"] = hp.reduced.coeffs();
}

void verb_mukai_fine(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  r.result["fine"] = is_fine(ctx.surface, ctx.vectors[0]);
}

void verb_mukai_wall(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v", "sub"});
  const IntVector H = polarization(args, ctx);
  const auto a = hilbert_polynomial(ctx.surface, ctx.vectors[0], H);
  const auto b = hilbert_polynomial(ctx.surface, ctx.vectors[1], H);
  r.result["on_wall"] = on_wall(ctx.surface, ctx.vectors[0], ctx.vectors[1], H);
  r.result["reduced_v"] = to_string(a.reduced);
  r.result["reduced_sub"] = to_string(b.reduced);
  r.result["comparison"] = compare_reduced(b.reduced, a.reduced);
}

void verb_mukai_primitive(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  r.result["geometrically_primitive"] = is_geometrically_primitive(ctx.surface, ctx.vectors[0]);
  try {
    const Effectivity e = is_effective(ctx.surface, ctx.vectors[0]);
    r.result["effective"] = e.effective;
    if (e.via_ample_proxy) r.warnings.push_back("effectivity of c1 decided by the c1.H > 0 proxy");
  } catch (const Error& e) {
    r.warnings.push_back(e.what());
  }
}

void verb_isom_build(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  const MukaiIsometry g = perp_isometry(ctx.surface, ctx.vectors[0]);
  r.result = g;
  r.result["w"] = construct_w(ctx.surface.geometric(), ctx.surface.embed(ctx.vectors[0]));
  add_check(r, "preserves the Mukai pairing", verify_isometry(ctx.surface, g));
}

void verb_isom_verify(const json& args, Report& r) {
  const auto ctx = mukai_context(args, args.contains("v") ? std::vector<const char*>{"v"} : std::vector<const char*>{});
  const RatMatrix g = args.contains("matrix") ? need_as<RatMatrix>(args, "matrix")
                                              : perp_isometry(ctx.surface, ctx.vectors.at(0)).matrix;
  const bool ok = verify_isometry(ctx.surface, g);
  r.result["isometry"] = ok;
  add_check(r, "preserves the Mukai pairing", ok);
}

void verb_isom_equivariant(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  const MukaiIsometry g = perp_isometry(ctx.surface, ctx.vectors[0]);
  IntMatrix phi = ctx.surface.mukai_frobenius();
  if (args.contains("frobenius")) {
    const IntMatrix f = need_as<IntMatrix>(args, "frobenius");
    if (f.rows() == ctx.surface.geometric_rho()) {
      SurfaceDescriptor tmp = ctx.surface;
      tmp.frobenius_ns = f;
      phi = tmp.mukai_frobenius();
    } else {
      phi = f;
    }
  }
  r.result["branch"] = to_string(g.branch);
  r.result["sign"] = g.sign;
  r.result["equivariant"] = equivariance_check(ctx.surface, g.matrix, phi);
}

void verb_isom_h2(const json& args, Report& r) {
  const auto ctx = mukai_context(args, {"v"});
  const Sublattice s = moduli_h2_lattice(ctx.surface, ctx.vectors[0]);
  r.result["gram"] = s.lattice.gram();
  r.result["basis"] = s.basis;
  r.result["discriminant"] = discriminant(s.lattice);
  r.result["signature"] = signature(s.lattice);
}

void verb_zeta_validate(const json& args, Report& r) {
  const WeilPolynomialP2 P = weil_arg(args);
  const WeilReport rep = validate_weil(P, args.value("check_roots", true));
  r.result = rep;
  add_check(r, "Weil polynomial", rep.ok(), rep.ok() ? "" : rep.failures.front());
}

void verb_zeta_count(const json& args, Report& r) {
  const WeilPolynomialP2 P = weil_arg(args);
  const unsigned long n = static_cast<unsigned long>(long_arg(args, "n", 1));
  const unsigned long r0 = static_cast<unsigned long>(long_arg(args, "r", 1));
  const bool literal = args.value("literal", false);
  json rows = json::array();
  bool agree = true;
  for (unsigned long rr = 1; rr <= r0; ++rr) {
    if (!args.value("all_r", false) && rr != r0) continue;
    const Integer g = hilb_point_count(P, n, rr, HilbMethod::goettsche);
    const Integer d = hilb_point_count(P, n, rr, HilbMethod::decomposition);
    json row{{"r", rr}, {"goettsche", g}, {"decomposition", d}, {"surface", point_count_surface(P, rr)}};
    agree = agree && g == d;
    if (literal) {
      const Integer l = hilb_point_count(P, n, rr, HilbMethod::literal);
      row["literal"] = l;
      row["literal_minus_goettsche"] = Integer(l - g);
    }
    rows.push_back(row);
  }
  r.result["n"] = n;
  r.result["counts"] = rows;
  add_check(r, "goettsche = decomposition", agree);
  if (literal) {
    r.warnings.push_back(
        "literal formula uses S^(l(nu)) in place of prod_i S^(a_i); it disagrees with the generating "
        "function from n = 3 on");
  }
}

void zeta_checks(const ZetaFunction& Z, unsigned n, const WeilPolynomialP2& P, Report& r, bool counts) {
  bool integral_dual = true;
  for (const auto& [d, f] : Z.factors) {
    auto it = Z.factors.find(4 * static_cast<int>(n) - d);
    integral_dual = integral_dual && it != Z.factors.end() &&
                    poincare_dual(f, it->second, P.q, 2 * n);
  }
  add_check(r, "Poincare duality", integral_dual);
  const bool ends = Z.factors.at(0) == FactoredPoly(IntPoly::one_minus(1)) &&
                    Z.factors.at(4 * static_cast<int>(n)) == FactoredPoly(IntPoly::one_minus(pow(P.q, 2 * n)));
  add_check(r, "P_0 = 1 - t and P_top = 1 - q^{2n} t", ends);
  if (counts) {
    bool ok = true;
    for (unsigned long m = 1; m <= 5; ++m) ok = ok && Z.point_count(m) == hilb_point_count(P, n, m);
    add_check(r, "point counts match the generating function for m <= 5", ok);
  }
}

void verb_zeta_hilb(const json& args, Report& r) {
  const WeilPolynomialP2 P = weil_arg(args);
  const unsigned n = static_cast<unsigned>(long_arg(args, "n", 1));
  const ZetaFunction Z = hilb_zeta(P, n, hilb_options(args));
  r.result = Z;
  r.result["n"] = n;
  zeta_checks(Z, n, P, r, args.value("check_counts", true));
}

void verb_zeta_moduli(const json& args, Report& r) {
  const WeilPolynomialP2 P = weil_arg(args);
  const long dim = long_arg(args, "dim", 2);
  const ZetaFunction Z = moduli_zeta(P, dim, hilb_options(args));
  r.result = Z;
  r.result["dim"] = dim;
  zeta_checks(Z, static_cast<unsigned>(dim / 2), P, r, args.value("check_counts", true));
}

void verb_catalog(const json& args, Report& r) {
  if (!args.contains("name")) {
    r.result["entries"] = catalog_names();
    return;
  }
  std::optional<Integer> q;
  if (args.contains("q")) q = need_as<Integer>(args, "q");
  r.result = catalog_get(need_as<std::string>(args, "name"), q);
}

// ---- reproduction recipes ---------------------------------------------------

void recipe_hvv(Report& r) {
  const CatalogEntry e = catalog_get("hvv-f2");
  const SurfaceDescriptor& S = e.surface;
  const MukaiVector v = e.vector("v").v;
  const IntegerLattice ns(S.ns_gram, "NS");

  const Integer d_ns = discriminant(ns);
  add_check(r, "disc NS(S) = -5", d_ns == -5, str(d_ns));

  const MukaiVector w = construct_w(S, v);
  add_check(r, "w = (1,0,-5)", w == e.vector("w").v, to_string(w));
  const ModuliDimension dim = moduli_dimension(S, v);
  add_check(r, "dim M(v) = 12", dim.dimension == 12, str(dim.dimension));
  add_check(r, "M(v) is not fine", !is_fine(S, v));

  const Sublattice perp = moduli_h2_lattice(S, v);
  const Integer d_perp = discriminant(perp.lattice);
  add_check(r, "disc(v-perp) = 2", d_perp == 2, str(d_perp));

  const Integer n = (mukai_square(S, v) + 2) / 2;
  const IntegerLattice line = build_lattice("<2-2n>", {{"n", n}});
  const Sublattice inv = invariant_sublattice(LatticeIsometry(ns, to_rational(IntMatrix::identity(S.rho()))));
  const IntegerLattice rhs = direct_sum(inv.lattice, line);
  const Integer d_rhs = discriminant(rhs);
  add_check(r, "disc(NS + <2-2n>) = 50", d_rhs == 50, str(d_rhs));

  const MukaiIsometry g = perp_isometry(S, v);
  add_check(r, "reflection through v-w sends v to w",
            g.branch == IsometryBranch::reflect_v_minus_w && g.sign == 1 && verify_isometry(S, g),
            to_string(g.branch));

  add_check(r, "50/2 is not a unit square in Z_5", !zl_square_class_equal(d_rhs, d_perp, 5));
  for (long ell : {2, 3, 7}) {
    add_check(r, "50/2 is a unit square in Z_" + std::to_string(ell), zl_square_class_equal(d_rhs, d_perp, ell));
  }
  add_check(r, "the two forms agree over Q_5",
            qp_isometric(diagonalize(perp.lattice.gram()), diagonalize(rhs.gram()), Place(5)));

  r.result["ns_discriminant"] = d_ns;
  r.result["perp_gram"] = perp.lattice.gram();
  r.result["perp_discriminant"] = d_perp;
  r.result["invariant_plus_line_gram"] = rhs.gram();
  r.result["invariant_plus_line_discriminant"] = d_rhs;
  r.result["w"] = w;
  r.result["dimension"] = dim.dimension;
}

void recipe_f3_wall(Report& r) {
  const CatalogEntry e = catalog_get("hassva-f3");
  const SurfaceDescriptor G = e.surface.geometric();
  const MukaiVector v = e.surface.embed(e.vector("v").v);
  const MukaiVector c1 = e.vector("O(-C1)").v, c2 = e.vector("O(-C2)").v;
  const IntVector H = *G.ample;

  const HilbertPolynomial hv = hilbert_polynomial(G, v, H), hs = hilbert_polynomial(G, c2, H);
  const RatPoly expected{1, -1, 1};
  add_check(r, "reduced p_E = t^2 - t + 1", hv.reduced == expected, to_string(hv.reduced));
  add_check(r, "reduced p_O(-C2) = t^2 - t + 1", hs.reduced == expected, to_string(hs.reduced));
  add_check(r, "H lies on the wall for O(-C2) in E", on_wall(G, v, c2, H));
  const Integer chi = euler_pairing(G, c1, c2);
  add_check(r, "chi(O(-C1), O(-C2)) = -3", chi == -3, str(chi));
  add_check(r, "v is geometrically primitive", is_geometrically_primitive(e.surface, e.vector("v").v));
  add_check(r, "Frobenius swaps C1 and C2", *e.surface.frobenius_ns == IntMatrix{{0, 1}, {1, 0}});
  const MukaiIsometry g = perp_isometry(e.surface, e.vector("v").v);
  add_check(r, "g commutes with Frobenius", equivariance_check(e.surface, g), to_string(g.branch));

  r.result["chi_E"] = to_string(hv.chi);
  r.result["reduced"] = to_string(hv.reduced);
  r.result["euler_pairing"] = chi;
  r.result["branch"] = to_string(g.branch);
  r.result["sign"] = g.sign;
}

void recipe_witt(Report& r) {
  const Place p3(3);
  const WittClass k3 = witt_class(diagonalize(build_lattice("E8(-1)^2 + U^3").gram()), p3);
  add_check(r, "E8(-1)^2 + U^3 = 0 in W(Q_3)", k3.is_zero(), to_string(k3));
  for (long m : {1, 3}) {
    const bool differ = !(witt_class(QuadraticForm{m}, p3) == witt_class(QuadraticForm{-m}, p3));
    add_check(r, "<" + std::to_string(m) + "> != <" + std::to_string(-m) + "> in W(Q_3)", differ);
  }
  bool exactly_one = true;
  for (long n = 2; n <= 40; ++n) {
    int hits = 0;
    for (long m : {-3, -1, 1, 3}) hits += qp_isometric(QuadraticForm{2 - 2 * n}, QuadraticForm{m}, p3) ? 1 : 0;
    exactly_one = exactly_one && hits == 1;
  }
  add_check(r, "each <2-2n> (2 <= n <= 40) matches exactly one of <-3>,<-1>,<1>,<3> over Q_3", exactly_one);
  add_check(r, "the only roots of unity in Q_3 are +-1",
            nth_root_of_unity_exists(2, 3) && !nth_root_of_unity_exists(3, 3) && !nth_root_of_unity_exists(5, 3));
  r.result["k3_lattice_class"] = k3;
}

void recipe_trivial_hilb(Report& r) {
  const CatalogEntry e = catalog_get("trivial-q", Integer(2));
  const WeilPolynomialP2 P{*e.surface.q, *e.surface.weil_p2};
  const Integer g = hilb_point_count(P, 2, 1), d = hilb_point_count(P, 2, 1, HilbMethod::decomposition);
  add_check(r, "#S^[2](F_2) = 1351 (generating function)", g == 1351, str(g));
  add_check(r, "#S^[2](F_2) = 1351 (decomposition)", d == 1351, str(d));
  const ZetaFunction Z = hilb_zeta(P, 2);
  std::vector<Integer> betti = Z.betti();
  const std::vector<Integer> expected{1, 0, 23, 0, 276, 0, 23, 0, 1};
  Integer euler = 0;
  for (const auto& b : betti) euler += b;
  add_check(r, "Betti numbers of S^[2]", betti == expected);
  add_check(r, "Euler characteristic 324", euler == 324, str(euler));
  add_check(r, "zeta point count over F_2", Z.point_count(1) == 1351);
  r.result["zeta"] = Z.to_string();
  r.result["betti"] = betti;
}

const std::map<std::string, std::function<void(Report&)>>& recipes() {
  static const std::map<std::string, std::function<void(Report&)>> table{
      {"example-3.1", recipe_hvv},
      {"example-1.x-f3-wall", recipe_f3_wall},
      {"witt-q3", recipe_witt},
      {"hilb-trivial-f2", recipe_trivial_hilb},
  };
  return table;
}

void verb_reproduce(const json& args, Report& r) {
  if (!args.contains("anchor")) {
    r.result["recipes"] = reproduce_anchors();
    return;
  }
  const std::string anchor = need_as<std::string>(args, "anchor");
  const auto& table = recipes();
  auto it = table.find(anchor);
  if (it == table.end()) {
    std::string known;
    for (const auto& [k, f] : table) known += (known.empty() ? "" : ", ") + k;
    throw Error(ErrorKind::invalid_argument, "unknown recipe '" + anchor + "'; available: " + known);
  }
  r.result["anchor"] = anchor;
  it->second(r);
}

using VerbFn = void (*)(const json&, Report&);

const std::map<std::string, VerbFn>& verbs() {
  static const std::map<std::string, VerbFn> table{
      {"lattice", verb_lattice},
      {"forms.hasse", verb_forms_hasse},
      {"forms.witt", verb_forms_witt},
      {"forms.sqclass", verb_forms_sqclass},
      {"forms.hilbert", verb_forms_hilbert},
      {"mukai.dim", verb_mukai_dim},
      {"mukai.pair", verb_mukai_pair},
      {"mukai.hilb", verb_mukai_hilb},
      {"mukai.fine", verb_mukai_fine},
      {"mukai.wall", verb_mukai_wall},
      {"mukai.primitive", verb_mukai_primitive},
      {"isom.build", verb_isom_build},
      {"isom.verify", verb_isom_verify},
      {"isom.equivariant", verb_isom_equivariant},
      {"isom.h2", verb_isom_h2},
      {"zeta.validate", verb_zeta_validate},
      {"zeta.count", verb_zeta_count},
      {"zeta.hilb", verb_zeta_hilb},
      {"zeta.moduli", verb_zeta_moduli},
      {"catalog", verb_catalog},
      {"reproduce", verb_reproduce},
  };
  return table;
}

}  // namespace

std::vector<std::string> known_verbs() {
  std::vector<std::string> out;
  for (const auto& [k, f] : verbs()) out.push_back(k);
  return out;
}

std::vector<std::string> reproduce_anchors() {
  std::vector<std::string> out;
  for (const auto& [k, f] : recipes()) out.push_back(k);
  return out;
}

Report execute_request(const ComputationRequest& request) {
  Report r;
  r.verb = request.verb;
  r.input_hash = input_hash(request);
  try {
    auto it = verbs().find(request.verb);
    if (it == verbs().end()) throw Error(ErrorKind::invalid_argument, "unknown verb '" + request.verb + "'");
    it->second(request.args, r);
  } catch (const Error& e) {
    r.error = ReportError{e.kind(), request.verb + ": " + e.what()};
  } catch (const json::exception& e) {
    r.error = ReportError{ErrorKind::parse, request.verb + ": " + e.what()};
  }
  return r;
}

}  // namespace k3kit
