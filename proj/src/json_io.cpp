#include "k3kit/json_io.hpp"

#include <sstream>

namespace nlohmann {

void adl_serializer<mpz_class>::to_json(json& j, const mpz_class& x) {
  if (k3kit::fits_int64(x)) j = k3kit::to_int64(x);
  else j = x.get_str();
}

void adl_serializer<mpz_class>::from_json(const json& j, mpz_class& x) {
  if (j.is_number_integer()) x = mpz_class(j.dump());
  else if (j.is_string()) x = k3kit::parse_integer(j.get<std::string>());
  else throw k3kit::Error(k3kit::ErrorKind::parse, "expected an integer, got " + j.dump());
}

void adl_serializer<mpq_class>::to_json(json& j, const mpq_class& x) {
  if (x.get_den() == 1) adl_serializer<mpz_class>::to_json(j, x.get_num());
  else j = k3kit::to_string(x);
}

void adl_serializer<mpq_class>::from_json(const json& j, mpq_class& x) {
  if (j.is_number_integer()) x = mpq_class(mpz_class(j.dump()));
  else if (j.is_string()) x = k3kit::parse_rational(j.get<std::string>());
  else throw k3kit::Error(k3kit::ErrorKind::parse, "expected a rational (\"p/q\"), got " + j.dump());
}

}  // namespace nlohmann

namespace k3kit {

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const IntegerLattice& l) {
  j = json{{"gram", l.gram()}};
  if (!l.label().empty()) j["label"] = l.label();
}

void from_json(const json& j, IntegerLattice& l) {
  if (j.is_string()) {
    l = build_lattice(j.get<std::string>());
    return;
  }
  if (!j.is_object()) throw Error(ErrorKind::parse, "lattice must be an object or expression string");
  std::map<std::string, Integer> params;
  if (j.contains("params")) params = j.at("params").get<std::map<std::string, Integer>>();
  if (j.contains("expr")) {
    l = build_lattice(j.at("expr").get<std::string>(), params);
    return;
  }
  if (!j.contains("gram")) throw Error(ErrorKind::parse, "lattice needs \"gram\" or \"expr\"");
  l = IntegerLattice(j.at("gram").get<IntMatrix>(), j.value("label", std::string()));
}

void to_json(json& j, const MukaiVector& v) { j = json{{"r", v.r}, {"c1", v.c1}, {"s", v.s}}; }

void from_json(const json& j, MukaiVector& v) {
  if (j.is_array()) {
    v = MukaiVector::from_coords(j.get<IntVector>());
    return;
  }
  if (!j.is_object() || !j.contains("r") || !j.contains("s")) {
    throw Error(ErrorKind::parse, "Mukai vector must be {\"r\",\"c1\",\"s\"} or a coordinate array");
  }
  v.r = j.at("r").get<Integer>();
  v.c1 = j.value("c1", json::array()).get<IntVector>();
  v.s = j.at("s").get<Integer>();
}

void to_json(json& j, const SurfaceDescriptor& S) {
  j = json{{"ns_gram", S.ns_gram}};
  put_optional(j, "q", S.q);
  put_optional(j, "geo_ns_gram", S.geo_ns_gram);
  put_optional(j, "embedding", S.embedding);
  put_optional(j, "frobenius_ns", S.frobenius_ns);
  put_optional(j, "ample", S.ample);
  put_optional(j, "weil_p2", S.weil_p2);
}

void from_json(const json& j, SurfaceDescriptor& S) {
  if (!j.is_object() || !j.contains("ns_gram")) {
    throw Error(ErrorKind::parse, "surface descriptor needs \"ns_gram\"");
  }
  S = SurfaceDescriptor(j.at("ns_gram").get<IntMatrix>());
  get_optional(j, "q", S.q);
  get_optional(j, "geo_ns_gram", S.geo_ns_gram);
  get_optional(j, "embedding", S.embedding);
  get_optional(j, "frobenius_ns", S.frobenius_ns);
  get_optional(j, "ample", S.ample);
  get_optional(j, "weil_p2", S.weil_p2);
  S.validate();
}

void to_json(json& j, const QuadraticForm& f) {
  j = json{{"diagonal", f.entries()}, {"nullity", f.nullity()}};
}

void from_json(const json& j, QuadraticForm& f) {
  if (j.is_array()) {
    f = QuadraticForm(j.get<RatVector>());
  } else if (j.is_object() && j.contains("diagonal")) {
    RatVector d = j.at("diagonal").get<RatVector>();
    d.insert(d.end(), j.value("nullity", std::size_t{0}), Rational(0));
    f = QuadraticForm(d);
  } else if (j.is_object() && j.contains("gram")) {
    f = diagonalize(j.at("gram").get<RatMatrix>());
  } else if (j.is_object() && j.contains("expr")) {
    f = diagonalize(j.get<IntegerLattice>().gram());
  } else {
    throw Error(ErrorKind::parse, "form must be {\"diagonal\": [...]}, {\"gram\": [[...]]} or {\"expr\": ...}");
  }
}

void to_json(json& j, const WittClass& w) {
  j = json{{"place", w.place().name()}, {"representative", w.representative()}, {"zero", w.is_zero()},
           {"text", to_string(w)}};
}

void to_json(json& j, const MukaiIsometry& g) {
  j = json{{"branch", to_string(g.branch)},
           {"sign", g.sign},
           {"matrix", g.matrix},
           {"target", g.target},
           {"mirrors", g.mirrors},
           {"acts_as_identity_on_transcendental", g.acts_as_identity_on_transcendental}};
}

void to_json(json& j, const WeilPolynomialP2& P) { j = json{{"q", P.q}, {"p2", P.p}}; }

void from_json(const json& j, WeilPolynomialP2& P) {
  if (!j.is_object() || !j.contains("q") || !j.contains("p2")) {
    throw Error(ErrorKind::parse, "Weil polynomial input needs \"q\" and \"p2\"");
  }
  P.q = j.at("q").get<Integer>();
  P.p = j.at("p2").get<IntPoly>();
}

void to_json(json& j, const WeilReport& r) {
  j = json{{"ok", r.ok()},
           {"degree_ok", r.degree_ok},
           {"constant_term_ok", r.constant_term_ok},
           {"functional_equation_ok", r.functional_equation_ok},
           {"sign", r.sign},
           {"failures", r.failures}};
  if (r.root_moduli_checked) {
    j["root_moduli"] = json{{"ok", r.root_moduli_ok}, {"max_deviation", r.max_root_deviation},
                            {"advisory", true}};
  }
}

void to_json(json& j, const FactoredPoly& f) {
  j = json::array();
  for (const auto& [b, e] : f.factors()) j.push_back(json{{"base", b}, {"exponent", e}});
}

void to_json(json& j, const ZetaFunction& Z) {
  json factors = json::array();
  for (const auto& [d, f] : Z.factors) {
    json entry{{"degree", d}, {"factored", f}};
    // Middle-degree factors of S^[4] have degree in the thousands with huge
    // coefficients; those stay factored.
    if (f.degree() <= kMaxExpandedDegree) entry["poly"] = f.expand();
    factors.push_back(std::move(entry));
  }
  j = json{{"q", Z.q}, {"factors", factors}, {"betti", Z.betti()}, {"rendering", Z.to_string()}};
}

void to_json(json& j, const Signature& s) {
  j = json{{"positive", s.positive}, {"negative", s.negative}, {"null", s.null}};
}

void to_json(json& j, const Sublattice& s) { j = json{{"gram", s.lattice.gram()}, {"basis", s.basis}}; }

json parse_json_argument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
  }
  json out = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorKind::parse, "empty entry in list '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace k3kit
