#include <doctest.h>

#include "k3kit/request.hpp"
#include "support.hpp"

using namespace k3test;

namespace {

Report run(const std::string& verb, const json& args) { return execute_request(ComputationRequest{verb, args}); }

bool has_entry(const std::vector<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("catalog entries") {
  const auto names = catalog_names();
  CHECK(names.size() == 3);
  for (const auto& name : names) {
    const CatalogEntry e = catalog_get(name);
    CHECK(e.name == name);
    CHECK_NOTHROW(e.surface.validate());
    CHECK_FALSE(e.notes.empty());
    CHECK_FALSE(e.vectors.empty());
  }

  const auto hvv = catalog_get("hvv-f2");
  CHECK(discriminant(IntegerLattice(hvv.surface.ns_gram)) == -5);
  CHECK(hvv.vector("v").v == MukaiVector{5, {2, 3}, 0});
  CHECK(hvv.vector("w").v == MukaiVector{1, {0, 0}, -5});
  CHECK(hvv.surface.q == Integer(2));

  const auto f3 = catalog_get("hassva-f3");
  CHECK(f3.surface.frobenius_ns == IntMatrix{{0, 1}, {1, 0}});
  CHECK(f3.surface.geo_ns_gram == IntMatrix{{-2, 3}, {3, -2}});
  CHECK(f3.surface.embed_class(IntVector{1}) == IntVector{1, 1});
  CHECK(f3.vector("O(-C1)").geometric);
  CHECK(mukai_square(f3.surface, f3.vector("v").v) == 2);

  const auto t5 = catalog_get("trivial-q", Integer(5));
  CHECK(t5.surface.weil_p2 == IntPoly::one_minus(5).pow(22));
  CHECK(catalog_get("trivial-q").surface.q == Integer(2));
  CHECK(error_kind([] { catalog_get("trivial-q", Integer(1)); }) == ErrorKind::invalid_argument);
  CHECK_THROWS_AS(catalog_get("hvv-f2").vector("nope"), Error);

  try {
    catalog_get("nonsense");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
    for (const auto& name : names) CHECK(std::string(e.what()).find(name) != std::string::npos);
  }
}

TEST_CASE("catalog entries round-trip through JSON") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    const json j = e;
    const CatalogEntry back = j.get<CatalogEntry>();
    CHECK(json(back) == j);
    CHECK(back.name == e.name);
    CHECK(back.vectors == e.vectors);
    CHECK(back.notes == e.notes);
    CHECK(back.surface.ns_gram == e.surface.ns_gram);
    CHECK(back.surface.geo_ns_gram == e.surface.geo_ns_gram);
    CHECK(back.surface.embedding == e.surface.embedding);
    CHECK(back.surface.frobenius_ns == e.surface.frobenius_ns);
    CHECK(back.surface.ample == e.surface.ample);
    CHECK(back.surface.weil_p2 == e.surface.weil_p2);
    CHECK(back.surface.q == e.surface.q);
    CHECK(json::parse(j.dump()) == j);
  }
}

TEST_CASE("JSON conversions") {
  const json v = json::parse(R"({"r": 2, "c1": [-1], "s": 0})");
  CHECK(v.get<MukaiVector>() == MukaiVector{2, {-1}, 0});
  const json S = json::parse(
      R"({"q": 3, "ns_gram": [[2]], "geo_ns_gram": [[-2,3],[3,-2]], "embedding": [[1],[1]],
          "frobenius_ns": [[0,1],[1,0]], "ample": [1]})");
  const auto surface = S.get<SurfaceDescriptor>();
  CHECK_NOTHROW(surface.validate());
  CHECK(surface.geometric_rho() == 2);
  CHECK(json(Rational(-5, 2)).get<Rational>() == Rational(-5, 2));
  CHECK(json::parse(R"("7/3")").get<Rational>() == Rational(7, 3));
  const Integer big("123456789012345678901234567890");
  CHECK(json(big).get<Integer>() == big);
  CHECK(parse_json_argument("[1, 2]") == json::array({1, 2}));
}

TEST_CASE("reports are deterministic and hashed") {
  const json args = json::parse(R"({"name": "hvv-f2"})");
  const Report a = run("catalog", args), b = run("catalog", args);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.input_hash == "1c3d54f956acde58e9a6e446284bd71c19b3a2d4c10f85210278610b6c0b7c2a");
  CHECK(a.version == kVersion);
  CHECK(a.to_json().at("version") == kVersion);
  CHECK(a.to_json().at("input_hash") == a.input_hash);
  CHECK(run("catalog", json::parse(R"({"name": "hassva-f3"})")).input_hash != a.input_hash);
  CHECK(input_hash(ComputationRequest{"catalog", args}) == a.input_hash);
  CHECK(a.exit_code() == 0);
  CHECK_FALSE(a.to_pretty().empty());
}

TEST_CASE("verbs and errors") {
  for (const auto& verb : {"lattice", "forms.hasse", "forms.witt", "forms.sqclass", "forms.hilbert", "mukai.dim",
                           "mukai.pair", "mukai.hilb", "mukai.fine", "mukai.wall", "mukai.primitive", "isom.build",
                           "isom.verify", "isom.equivariant", "isom.h2", "zeta.validate", "zeta.count", "zeta.hilb",
                           "zeta.moduli", "catalog", "reproduce"})
    CHECK(has_entry(known_verbs(), verb));

  const Report unknown = run("frobnicate", json::object());
  REQUIRE(unknown.error.has_value());
  CHECK(unknown.exit_code() == 2);

  const Report odd = run("zeta.moduli", json::parse(R"({"catalog": "trivial-q", "dim": 7})"));
  REQUIRE(odd.error.has_value());
  CHECK(odd.error->kind == ErrorKind::parity);
  CHECK(odd.exit_code() == 2);
  CHECK(odd.to_json().at("ok") == false);
  CHECK(odd.to_json().at("error").at("kind") == "parity");

  const Report missing = run("mukai.dim", json::parse(R"({"catalog": "hvv-f2"})"));
  REQUIRE(missing.error.has_value());
  CHECK(missing.exit_code() == 2);

  const Report wrong_type = run("mukai.dim", json::parse(R"({"catalog": "hvv-f2", "v": {"r": "x"}})"));
  REQUIRE(wrong_type.error.has_value());
  CHECK(wrong_type.error->kind == ErrorKind::parse);

  CHECK_THROWS(parse_json_argument("{not json"));
  const Report unknown_entry = run("catalog", json::parse(R"({"name": "nonsense"})"));
  CHECK(unknown_entry.exit_code() == 2);
  CHECK(unknown_entry.error->message.find("hvv-f2") != std::string::npos);

  const Report failing = run("zeta.validate", json::parse(R"({"q": 2, "p2": [1, -1]})"));
  CHECK_FALSE(failing.error.has_value());
  CHECK(failing.exit_code() == 1);
}

TEST_CASE("verbs compute the catalog examples") {
  const Report dim = run("mukai.dim", json::parse(R"({"catalog": "hvv-f2", "v": "v"})"));
  CHECK(dim.result.at("dimension") == 12);

  const Report fine = run("mukai.fine", json::parse(R"({"catalog": "hvv-f2", "v": "v"})"));
  CHECK(fine.result.at("fine") == false);

  const Report pair = run("mukai.pair", json::parse(R"j({"catalog": "hassva-f3", "v": "O(-C1)", "w": "O(-C2)"})j"));
  CHECK(pair.result.at("euler_pairing") == -3);
  CHECK_FALSE(pair.warnings.empty());

  const Report wall = run("mukai.wall", json::parse(R"j({"catalog": "hassva-f3", "v": "v", "sub": "O(-C2)"})j"));
  CHECK(wall.result.at("on_wall") == true);

  const Report h2 = run("isom.h2", json::parse(R"({"catalog": "hvv-f2", "v": "v"})"));
  CHECK_FALSE(h2.error.has_value());

  const Report build = run("isom.build", json::parse(R"({"catalog": "hvv-f2", "v": "v"})"));
  CHECK(build.exit_code() == 0);
  CHECK(build.result.at("sign") == 1);

  const Report eq = run("isom.equivariant", json::parse(R"({"catalog": "hassva-f3", "v": "v"})"));
  CHECK(eq.exit_code() == 0);

  const Report count = run("zeta.count", json::parse(R"({"catalog": "trivial-q", "n": 2})"));
  CHECK(count.exit_code() == 0);
  CHECK(count.to_json().dump().find("1351") != std::string::npos);

  const Report lattice = run("lattice", json::parse(R"({"lattice": "<2-2n>", "params": {"n": 6}})"));
  CHECK(lattice.exit_code() == 0);
  CHECK(lattice.to_json().dump().find("-10") != std::string::npos);
}

TEST_CASE("reproduction recipes") {
  const auto anchors = reproduce_anchors();
  CHECK(has_entry(anchors, "example-3.1"));
  CHECK(has_entry(anchors, "example-1.x-f3-wall"));
  for (const auto& anchor : anchors) {
    const Report r = run("reproduce", json{{"anchor", anchor}});
    CHECK_MESSAGE(r.exit_code() == 0, anchor);
    CHECK_FALSE(r.checks.empty());
    CHECK(r.checks_passed());
  }
  CHECK(run("reproduce", json{{"anchor", "nope"}}).exit_code() == 2);
  const Report listing = run("reproduce", json::object());
  CHECK(listing.exit_code() == 0);
  CHECK(listing.result.at("recipes").get<std::vector<std::string>>() == anchors);
}

TEST_CASE("exit codes") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.checks.push_back(Check{"a", true, ""});
  CHECK(r.exit_code() == 0);
  r.checks.push_back(Check{"b", false, ""});
  CHECK(r.exit_code() == 1);
  r.error = ReportError{ErrorKind::parse, "bad"};
  CHECK(r.exit_code() == 2);
}

}  // TEST_SUITE
