// k3kit command-line front end.  Every subcommand builds a ComputationRequest
// and prints the resulting report.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "k3kit/request.hpp"

using k3kit::json;

namespace {

struct Flag {
  std::string name;  // command-line spelling without the dashes
  std::string key;   // JSON argument
  bool value = true;
  std::string help;
};

struct VerbSpec {
  std::string group;  // empty for top-level verbs
  std::string name;
  std::string verb;
  std::string help;
  std::vector<std::string> options;
  std::string positional;
  std::vector<Flag> flags;
};

const std::vector<std::string> kSurface{"surface", "catalog", "q", "H"};

std::vector<std::string> with_surface(std::vector<std::string> extra) {
  extra.insert(extra.begin(), kSurface.begin(), kSurface.end());
  return extra;
}

std::vector<VerbSpec> verb_specs() {
  const Flag geometric{"geometric", "geometric", true, "work in NS(S-bar) coordinates"};
  const std::vector<std::string> weil{"q", "p2", "catalog"};
  auto zeta_opts = [&](std::vector<std::string> extra) {
    extra.insert(extra.begin(), weil.begin(), weil.end());
    return extra;
  };
  const Flag no_counts{"no-check-counts", "check_counts", false, "skip the point-count cross-check"};
  return {
      {"", "lattice", "lattice", "lattice invariants from a Gram matrix or expression",
       {"params", "perp", "phi", "reflect"}, "lattice", {}},
      {"forms", "hasse", "forms.hasse", "Hasse invariant at a place", {"place", "other"}, "form", {}},
      {"forms", "witt", "forms.witt", "Witt class at a place", {"place", "other"}, "form", {}},
      {"forms", "sqclass", "forms.sqclass", "compare a, b modulo unit squares in Z_ell", {"a", "b", "ell"}, "", {}},
      {"forms", "hilbert", "forms.hilbert", "Hilbert symbol (a,b)_p", {"a", "b", "place"}, "", {}},
      {"mukai", "dim", "mukai.dim", "moduli dimension v^2 + 2", with_surface({"v"}), "", {geometric}},
      {"mukai", "pair", "mukai.pair", "Mukai and Euler pairings", with_surface({"v", "w"}), "", {geometric}},
      {"mukai", "hilb", "mukai.hilb", "Hilbert polynomial and reduced form", with_surface({"v"}), "", {geometric}},
      {"mukai", "fine", "mukai.fine", "fineness test", with_surface({"v"}), "", {geometric}},
      {"mukai", "wall", "mukai.wall", "test whether H lies on a wall for sub in v", with_surface({"v", "sub"}), "",
       {geometric}},
      {"mukai", "primitive", "mukai.primitive", "geometric primitivity and effectivity", with_surface({"v"}), "",
       {geometric}},
      {"isom", "build", "isom.build", "isometry of v-perp onto w-perp", with_surface({"v"}), "", {geometric}},
      {"isom", "verify", "isom.verify", "check a matrix preserves the Mukai pairing", with_surface({"v", "matrix"}),
       "", {geometric}},
      {"isom", "equivariant", "isom.equivariant", "check the isometry commutes with Frobenius",
       with_surface({"v", "frobenius"}), "", {}},
      {"isom", "h2", "isom.h2", "v-perp modulo v", with_surface({"v"}), "", {geometric}},
      {"zeta", "validate", "zeta.validate", "validate a Weil polynomial P2", zeta_opts({}), "",
       {{"no-check-roots", "check_roots", false, "skip the advisory root-modulus check"}}},
      {"zeta", "count", "zeta.count", "point counts of S^[n]", zeta_opts({"n", "r"}), "",
       {{"literal-paper-formula", "literal", true, "also evaluate the literal S^(l(nu)) formula"},
        {"all-r", "all_r", true, "report every extension degree up to r"}}},
      {"zeta", "hilb", "zeta.hilb", "zeta function of S^[n]", zeta_opts({"n", "max-n", "power-sum-ceiling"}), "",
       {no_counts}},
      {"zeta", "moduli", "zeta.moduli", "zeta function of a moduli space of given dimension",
       zeta_opts({"dim", "max-n", "power-sum-ceiling"}), "", {no_counts}},
      {"", "catalog", "catalog", "list catalog entries or show one", {"q"}, "name", {}},
      {"", "reproduce", "reproduce", "run a built-in reproduction recipe", {}, "anchor", {}},
  };
}

std::string json_key(std::string name) {
  for (auto& c : name)
    if (c == '-') c = '_';
  return name;
}

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw k3kit::Error(k3kit::ErrorKind::parse, "cannot read '" + path + "'");
  return slurp(in);
}

// "@file" reads JSON from a file.  Anything that is neither JSON nor a list of
// rationals stays a plain string (catalog names, places, expressions).
json argument_value(const std::string& text) {
  if (!text.empty() && text[0] == '@') return json::parse(read_file(text.substr(1)));
  try {
    return k3kit::parse_json_argument(text);
  } catch (const k3kit::Error&) {
    return text;
  }
}

json params_value(const std::vector<std::string>& items) {
  json out = json::object();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw k3kit::Error(k3kit::ErrorKind::parse, "param '" + item + "' is not name=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

struct Bound {
  VerbSpec spec;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::vector<std::string> params;
  std::map<std::string, bool> flags;
  std::string positional;
};

// Command-line values override anything read from --input.
void merge_command_line(const Bound& b, json& args) {
  if (!b.positional.empty()) {
    const auto& key = b.spec.positional;
    args[key] = (key == "lattice" || key == "anchor" || key == "name") ? json(b.positional)
                                                                       : argument_value(b.positional);
  }
  for (const auto& [opt, value] : b.values)
    if (!value.empty()) args[json_key(opt)] = argument_value(value);
  if (!b.params.empty()) args["params"] = params_value(b.params);
  for (const auto& f : b.spec.flags)
    if (b.flags.at(f.name)) args[f.key] = f.value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3kit: lattices, Mukai vectors and zeta functions of K3 surfaces over finite fields"};
  app.require_subcommand(0, 1);
  bool as_json = false;
  std::string format = "pretty";
  std::string input;
  std::string anchor;
  app.add_flag("--json", as_json, "print the report as JSON");
  app.add_option("--format", format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));
  app.add_option("--input", input, "read request JSON from FILE, or - for stdin");
  app.add_option("--reproduce", anchor, "run a built-in reproduction recipe (same as the reproduce verb)");
  app.add_flag_callback("--version", [] {
    std::cout << "k3kit " << k3kit::kVersion << "\n";
    std::exit(0);
  }, "print the version");

  std::map<std::string, CLI::App*> groups;
  std::vector<Bound> bound;
  const auto specs = verb_specs();
  bound.reserve(specs.size());
  for (const auto& spec : specs) {
    CLI::App* parent = &app;
    if (!spec.group.empty()) {
      auto& g = groups[spec.group];
      if (!g) {
        g = app.add_subcommand(spec.group, spec.group + " verbs");
        g->require_subcommand(1);
        g->fallthrough();
      }
      parent = g;
    }
    bound.push_back(Bound{spec});
    Bound& b = bound.back();
    b.app = parent->add_subcommand(spec.name, spec.help);
    b.app->fallthrough();
    if (!spec.positional.empty()) b.app->add_option(spec.positional, b.positional, spec.positional);
    for (const auto& opt : spec.options) {
      if (opt == "params") {
        b.app->add_option("--param", b.params, "expression parameter name=value (repeatable)");
      } else {
        const std::string names = opt.size() == 1 ? "-" + opt + ",--" + opt : "--" + opt;
        b.app->add_option(names, b.values[opt], opt);
      }
    }
    for (const auto& f : spec.flags) b.app->add_flag("--" + f.name, b.flags[f.name], f.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (as_json) format = "json";

  k3kit::ComputationRequest request;
  try {
    const Bound* chosen = nullptr;
    for (const auto& b : bound)
      if (b.app->parsed()) chosen = &b;
    json in;
    if (!input.empty()) in = json::parse(read_file(input));
    if (!anchor.empty()) {
      if (chosen || !input.empty()) throw k3kit::Error(k3kit::ErrorKind::parse, "--reproduce takes no verb or input");
      in = json{{"verb", "reproduce"}, {"args", {{"anchor", anchor}}}};
    }
    const bool full_request = in.is_object() && in.contains("verb") && in.contains("args");
    if (!chosen && !full_request) {
      std::cerr << app.help();
      throw k3kit::Error(k3kit::ErrorKind::parse, "no verb given");
    }
    request.verb = chosen ? chosen->spec.verb : in.at("verb").get<std::string>();

    if (!input.empty() || !anchor.empty()) {
      if (full_request) {
        if (in.at("verb").get<std::string>() != request.verb) {
          throw k3kit::Error(k3kit::ErrorKind::parse, "input file is for verb '" + in.at("verb").get<std::string>() +
                                                          "', not '" + request.verb + "'");
        }
        in = in.at("args");
      }
      if (!in.is_object()) throw k3kit::Error(k3kit::ErrorKind::parse, "input must be a JSON object");
      request.args = in;
    }
    if (chosen) merge_command_line(*chosen, request.args);
    const bool zeta_verb = request.verb == "zeta.hilb" || request.verb == "zeta.moduli";
    if (const char* env = std::getenv("K3KIT_MAX_N"); zeta_verb && env && !request.args.contains("max_n")) {
      request.args["max_n"] = argument_value(env);
    }
  } catch (const std::exception& e) {
    std::cerr << "k3kit: " << e.what() << "\n";
    return 2;
  }

  const k3kit::Report report = k3kit::execute_request(request);
  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_pretty();
  }
  return report.exit_code();
}
