#pragma once

// Request dispatch shared by the command-line tool and the tests.  A request
// is a verb such as "mukai.dim" plus JSON arguments; the report carries the
// structured result, named checks and provenance.

#include <optional>
#include <string>
#include <vector>

#include "k3kit/catalog.hpp"
#include "k3kit/json_io.hpp"

namespace k3kit {

inline constexpr const char* kVersion = "0.1.0";

struct ComputationRequest {
  std::string verb;
  json args = json::object();
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReportError {
  ErrorKind kind;
  std::string message;
};

struct Report {
  std::string verb;
  json result = json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::optional<ReportError> error;
  std::string version = kVersion;
  std::string input_hash;

  bool checks_passed() const;
  /// 0 success, 1 a check failed, 2 input or module error.
  int exit_code() const;
  json to_json() const;
  std::string to_pretty() const;
};

std::vector<std::string> known_verbs();
std::vector<std::string> reproduce_anchors();

/// SHA-256 of the verb and the canonical dump of the arguments.
std::string input_hash(const ComputationRequest& request);

/// Never throws for bad input: errors are captured in Report::error.
Report execute_request(const ComputationRequest& request);

void to_json(json& j, const NamedVector& v);
void from_json(const json& j, NamedVector& v);
void to_json(json& j, const CatalogEntry& e);
void from_json(const json& j, CatalogEntry& e);

}  // namespace k3kit
