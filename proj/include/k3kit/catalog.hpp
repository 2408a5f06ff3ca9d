#pragma once

// Built-in example surfaces and their distinguished Mukai vectors.

#include <optional>
#include <string>
#include <vector>

#include "k3kit/mukai.hpp"

namespace k3kit {

struct NamedVector {
  std::string name;
  MukaiVector v;
  /// Coordinates are in NS(S-bar) rather than NS(S).
  bool geometric = false;

  bool operator==(const NamedVector&) const = default;
};

struct CatalogEntry {
  std::string name;
  SurfaceDescriptor surface;
  std::vector<NamedVector> vectors;
  std::string notes;

  const NamedVector& vector(const std::string& name) const;
};

std::vector<std::string> catalog_names();

/// Throws ErrorKind::invalid_argument listing the known names for an unknown
/// one.  `q` parametrizes "trivial-q" (default 2) and is rejected elsewhere.
CatalogEntry catalog_get(const std::string& name, const std::optional<Integer>& q = std::nullopt);

}  // namespace k3kit
