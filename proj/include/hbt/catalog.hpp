#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbt/coherence.hpp"
#include "hbt/units.hpp"

namespace hbt {

/// One binary system as written in the catalog, units kept for display.
struct CatalogEntry {
  std::string name;
  Quantity distance;
  Quantity radius_a;
  Quantity radius_b;
  Quantity temperature_a;
  Quantity temperature_b;
  Quantity separation;
  Quantity orbital_period;
  double apparent_magnitude_v;

  BinarySystem to_system() const;
};

class Catalog {
 public:
  /// Environment variable naming a catalog file that replaces the built-in one.
  static constexpr const char* kPathVariable = "HBT_CATALOG";

  /// Parses the JSON catalog format. Throws DomainError on malformed input,
  /// unknown units, duplicate names, or non-positive physical fields.
  static Catalog parse(std::string_view json_text);
  static Catalog load_file(const std::string& path);
  /// Built-in luhman16/spica entries.
  static Catalog builtin();
  /// load_file($HBT_CATALOG) when set, builtin() otherwise.
  static Catalog load_default();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  /// Throws DomainError("unknown system ...").
  const CatalogEntry& find(std::string_view name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace hbt
