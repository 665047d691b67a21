#include "hbt/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hbt/errors.hpp"

namespace hbt {
namespace {

// Mirrors data/catalog.json.
constexpr const char* kBuiltinCatalog = R"({
  "schema": "hbt-catalog/1",
  "systems": [
    {"name": "luhman16", "distance": "6.51 ly", "radius_a": "1.04 R_jupiter",
     "radius_b": "0.84 R_jupiter", "temperature_a": "1210 K", "temperature_b": "1350 K",
     "separation": "3 AU", "orbital_period": "27.54 years", "apparent_magnitude_v": 10.733},
    {"name": "spica", "distance": "250 ly", "radius_a": "7.47 R_sun",
     "radius_b": "3.74 R_sun", "temperature_a": "25300 K", "temperature_b": "20900 K",
     "separation": "0.12 AU", "orbital_period": "4 days", "apparent_magnitude_v": 0.97}
  ]
})";

Quantity positive_field(const nlohmann::json& obj, const char* key, Dimension dim,
                        const std::string& name) {
  if (!obj.contains(key) || !obj.at(key).is_string())
    throw DomainError("catalog entry '" + name + "': missing string field '" + key + "'");
  Quantity q = parse_quantity(obj.at(key).get<std::string>(), dim);
  if (!(q.value > 0.0))
    throw DomainError("catalog entry '" + name + "': field '" + key + "' must be positive");
  return q;
}

}  // namespace

BinarySystem CatalogEntry::to_system() const {
  return BinarySystem::create({radius_a.si(), temperature_a.si()},
                              {radius_b.si(), temperature_b.si()}, separation.si(),
                              distance.si(), orbital_period.si());
}

Catalog Catalog::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("systems") || !doc.at("systems").is_array())
    throw DomainError("catalog needs a 'systems' array");

  Catalog cat;
  for (const auto& obj : doc.at("systems")) {
    if (!obj.is_object() || !obj.contains("name") || !obj.at("name").is_string())
      throw DomainError("catalog entry without a name");
    CatalogEntry e;
    e.name = obj.at("name").get<std::string>();
    for (const auto& other : cat.entries_)
      if (other.name == e.name) throw DomainError("duplicate catalog entry '" + e.name + "'");
    e.distance = positive_field(obj, "distance", Dimension::length, e.name);
    e.radius_a = positive_field(obj, "radius_a", Dimension::length, e.name);
    e.radius_b = positive_field(obj, "radius_b", Dimension::length, e.name);
    e.temperature_a = positive_field(obj, "temperature_a", Dimension::temperature, e.name);
    e.temperature_b = positive_field(obj, "temperature_b", Dimension::temperature, e.name);
    e.separation = positive_field(obj, "separation", Dimension::length, e.name);
    e.orbital_period = positive_field(obj, "orbital_period", Dimension::time, e.name);
    if (!obj.contains("apparent_magnitude_v") || !obj.at("apparent_magnitude_v").is_number())
      throw DomainError("catalog entry '" + e.name + "': missing apparent_magnitude_v");
    e.apparent_magnitude_v = obj.at("apparent_magnitude_v").get<double>();
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Catalog Catalog::builtin() { return parse(kBuiltinCatalog); }

Catalog Catalog::load_default() {
  const char* path = std::getenv(kPathVariable);
  if (path != nullptr && *path != '\0') return load_file(path);
  return builtin();
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

const CatalogEntry& Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw DomainError("unknown system '" + std::string(name) + "'");
}

}  // namespace hbt
