#include "hbt/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"

namespace hbt {

const char* to_string(Dimension dimension) {
  switch (dimension) {
    case Dimension::length: return "length";
    case Dimension::temperature: return "temperature";
    case Dimension::time: return "time";
    case Dimension::frequency: return "frequency";
    case Dimension::dimensionless: return "dimensionless";
  }
  return "unknown";
}

const std::vector<UnitInfo>& known_units() {
  static const std::vector<UnitInfo> units = {
      {"m", Dimension::length, 1.0},
      {"km", Dimension::length, 1e3},
      {"nm", Dimension::length, 1e-9},
      {"AU", Dimension::length, kConstants.AU},
      {"ly", Dimension::length, kConstants.ly},
      {"R_sun", Dimension::length, kConstants.R_sun},
      {"R_jupiter", Dimension::length, kConstants.R_jupiter},
      {"K", Dimension::temperature, 1.0},
      {"s", Dimension::time, 1.0},
      {"us", Dimension::time, 1e-6},
      {"ns", Dimension::time, 1e-9},
      {"days", Dimension::time, 86400.0},
      {"years", Dimension::time, 365.25 * 86400.0},
      {"Hz", Dimension::frequency, 1.0},
      {"THz", Dimension::frequency, 1e12},
      {"PHz", Dimension::frequency, 1e15},
  };
  return units;
}

const UnitInfo& find_unit(std::string_view symbol) {
  for (const auto& u : known_units())
    if (u.symbol == symbol) return u;
  throw DomainError("unknown unit '" + std::string(symbol) + "'");
}

double Quantity::si() const {
  if (unit.empty()) return value;
  return value * find_unit(unit).to_si;
}

Quantity parse_quantity(std::string_view text, Dimension expected) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view body = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr == body.data())
    throw DomainError("cannot parse quantity '" + std::string(text) + "'");
  const std::string_view suffix = trim(body.substr(static_cast<std::size_t>(ptr - body.data())));
  if (!std::isfinite(value)) throw DomainError("non-finite quantity '" + std::string(text) + "'");

  if (suffix.empty()) {
    if (expected != Dimension::dimensionless)
      throw DomainError("quantity '" + std::string(text) + "' needs a " + to_string(expected) +
                        " unit");
    return {value, ""};
  }
  const UnitInfo& unit = find_unit(suffix);
  if (unit.dimension != expected)
    throw DomainError("unit '" + std::string(suffix) + "' is not a " + to_string(expected) +
                      " unit");
  return {value, std::string(suffix)};
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw DomainError("cannot format number");
  return std::string(buf, ptr);
}

std::string format_quantity(const Quantity& q) {
  if (q.unit.empty()) return format_number(q.value);
  return format_number(q.value) + " " + q.unit;
}

Quantity from_si(double value_in_si, std::string_view unit) {
  if (unit.empty()) return {value_in_si, ""};
  return {value_in_si / find_unit(unit).to_si, std::string(unit)};
}

}  // namespace hbt
