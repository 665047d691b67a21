#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hbt {

enum class Dimension { length, temperature, time, frequency, dimensionless };

const char* to_string(Dimension dimension);

struct UnitInfo {
  std::string_view symbol;
  Dimension dimension;
  double to_si;
};

/// Every unit suffix the parser accepts.
const std::vector<UnitInfo>& known_units();

/// Looks up a unit suffix. Throws DomainError for unknown suffixes.
const UnitInfo& find_unit(std::string_view symbol);

/// A number with the unit it was written in.
struct Quantity {
  double value;      // in `unit`
  std::string unit;  // empty for dimensionless
  double si() const;
};

/// Parses "<number> <unit>" (the space is optional). A bare number is only
/// accepted when `expected` is dimensionless.
Quantity parse_quantity(std::string_view text, Dimension expected);

/// Shortest decimal that reads back to the same double, e.g. "3" or "6.51".
std::string format_number(double value);

/// "3 AU"; dimensionless quantities print without a suffix.
std::string format_quantity(const Quantity& q);

/// Expresses an SI value in the given unit.
Quantity from_si(double value_in_si, std::string_view unit);

}  // namespace hbt
