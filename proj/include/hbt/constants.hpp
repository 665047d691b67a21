#pragma once

#include <numbers>

namespace hbt {

// CODATA-2018 exact/recommended values plus the astronomical units used by
// the catalog. Changing any entry requires bumping kConstantsVersion, since
// golden outputs are only byte-stable for a fixed table.
struct PhysicalConstants {
  double c;          // m/s
  double h;          // J s
  double hbar;       // J s
  double k_B;        // J/K
  double AU;         // m
  double ly;         // m
  double R_sun;      // m
  double R_jupiter;  // m
};

inline constexpr PhysicalConstants kConstants{
    299792458.0,
    6.62607015e-34,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    1.380649e-23,
    1.495978707e11,
    9.4607304725808e15,
    6.957e8,
    7.1492e7,
};

inline constexpr const char* kConstantsVersion = "CODATA-2018/hbt-1";

}  // namespace hbt
