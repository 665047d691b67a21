#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace hbt::cli {

struct SuiteResult {
  std::string suite;
  bool passed;
  nlohmann::ordered_json details;
};

/// 100 random coefficient sets; LU determinant against the closed form at 1e-10 relative.
SuiteResult verify_determinant(std::uint64_t seed);

/// 50 random two-source configurations; passes when at least 47 closed-form
/// values fall within 4 jackknife standard errors of the Monte-Carlo estimate.
SuiteResult verify_mc(std::uint64_t seed, std::uint64_t samples, unsigned workers);

/// Both built-in catalog systems at 600 THz on a 20-point grid up to 2 x_asy;
/// passes when the surface quadrature agrees with the closed form to 1e-6.
SuiteResult verify_quadrature();

}  // namespace hbt::cli
