#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbt::cli {

/// Parsed `start:stop:points[:log]` baseline grid.
struct GridSpec {
  double start;
  double stop;
  int points;
  bool log_spaced = false;
};

/// Throws DomainError("invalid grid ...") for malformed or unusable specs.
GridSpec parse_grid(std::string_view text);
std::vector<double> expand_grid(const GridSpec& grid);
std::string format_grid(const GridSpec& grid);

/// "%.17g"; the CSV number format.
std::string format_double(double value);

std::string sha256_hex(std::string_view data);

/// Everything needed to regenerate one command's output.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::string constants_version;
  std::optional<std::uint64_t> seed;
  std::string output_digest;  // "sha256:<hex>" of the emitted bytes

  std::string to_json() const;
  static RunManifest from_json(std::string_view text);
  /// Command-line arguments that re-run this manifest.
  std::vector<std::string> to_args() const;
};

/// Sidecar path for an output file.
std::string manifest_path(const std::string& out_path);

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2, kDomainError = 3 };

/// Full command-line front end. `args` excludes the program name. Primary
/// output goes to `out` (or --out), the manifest to the sidecar (or `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbt::cli
