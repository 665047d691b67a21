#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "cli.hpp"
#include "hbt/errors.hpp"

namespace hbt::cli {

GridSpec parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  const std::string bad = "invalid grid '" + std::string(text) + "'";
  if (parts.size() < 3 || parts.size() > 4) throw DomainError(bad + ": expected start:stop:points[:log]");

  GridSpec g{};
  try {
    std::size_t used = 0;
    g.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw DomainError(bad);
    g.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw DomainError(bad);
    g.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw DomainError(bad);
  } catch (const std::logic_error&) {
    throw DomainError(bad + ": not a number");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log") throw DomainError(bad + ": fourth field must be 'log'");
    g.log_spaced = true;
  }
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || g.start < 0.0 || g.stop < g.start)
    throw DomainError(bad + ": need 0 <= start <= stop");
  if (g.points < 1) throw DomainError(bad + ": need at least one point");
  if (g.points == 1 && g.stop != g.start) throw DomainError(bad + ": one point needs start == stop");
  if (g.points > 1 && g.stop == g.start) throw DomainError(bad + ": empty range");
  if (g.log_spaced && g.start <= 0.0) throw DomainError(bad + ": log grid needs start > 0");
  return g;
}

std::vector<double> expand_grid(const GridSpec& g) {
  std::vector<double> xs(static_cast<std::size_t>(g.points));
  if (g.points == 1) {
    xs[0] = g.start;
    return xs;
  }
  const double n = g.points - 1;
  for (int i = 0; i < g.points; ++i) {
    const double t = i / n;
    xs[i] = g.log_spaced ? std::exp(std::log(g.start) + t * (std::log(g.stop) - std::log(g.start)))
                         : g.start + t * (g.stop - g.start);
  }
  xs.front() = g.start;
  xs.back() = g.stop;
  return xs;
}

std::string format_grid(const GridSpec& g) {
  std::string s = format_double(g.start) + ":" + format_double(g.stop) + ":" + std::to_string(g.points);
  if (g.log_spaced) s += ":log";
  return s;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "hbt-manifest/1";
  j["command"] = command;
  j["inputs"] = inputs;
  j["constants_version"] = constants_version;
  if (seed) j["seed"] = *seed;
  j["output_digest"] = output_digest;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  m.constants_version = j.at("constants_version").get<std::string>();
  if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
  m.output_digest = j.at("output_digest").get<std::string>();
  return m;
}

std::vector<std::string> RunManifest::to_args() const {
  std::vector<std::string> args;
  std::istringstream words(command);
  for (std::string w; words >> w;) args.push_back(w);
  for (const auto& [key, value] : inputs) {
    if (key.rfind("--", 0) == 0) {
      args.push_back(key);
      args.push_back(value);
    } else {
      args.push_back(value);  // positional
    }
  }
  if (seed) {
    args.push_back("--seed");
    args.push_back(std::to_string(*seed));
  }
  return args;
}

std::string manifest_path(const std::string& out_path) { return out_path + ".manifest.json"; }

}  // namespace hbt::cli
