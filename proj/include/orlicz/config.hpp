#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace orlicz {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings shared by every verification suite.
///
/// File format, all keys optional:
///
///   [suite]
///   group = z2
///   pair = catalog
///   weight = poly:1
///   cocycle = catalog
///   radius = 4
///   samples = 100
///   seed = 42
///
///   [tolerances]
///   duality = 1e-10
///
/// `catalog` expands to every catalog pair or cocycle on the group.
/// Tolerance keys are invariant ids from the suite registry.
struct SuiteConfig {
  std::string group = "z2";
  std::string pair = "catalog";
  std::string weight = "poly:1";
  std::string cocycle = "catalog";
  int radius = 4;
  int samples = 100;
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerances;

  bool operator==(const SuiteConfig&) const = default;
};

/// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "ORLICZ_LAB_CONFIG";

SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::string& path);
/// Canonical text form; parse_config(format_config(c)) == c and formatting is
/// byte-stable under that round trip.
std::string format_config(const SuiteConfig& cfg);

/// Defaults, then the file named by `path` or else by the environment
/// variable, if any.
SuiteConfig resolve_config(const std::optional<std::string>& path);

}  // namespace orlicz
