#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/config.hpp"

namespace orlicz {

enum class Suite {
  young,
  norms,
  cocycle,
  twisted,
  duality,
  splitting,
  lambda,
  growth,
  membership
};

std::span<const Suite> all_suites();
std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

/// One checked property. `anchor` is the formula being checked.
struct Invariant {
  std::string_view id;
  Suite suite;
  std::string_view anchor;
  double tolerance;
};

/// Every invariant the suites check, in report order.
std::span<const Invariant> invariant_registry();
/// Throws std::out_of_range for unknown ids.
const Invariant& find_invariant(std::string_view id);

struct VerificationRecord {
  std::string suite;
  std::string case_id;
  std::string invariant;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  /// Error text when the case threw; empty otherwise.
  std::string error;
};

/// Parses every spec in `cfg`; throws config_error on the first bad one.
void validate_config(const SuiteConfig& cfg);

/// Runs one suite. Deterministic in (cfg, cfg.seed); a throwing case becomes
/// a failed record and later cases still run.
std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg, Suite suite);
std::vector<VerificationRecord> run_all(const SuiteConfig& cfg);

}  // namespace orlicz
