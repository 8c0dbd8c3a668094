#pragma once

#include <optional>
#include <span>
#include <string>

#include "orlicz/config.hpp"
#include "orlicz/suites.hpp"

namespace orlicz {

enum class ReportFormat { lines, table };

/// Renders records. `lines`: a `#` header (config echo and counts), then one
/// record per line with fields suite, case, anchor, residual, tolerance,
/// verdict, seed in that order, plus error when present. `table`: per-suite
/// pass counts followed by the failing cases.
std::string emit_report(std::span<const VerificationRecord> records,
                        ReportFormat format,
                        const std::optional<SuiteConfig>& cfg = std::nullopt);

std::optional<ReportFormat> parse_report_format(std::string_view name);

}  // namespace orlicz
