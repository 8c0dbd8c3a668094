#include "orlicz/report.hpp"

#include <cstdio>
#include <algorithm>
#include <sstream>

namespace orlicz {

namespace {

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "lines") return ReportFormat::lines;
  if (name == "table") return ReportFormat::table;
  return std::nullopt;
}

std::string emit_report(std::span<const VerificationRecord> records,
                        ReportFormat format,
                        const std::optional<SuiteConfig>& cfg) {
  std::size_t passed = 0;
  for (const auto& r : records) passed += r.pass ? 1 : 0;
  std::ostringstream out;
  if (format == ReportFormat::lines) {
    out << "# orlicz-lab verification report\n";
    if (cfg) {
      std::istringstream echo(format_config(*cfg));
      for (std::string line; std::getline(echo, line);) {
        out << (line.empty() ? "#" : "# " + line) << '\n';
      }
    }
    out << "# records=" << records.size() << " pass=" << passed
        << " fail=" << records.size() - passed << '\n';
    for (const auto& r : records) {
      out << "suite=" << r.suite << " case=" << r.case_id
          << " anchor=" << quoted(r.anchor) << " residual=" << full(r.residual)
          << " tolerance=" << full(r.tolerance)
          << " verdict=" << (r.pass ? "pass" : "fail") << " seed=" << r.seed;
      if (!r.error.empty()) out << " error=" << quoted(r.error);
      out << '\n';
    }
    return out.str();
  }

  struct Counts {
    std::size_t pass = 0;
    std::size_t fail = 0;
  };
  std::vector<std::pair<std::string, Counts>> per_suite;
  for (const auto& r : records) {
    auto it = std::find_if(per_suite.begin(), per_suite.end(),
                           [&](const auto& e) { return e.first == r.suite; });
    if (it == per_suite.end()) {
      per_suite.push_back({r.suite, {}});
      it = std::prev(per_suite.end());
    }
    (r.pass ? it->second.pass : it->second.fail) += 1;
  }
  char line[128];
  out << "orlicz-lab verification summary";
  if (cfg) out << " (group " << cfg->group << ", seed " << cfg->seed << ")";
  out << '\n';
  std::snprintf(line, sizeof line, "%-12s %6s %6s %6s\n", "suite", "pass",
                "fail", "total");
  out << line;
  for (const auto& [name, c] : per_suite) {
    std::snprintf(line, sizeof line, "%-12s %6zu %6zu %6zu\n", name.c_str(),
                  c.pass, c.fail, c.pass + c.fail);
    out << line;
  }
  std::snprintf(line, sizeof line, "%-12s %6zu %6zu %6zu\n", "all", passed,
                records.size() - passed, records.size());
  out << line;
  bool header = false;
  for (const auto& r : records) {
    if (r.pass) continue;
    if (!header) {
      out << "\nfailures:\n";
      header = true;
    }
    out << "  " << r.suite << ' ' << r.case_id << " residual=" << full(r.residual)
        << " tolerance=" << full(r.tolerance);
    if (!r.error.empty()) out << " error: " << r.error;
    out << '\n';
  }
  return out.str();
}

}  // namespace orlicz
