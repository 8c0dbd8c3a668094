#include "orlicz/specs.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace orlicz {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<double> params(std::string_view spec, std::size_t expected) {
  const auto parts = split(spec, ':');
  if (parts.size() != expected + 1) {
    throw spec_error("expected " + std::to_string(expected) +
                     " parameter(s) in '" + std::string(spec) + "'");
  }
  std::vector<double> out;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.push_back(parse_double(parts[i]));
  }
  return out;
}

Weight parse_single_weight(const GroupPtr& group, std::string_view spec) {
  const std::string_view head = spec.substr(0, spec.find(':'));
  try {
    if (head == "trivial" && spec == head) return Weight::trivial(group);
    if (head == "poly") return Weight::polynomial(group, params(spec, 1)[0]);
    if (head == "subexp") {
      const auto p = params(spec, 2);
      return Weight::subexp_alpha(group, p[0], p[1]);
    }
    if (head == "sublog") {
      const auto p = params(spec, 2);
      return Weight::subexp_log(group, p[0], p[1]);
    }
  } catch (const spec_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw spec_error(std::string(spec) + ": " + e.what());
  }
  throw spec_error("unknown weight '" + std::string(spec) + "'");
}

Cocycle parse_single_cocycle(const GroupPtr& group, std::string_view spec) {
  if (spec == "trivial") return Cocycle::trivial(group);
  if (spec.substr(0, spec.find(':')) != "phase") {
    return Cocycle::coboundary(parse_single_weight(group, spec));
  }
  const auto parts = split(spec, ':');
  if (parts.size() > 3) throw spec_error("bad phase '" + std::string(spec) + "'");
  const double theta =
      parts.size() >= 2 ? parse_double(parts[1]) : default_phase_angle(*group);
  try {
    if (parts.size() < 3) return default_phase(group, theta);
    const auto flat = parse_int_list(parts[2]);
    const auto d = static_cast<std::size_t>(group->rank());
    if (flat.size() != d * d) {
      throw spec_error("phase matrix needs " + std::to_string(d * d) +
                       " entries in '" + std::string(spec) + "'");
    }
    IntMatrix b(d, std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) b[i][j] = flat[i * d + j];
    }
    return Cocycle::bilinear_phase(group, b, theta);
  } catch (const cocycle_error& e) {
    throw spec_error(e.what());
  }
}

}  // namespace

double parse_double(std::string_view text) {
  const std::string s(trim(text));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw spec_error("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(value)) {
    throw spec_error("not a number: '" + s + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view text) {
  const std::string_view s = trim(text);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw spec_error("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

GroupPtr parse_group(std::string_view spec) {
  const std::string s(trim(spec));
  try {
    if (s == "heis") return Group::heisenberg();
    if (s.rfind("cyc:", 0) == 0) return Group::cyclic(parse_int(s.substr(4)));
    if (s.size() >= 2 && s[0] == 'z') {
      return Group::free_abelian(static_cast<int>(parse_int(s.substr(1))));
    }
  } catch (const spec_error&) {
    throw spec_error("bad group '" + s + "'");
  } catch (const std::invalid_argument& e) {
    throw spec_error("bad group '" + s + "': " + e.what());
  }
  throw spec_error("unknown group '" + s + "' (expected z<d>, heis, cyc:<n>)");
}

Weight parse_weight(const GroupPtr& group, std::string_view spec) {
  const auto factors = split(trim(spec), '*');
  Weight out = parse_single_weight(group, trim(factors[0]));
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = Weight::product(out, parse_single_weight(group, trim(factors[i])));
  }
  return out;
}

Cocycle parse_cocycle(const GroupPtr& group, std::string_view spec) {
  const auto factors = split(trim(spec), '*');
  Cocycle out = parse_single_cocycle(group, trim(factors[0]));
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = Cocycle::product(out, parse_single_cocycle(group, trim(factors[i])));
  }
  return out;
}

double default_phase_angle(const Group& group) {
  if (group.kind() == GroupKind::cyclic) {
    return 2.0 * std::numbers::pi / static_cast<double>(group.parameter());
  }
  return 0.7;
}

Cocycle default_phase(const GroupPtr& group, double theta) {
  if (!group->is_abelian()) {
    throw spec_error("no bilinear phase on " + group->name());
  }
  const int d = group->rank();
  IntMatrix b(d, std::vector<std::int64_t>(d, 0));
  if (d >= 2) {
    b[1][0] = 1;
  } else {
    b[0][0] = 1;
  }
  return Cocycle::bilinear_phase(group, b, theta);
}

OrliczVector read_vector(std::istream& in, const Group& group) {
  std::vector<OrliczVector::Entry> entries;
  std::string line;
  int lineno = 0;
  const auto rank = static_cast<std::size_t>(group.rank());
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto fields = split(body, ',');
    if (fields.size() != rank + 2) {
      throw spec_error("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rank) + " coordinates plus re,im");
    }
    std::vector<std::int64_t> coords;
    for (std::size_t i = 0; i < rank; ++i) coords.push_back(parse_int(fields[i]));
    const Complex a(parse_double(fields[rank]), parse_double(fields[rank + 1]));
    try {
      entries.emplace_back(group.element(coords), a);
    } catch (const std::invalid_argument& e) {
      throw spec_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return OrliczVector::from_entries(std::move(entries));
}

std::string write_vector(const OrliczVector& f) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& [s, a] : f) {
    for (auto c : s.coords()) out << c << ',';
    out << a.real() << ',' << a.imag() << '\n';
  }
  return out.str();
}

}  // namespace orlicz
