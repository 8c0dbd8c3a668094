#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/cocycle.hpp"
#include "orlicz/group.hpp"
#include "orlicz/orlicz_vector.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

class spec_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `z<d>` (1 <= d <= 8), `heis`, `cyc:<n>`.
GroupPtr parse_group(std::string_view spec);

/// `trivial`, `poly:<beta>`, `subexp:<alpha>:<C>`, `sublog:<gamma>:<C>`, and
/// products joined with `*`.
Weight parse_weight(const GroupPtr& group, std::string_view spec);

/// `trivial`; any weight spec, read as that weight's coboundary;
/// `phase[:<theta>[:<b11>,<b12>,...]]` with B row-major; products with `*`.
/// Without a matrix the phase uses the group's default form.
Cocycle parse_cocycle(const GroupPtr& group, std::string_view spec);

/// The bilinear phase used when no matrix is given: exp(i theta y1 x2) on
/// Z^d for d >= 2, exp(i theta x y) on Z and Z/n. Throws on H3(Z).
Cocycle default_phase(const GroupPtr& group, double theta);
/// Default angle: 0.7 on Z^d, 2 pi / n on Z/n.
double default_phase_angle(const Group& group);

/// Lines `c1,...,cd,re,im`; blank lines and `#` comments are skipped.
OrliczVector read_vector(std::istream& in, const Group& group);
std::string write_vector(const OrliczVector& f);

std::vector<double> parse_double_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);
double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);

}  // namespace orlicz
