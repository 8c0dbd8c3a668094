#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace orlicz {

/// Group element as an integer coordinate tuple. Unused trailing slots stay
/// zero so the defaulted ordering is lexicographic on the live coordinates.
class Element {
 public:
  static constexpr int kMaxRank = 8;

  Element() = default;
  Element(std::initializer_list<std::int64_t> coords);
  explicit Element(std::span<const std::int64_t> coords);

  int rank() const { return rank_; }
  std::int64_t operator[](int i) const { return coords_[i]; }
  std::int64_t& operator[](int i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return {coords_.data(), static_cast<std::size_t>(rank_)}; }

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

  std::string str() const;

 private:
  std::uint8_t rank_ = 0;
  std::array<std::int64_t, kMaxRank> coords_{};
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

enum class GroupKind { free_abelian, heisenberg, cyclic };

/// Raised when a breadth-first search would enumerate more elements than the
/// group's cap allows.
class radius_cap_error : public std::runtime_error {
 public:
  radius_cap_error(const std::string& what, std::size_t cap,
                   std::size_t enumerated)
      : std::runtime_error(what), cap_(cap), enumerated_(enumerated) {}
  std::size_t cap() const { return cap_; }
  std::size_t enumerated() const { return enumerated_; }

 private:
  std::size_t cap_;
  std::size_t enumerated_;
};

/// A finitely generated discrete group: Z^d, the discrete Heisenberg group
/// H3(Z) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), or Z/nZ.
///
/// The generating set is symmetric and excludes the identity. Word lengths
/// come from a breadth-first search table that grows on demand; for the
/// standard generators of Z^d and Z/nZ a closed form is used instead.
class Group {
 public:
  static constexpr std::size_t kDefaultElementCap = 1'000'000;

  static std::shared_ptr<const Group> free_abelian(int d);
  static std::shared_ptr<const Group> heisenberg();
  static std::shared_ptr<const Group> cyclic(std::int64_t n);
  /// Same group law with a caller-chosen symmetric generating set.
  static std::shared_ptr<const Group> with_generators(
      GroupKind kind, std::int64_t parameter, std::vector<Element> generators,
      std::size_t element_cap = kDefaultElementCap);

  GroupKind kind() const { return kind_; }
  /// d for Z^d, n for Z/nZ, 3 for H3(Z).
  std::int64_t parameter() const { return parameter_; }
  int rank() const { return rank_; }
  bool is_finite() const { return kind_ == GroupKind::cyclic; }
  bool is_abelian() const { return kind_ != GroupKind::heisenberg; }
  bool has_standard_generators() const { return standard_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::size_t element_cap() const { return element_cap_; }
  std::string name() const;

  Element identity() const;
  Element multiply(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  /// Builds an element, reducing cyclic coordinates into [0, n). Throws
  /// std::invalid_argument on arity mismatch.
  Element element(std::span<const std::int64_t> coords) const;
  Element element(std::initializer_list<std::int64_t> coords) const;
  /// Throws std::invalid_argument unless `g` is a valid element of this group.
  void check(const Element& g) const;
  bool contains(const Element& g) const;

  /// Length of a shortest generator word equal to `g`.
  int word_length(const Element& g) const;
  /// Same, always through the breadth-first table.
  int word_length_bfs(const Element& g) const;

  /// Elements of length <= radius, sorted lexicographically.
  std::vector<Element> ball(int radius) const;
  /// |B_0|, ..., |B_radius|.
  std::vector<std::size_t> ball_sizes(int radius) const;

 private:
  Group(GroupKind kind, std::int64_t parameter, std::vector<Element> gens,
        bool standard, std::size_t element_cap);

  // Grows the table until it is complete through `radius`, or until the group
  // is exhausted. Caller holds mutex_.
  void grow_locked(int radius) const;

  GroupKind kind_;
  std::int64_t parameter_;
  int rank_;
  std::vector<Element> generators_;
  bool standard_;
  std::size_t element_cap_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Element, int, ElementHash> length_;
  // Elements in breadth-first order; layer k occupies
  // [layer_start_[k], layer_start_[k+1]).
  mutable std::vector<Element> order_;
  mutable std::vector<std::size_t> layer_start_;
  mutable bool saturated_ = false;
};

using GroupPtr = std::shared_ptr<const Group>;

struct GrowthEstimate {
  double d_hat = 0.0;
  double fit_residual = 0.0;
  /// min and max of |B_n| / n^d over the fitted window, d = round(d_hat).
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<std::size_t> counts;
};

/// Least-squares slope of log|B_n| against log n over n in [maxR/2, maxR].
GrowthEstimate growth_order_estimate(const Group& group, int max_radius);

}  // namespace orlicz
