#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "orlicz/group.hpp"

namespace orlicz {

using Complex = std::complex<double>;

/// A finitely supported map from group elements to complex amplitudes.
///
/// Entries are kept sorted by element with no duplicates and no exact zeros.
/// Near-zero amplitudes are kept: dropping them would change norms.
class OrliczVector {
 public:
  using Entry = std::pair<Element, Complex>;

  OrliczVector() = default;
  /// Sums duplicate elements, then prunes exact zeros.
  static OrliczVector from_entries(std::vector<Entry> entries);
  static OrliczVector delta(const Element& s, Complex amplitude = 1.0);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Amplitude at `s`, zero off the support.
  Complex at(const Element& s) const;
  std::vector<Element> support() const;

  OrliczVector scaled(Complex c) const;
  OrliczVector operator+(const OrliczVector& other) const;
  OrliczVector operator-(const OrliczVector& other) const;
  /// Pointwise multiplication by a real function of the element.
  OrliczVector pointwise(const std::function<double(const Element&)>& w) const;
  OrliczVector conjugated() const;

  double l1_norm() const;
  double sup_abs() const;
  /// max |this(s) - other(s)| and sum |this(s) - other(s)|.
  double max_distance(const OrliczVector& other) const;
  double l1_distance(const OrliczVector& other) const;

  /// Throws std::invalid_argument if some element does not belong to `g`.
  void check_group(const Group& g) const;

 private:
  std::vector<Entry> entries_;
};

/// Random vector: support is a uniformly chosen nonempty subset of `ball`,
/// amplitudes uniform on [0,1) + i[0,1).
OrliczVector random_vector(std::span<const Element> ball, std::mt19937_64& rng);

/// Same support law, real amplitudes uniform on (0,1].
OrliczVector random_positive_vector(std::span<const Element> ball,
                                    std::mt19937_64& rng);

}  // namespace orlicz
