#include "orlicz/orlicz_vector.hpp"

#include <algorithm>
#include <stdexcept>

#include "orlicz/numerics.hpp"

namespace orlicz {

OrliczVector OrliczVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  OrliczVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(out.entries_,
                [](const Entry& e) { return e.second == Complex(0.0); });
  return out;
}

OrliczVector OrliczVector::delta(const Element& s, Complex amplitude) {
  return from_entries({{s, amplitude}});
}

Complex OrliczVector::at(const Element& s) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), s,
      [](const Entry& e, const Element& key) { return e.first < key; });
  if (it == entries_.end() || it->first != s) return 0.0;
  return it->second;
}

std::vector<Element> OrliczVector::support() const {
  std::vector<Element> out;
  out.reserve(entries_.size());
  for (const auto& [s, a] : entries_) out.push_back(s);
  return out;
}

OrliczVector OrliczVector::scaled(Complex c) const {
  std::vector<Entry> out = entries_;
  for (auto& e : out) e.second *= c;
  return from_entries(std::move(out));
}

OrliczVector OrliczVector::operator+(const OrliczVector& other) const {
  std::vector<Entry> out = entries_;
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return from_entries(std::move(out));
}

OrliczVector OrliczVector::operator-(const OrliczVector& other) const {
  return *this + other.scaled(-1.0);
}

OrliczVector OrliczVector::pointwise(
    const std::function<double(const Element&)>& w) const {
  std::vector<Entry> out = entries_;
  for (auto& e : out) e.second *= w(e.first);
  return from_entries(std::move(out));
}

OrliczVector OrliczVector::conjugated() const {
  OrliczVector out = *this;
  for (auto& e : out.entries_) e.second = std::conj(e.second);
  return out;
}

double OrliczVector::l1_norm() const {
  double total = 0.0;
  for (const auto& e : entries_) total += std::abs(e.second);
  return total;
}

double OrliczVector::sup_abs() const {
  double sup = 0.0;
  for (const auto& e : entries_) sup = std::max(sup, std::abs(e.second));
  return sup;
}

double OrliczVector::max_distance(const OrliczVector& other) const {
  double worst = 0.0;
  for (const auto& e : entries_) {
    worst = std::max(worst, std::abs(e.second - other.at(e.first)));
  }
  for (const auto& e : other.entries_) {
    worst = std::max(worst, std::abs(e.second - at(e.first)));
  }
  return worst;
}

double OrliczVector::l1_distance(const OrliczVector& other) const {
  double total = 0.0;
  for (const auto& e : entries_) total += std::abs(e.second - other.at(e.first));
  for (const auto& e : other.entries_) {
    if (at(e.first) == Complex(0.0)) total += std::abs(e.second);
  }
  return total;
}

void OrliczVector::check_group(const Group& g) const {
  for (const auto& e : entries_) {
    if (!g.contains(e.first)) {
      throw std::invalid_argument("vector entry " + e.first.str() +
                                  " is not an element of " + g.name());
    }
  }
}

namespace {

std::vector<Element> random_support(std::span<const Element> ball,
                                    std::mt19937_64& rng) {
  if (ball.empty()) throw std::invalid_argument("empty ball");
  std::vector<Element> pool(ball.begin(), ball.end());
  const std::size_t m =
      1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(pool.size()));
  // Partial Fisher-Yates with the portable uniform draw.
  for (std::size_t i = 0; i < std::min(m, pool.size()); ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(uniform01(rng) *
                                     static_cast<double>(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(std::min(m, pool.size()));
  return pool;
}

}  // namespace

OrliczVector random_vector(std::span<const Element> ball,
                           std::mt19937_64& rng) {
  std::vector<OrliczVector::Entry> entries;
  for (const Element& s : random_support(ball, rng)) {
    const double re = uniform01(rng);
    const double im = uniform01(rng);
    entries.emplace_back(s, Complex(re, im));
  }
  return OrliczVector::from_entries(std::move(entries));
}

OrliczVector random_positive_vector(std::span<const Element> ball,
                                    std::mt19937_64& rng) {
  std::vector<OrliczVector::Entry> entries;
  for (const Element& s : random_support(ball, rng)) {
    entries.emplace_back(s, Complex(1.0 - uniform01(rng), 0.0));
  }
  return OrliczVector::from_entries(std::move(entries));
}

}  // namespace orlicz
