#include "orlicz/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace orlicz {

Element::Element(std::initializer_list<std::int64_t> coords)
    : Element(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Element::Element(std::span<const std::int64_t> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxRank)) {
    throw std::invalid_argument("element arity exceeds " +
                                std::to_string(kMaxRank));
  }
  rank_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

std::string Element::str() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < rank_; ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(e.rank());
  for (std::int64_t c : e.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::vector<Element> standard_generators(GroupKind kind,
                                         std::int64_t parameter) {
  std::vector<Element> gens;
  switch (kind) {
    case GroupKind::free_abelian:
      for (int i = 0; i < parameter; ++i) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(parameter), 0);
        c[i] = 1;
        gens.emplace_back(std::span<const std::int64_t>(c));
        c[i] = -1;
        gens.emplace_back(std::span<const std::int64_t>(c));
      }
      break;
    case GroupKind::heisenberg:
      gens = {Element{1, 0, 0}, Element{-1, 0, 0}, Element{0, 1, 0},
              Element{0, -1, 0}};
      break;
    case GroupKind::cyclic:
      gens.push_back(Element{1 % parameter});
      if (parameter > 2) gens.push_back(Element{parameter - 1});
      break;
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

int rank_of(GroupKind kind, std::int64_t parameter) {
  switch (kind) {
    case GroupKind::free_abelian:
      return static_cast<int>(parameter);
    case GroupKind::heisenberg:
      return 3;
    case GroupKind::cyclic:
      return 1;
  }
  return 0;
}

std::int64_t reduce_mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Group::Group(GroupKind kind, std::int64_t parameter, std::vector<Element> gens,
             bool standard, std::size_t element_cap)
    : kind_(kind),
      parameter_(parameter),
      rank_(rank_of(kind, parameter)),
      generators_(std::move(gens)),
      standard_(standard),
      element_cap_(element_cap) {
  const Element e = identity();
  length_.emplace(e, 0);
  order_.push_back(e);
  layer_start_ = {0, 1};
}

GroupPtr Group::free_abelian(int d) {
  if (d < 1 || d > Element::kMaxRank) {
    throw std::invalid_argument("free abelian rank must be in [1, " +
                                std::to_string(Element::kMaxRank) + "]");
  }
  return GroupPtr(new Group(GroupKind::free_abelian, d,
                            standard_generators(GroupKind::free_abelian, d),
                            true, kDefaultElementCap));
}

GroupPtr Group::heisenberg() {
  return GroupPtr(new Group(GroupKind::heisenberg, 3,
                            standard_generators(GroupKind::heisenberg, 3),
                            true, kDefaultElementCap));
}

GroupPtr Group::cyclic(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("cyclic order must be at least 2");
  return GroupPtr(new Group(GroupKind::cyclic, n,
                            standard_generators(GroupKind::cyclic, n), true,
                            kDefaultElementCap));
}

GroupPtr Group::with_generators(GroupKind kind, std::int64_t parameter,
                                std::vector<Element> generators,
                                std::size_t element_cap) {
  if (kind == GroupKind::free_abelian &&
      (parameter < 1 || parameter > Element::kMaxRank)) {
    throw std::invalid_argument("free abelian rank out of range");
  }
  if (kind == GroupKind::cyclic && parameter < 2) {
    throw std::invalid_argument("cyclic order must be at least 2");
  }
  if (kind == GroupKind::heisenberg) parameter = 3;
  // A throwaway instance validates elements and computes inverses.
  const Group probe(kind, parameter, {}, false, element_cap);
  std::vector<Element> gens;
  for (const Element& g : generators) {
    const Element reduced = probe.element(g.coords());
    if (reduced == probe.identity()) {
      throw std::invalid_argument("identity listed as a generator");
    }
    gens.push_back(reduced);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  for (const Element& g : gens) {
    if (!std::binary_search(gens.begin(), gens.end(), probe.invert(g))) {
      throw std::invalid_argument("generating set not symmetric: inverse of " +
                                  g.str() + " missing");
    }
  }
  const bool standard = gens == standard_generators(kind, parameter);
  return GroupPtr(new Group(kind, parameter, std::move(gens), standard,
                            element_cap));
}

std::string Group::name() const {
  switch (kind_) {
    case GroupKind::free_abelian:
      return "Z^" + std::to_string(parameter_);
    case GroupKind::heisenberg:
      return "H3(Z)";
    case GroupKind::cyclic:
      return "Z/" + std::to_string(parameter_);
  }
  return "?";
}

Element Group::identity() const {
  std::array<std::int64_t, Element::kMaxRank> zeros{};
  return Element(std::span<const std::int64_t>(zeros.data(),
                                                static_cast<std::size_t>(rank_)));
}

bool Group::contains(const Element& g) const {
  if (g.rank() != rank_) return false;
  if (kind_ == GroupKind::cyclic) return g[0] >= 0 && g[0] < parameter_;
  return true;
}

void Group::check(const Element& g) const {
  if (g.rank() != rank_) {
    throw std::invalid_argument("element " + g.str() + " has arity " +
                                std::to_string(g.rank()) + ", " + name() +
                                " expects " + std::to_string(rank_));
  }
  if (!contains(g)) {
    throw std::invalid_argument("element " + g.str() + " not reduced in " +
                                name());
  }
}

Element Group::element(std::span<const std::int64_t> coords) const {
  if (coords.size() != static_cast<std::size_t>(rank_)) {
    throw std::invalid_argument(name() + " expects " + std::to_string(rank_) +
                                " coordinates, got " +
                                std::to_string(coords.size()));
  }
  Element e(coords);
  if (kind_ == GroupKind::cyclic) e[0] = reduce_mod(e[0], parameter_);
  return e;
}

Element Group::element(std::initializer_list<std::int64_t> coords) const {
  return element(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

Element Group::multiply(const Element& g, const Element& h) const {
  if (g.rank() != rank_ || h.rank() != rank_) {
    throw std::invalid_argument("coordinate arity mismatch in " + name());
  }
  Element out = g;
  switch (kind_) {
    case GroupKind::free_abelian:
      for (int i = 0; i < rank_; ++i) out[i] += h[i];
      break;
    case GroupKind::heisenberg:
      out[0] += h[0];
      out[1] += h[1];
      out[2] += h[2] + g[0] * h[1];
      break;
    case GroupKind::cyclic:
      out[0] = reduce_mod(g[0] + h[0], parameter_);
      break;
  }
  return out;
}

Element Group::invert(const Element& g) const {
  if (g.rank() != rank_) {
    throw std::invalid_argument("coordinate arity mismatch in " + name());
  }
  Element out = g;
  switch (kind_) {
    case GroupKind::free_abelian:
      for (int i = 0; i < rank_; ++i) out[i] = -g[i];
      break;
    case GroupKind::heisenberg:
      out[0] = -g[0];
      out[1] = -g[1];
      out[2] = -g[2] + g[0] * g[1];
      break;
    case GroupKind::cyclic:
      out[0] = reduce_mod(-g[0], parameter_);
      break;
  }
  return out;
}

void Group::grow_locked(int radius) const {
  while (static_cast<int>(layer_start_.size()) - 2 < radius && !saturated_) {
    const int next = static_cast<int>(layer_start_.size()) - 1;
    const std::size_t begin = layer_start_[layer_start_.size() - 2];
    const std::size_t end = layer_start_.back();
    std::vector<Element> layer;
    std::unordered_set<Element, ElementHash> seen;
    for (std::size_t i = begin; i < end; ++i) {
      for (const Element& s : generators_) {
        Element h = multiply(order_[i], s);
        if (length_.count(h) || seen.count(h)) continue;
        seen.insert(h);
        layer.push_back(h);
      }
    }
    if (order_.size() + layer.size() > element_cap_) {
      throw radius_cap_error(
          name() + ": enumeration of radius " + std::to_string(next) +
              " exceeds the element cap " + std::to_string(element_cap_) +
              " (" + std::to_string(order_.size() + layer.size()) +
              " elements reached)",
          element_cap_, order_.size() + layer.size());
    }
    if (layer.empty()) saturated_ = true;
    for (const Element& h : layer) {
      length_.emplace(h, next);
      order_.push_back(h);
    }
    layer_start_.push_back(order_.size());
  }
}

int Group::word_length_bfs(const Element& g) const {
  check(g);
  std::lock_guard<std::mutex> lock(mutex_);
  for (;;) {
    if (const auto it = length_.find(g); it != length_.end()) {
      return it->second;
    }
    if (saturated_) {
      throw std::logic_error(g.str() + " unreachable from generators of " +
                             name());
    }
    grow_locked(static_cast<int>(layer_start_.size()) - 1);
  }
}

int Group::word_length(const Element& g) const {
  if (standard_ && kind_ == GroupKind::free_abelian) {
    check(g);
    std::int64_t total = 0;
    for (std::int64_t c : g.coords()) total += c < 0 ? -c : c;
    return static_cast<int>(total);
  }
  if (standard_ && kind_ == GroupKind::cyclic) {
    check(g);
    return static_cast<int>(std::min(g[0], parameter_ - g[0]));
  }
  return word_length_bfs(g);
}

std::vector<Element> Group::ball(int radius) const {
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::lock_guard<std::mutex> lock(mutex_);
  grow_locked(radius);
  const std::size_t idx = std::min<std::size_t>(
      static_cast<std::size_t>(radius) + 1, layer_start_.size() - 1);
  std::vector<Element> out(order_.begin(),
                           order_.begin() + static_cast<std::ptrdiff_t>(
                                                layer_start_[idx]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Group::ball_sizes(int radius) const {
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::lock_guard<std::mutex> lock(mutex_);
  grow_locked(radius);
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= radius; ++k) {
    const std::size_t idx = std::min<std::size_t>(
        static_cast<std::size_t>(k) + 1, layer_start_.size() - 1);
    sizes.push_back(layer_start_[idx]);
  }
  return sizes;
}

GrowthEstimate growth_order_estimate(const Group& group, int max_radius) {
  if (max_radius < 6) {
    throw std::invalid_argument("growth fit needs max radius >= 6");
  }
  GrowthEstimate out;
  out.counts = group.ball_sizes(max_radius);
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n = max_radius / 2; n <= max_radius; ++n) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(out.counts[n])));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  out.d_hat = sxy / sxx;
  const double intercept = my - out.d_hat * mx;
  double sq = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + out.d_hat * xs[i]);
    sq += r * r;
  }
  out.fit_residual = std::sqrt(sq / xs.size());
  const double d = std::round(out.d_hat);
  out.c1 = std::numeric_limits<double>::infinity();
  out.c2 = 0.0;
  for (int n = max_radius / 2; n <= max_radius; ++n) {
    const double c = out.counts[n] / std::pow(static_cast<double>(n), d);
    out.c1 = std::min(out.c1, c);
    out.c2 = std::max(out.c2, c);
  }
  return out;
}

}  // namespace orlicz
