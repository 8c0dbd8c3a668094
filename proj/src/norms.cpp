#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <map>
#include <sstream>

namespace orlicz {

namespace {

constexpr double kModularTol = 1e-12;
constexpr int kMaxSteps = 200;
constexpr double kAgreementTol = 1e-5;

std::vector<double> magnitudes(const OrliczVector& f) {
  std::vector<double> out;
  out.reserve(f.size());
  for (const auto& [s, a] : f) out.push_back(std::abs(a));
  return out;
}

double modular_of(const YoungFunction& phi, std::span<const double> mags,
                  double scale) {
  double total = 0.0;
  for (double m : mags) {
    total += phi(m * scale);
    if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
  }
  return total;
}

struct Stationary {
  double value = 0.0;
  double t = 0.0;
};

// v_s(lambda) = (psi')^{-1}(|f_s| / lambda); lambda = e^{-t} makes the
// constraint increasing in t.
double stationary_entry(const YoungFunction& psi, double m, double t) {
  return psi.derivative_inverse(m * std::exp(t));
}

Stationary stationarity_route(const ComplementaryPair& pair,
                              std::span<const double> mags) {
  const YoungFunction& psi = pair.psi;
  const ScalarFn constraint = [&](double t) {
    double total = 0.0;
    for (double m : mags) {
      total += psi(stationary_entry(psi, m, t));
      if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
    }
    return total;
  };
  const double sup = *std::max_element(mags.begin(), mags.end());
  double lo = -std::log(sup);
  double hi = lo;
  int steps = 0;
  while (constraint(lo) >= 1.0) {
    lo -= 1.0;
    if (++steps > kMaxSteps) throw norm_error("stationarity: no lower bracket");
  }
  while (constraint(hi) < 1.0) {
    hi += 1.0;
    if (++steps > 2 * kMaxSteps) {
      throw norm_error("stationarity: no upper bracket");
    }
  }
  Stationary out;
  out.t = solve_increasing(constraint, 1.0, lo, hi);
  for (double m : mags) out.value += m * stationary_entry(psi, m, out.t);
  return out;
}

double amemiya_route(const YoungFunction& phi, std::span<const double> mags) {
  // k = e^t; the objective is unimodal in k.
  const ScalarFn neg_objective = [&](double t) {
    const double k = std::exp(t);
    return -(1.0 + modular_of(phi, mags, k)) / k;
  };
  const double sup = *std::max_element(mags.begin(), mags.end());
  double mid = -std::log(sup);
  int steps = 0;
  while (neg_objective(mid + 1.0) > neg_objective(mid)) {
    mid += 1.0;
    if (++steps > kMaxSteps) throw norm_error("amemiya: no bracket");
  }
  while (neg_objective(mid - 1.0) > neg_objective(mid)) {
    mid -= 1.0;
    if (++steps > 2 * kMaxSteps) throw norm_error("amemiya: no bracket");
  }
  const double t = golden_section_max(neg_objective, mid - 1.0, mid + 1.0);
  return -neg_objective(t);
}

}  // namespace

double modular(const YoungFunction& phi, const OrliczVector& f) {
  const auto mags = magnitudes(f);
  return modular_of(phi, mags, 1.0);
}

double luxemburg_norm(const YoungFunction& phi, const OrliczVector& f) {
  if (f.empty()) return 0.0;
  const auto mags = magnitudes(f);
  const auto m = [&](double k) { return modular_of(phi, mags, 1.0 / k); };
  const double start = *std::max_element(mags.begin(), mags.end());
  double lo = start;
  double hi = start;
  int steps = 0;
  if (m(start) > 1.0) {
    while (m(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
      if (++steps > kMaxSteps) throw norm_error("luxemburg: no bracket");
    }
  } else {
    while (m(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      if (++steps > kMaxSteps) throw norm_error("luxemburg: no bracket");
    }
  }
  // m is decreasing in k: m(lo) > 1 >= m(hi).
  double k = std::midpoint(lo, hi);
  for (int i = 0; i < kMaxSteps; ++i) {
    const double value = m(k);
    if (std::fabs(value - 1.0) <= kModularTol) break;
    if (value > 1.0) {
      lo = k;
    } else {
      hi = k;
    }
    const double next = std::midpoint(lo, hi);
    if (next == k) break;
    k = next;
  }
  return k;
}

OrliczNormResult orlicz_norm_detailed(const ComplementaryPair& pair,
                                      const OrliczVector& f) {
  OrliczNormResult out;
  if (f.empty()) {
    out.cross_checked = true;
    return out;
  }
  const auto mags = magnitudes(f);
  out.amemiya = amemiya_route(pair.phi, mags);
  if (pair.psi.has_derivative_inverse() || pair.psi.has_derivative()) {
    out.stationarity = stationarity_route(pair, mags).value;
    out.cross_checked = true;
    out.agreement = std::fabs(out.stationarity - out.amemiya) /
                    std::max(out.stationarity, out.amemiya);
    if (!(out.agreement <= kAgreementTol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "Orlicz norm routes disagree for " << pair.name()
          << ": stationarity " << out.stationarity << " vs one-dimensional "
          << out.amemiya;
      throw norm_error(msg.str());
    }
  }
  out.value = std::max(out.stationarity, out.amemiya);
  return out;
}

double orlicz_norm(const ComplementaryPair& pair, const OrliczVector& f) {
  return orlicz_norm_detailed(pair, f).value;
}

NormReport norm_report(const ComplementaryPair& pair, const OrliczVector& f) {
  const auto o = orlicz_norm_detailed(pair, f);
  return {luxemburg_norm(pair.phi, f), o.value, o.agreement};
}

double dual_sampling_bound(const ComplementaryPair& pair, const OrliczVector& f,
                           int samples, std::mt19937_64& rng) {
  double best = 0.0;
  if (f.empty()) return best;
  const auto support = f.support();
  for (int i = 0; i < samples; ++i) {
    OrliczVector v = random_positive_vector(support, rng);
    v = v.scaled(1.0 / luxemburg_norm(pair.psi, v));
    while (modular(pair.psi, v) > 1.0) v = v.scaled(1.0 - 1e-12);
    double total = 0.0;
    for (const auto& [s, a] : v) total += std::abs(a * f.at(s));
    best = std::max(best, total);
  }
  return best;
}

OrliczVector norming_vector(const ComplementaryPair& pair,
                           const OrliczVector& f) {
  if (f.empty()) return {};
  if (!pair.psi.has_derivative_inverse() && !pair.psi.has_derivative()) {
    throw norm_error("norming vector needs the derivative of " +
                     pair.psi.name());
  }
  const auto mags = magnitudes(f);
  const double t = stationarity_route(pair, mags).t;
  std::vector<OrliczVector::Entry> entries;
  for (const auto& [s, a] : f) {
    const double m = std::abs(a);
    entries.emplace_back(s, stationary_entry(pair.psi, m, t) * std::conj(a) / m);
  }
  return OrliczVector::from_entries(std::move(entries));
}

double holder_gap(const ComplementaryPair& pair, const OrliczVector& f,
                  const OrliczVector& g) {
  double pointwise = 0.0;
  for (const auto& [s, a] : f) pointwise += std::abs(a * g.at(s));
  const ComplementaryPair dual = pair.swapped();
  const double first = luxemburg_norm(pair.phi, f) * orlicz_norm(dual, g);
  const double second = orlicz_norm(pair, f) * luxemburg_norm(pair.psi, g);
  return std::min(first, second) - pointwise;
}

double weighted_norm(const ComplementaryPair& pair, const Weight& w,
                     const OrliczVector& f, NormKind kind) {
  const OrliczVector fw =
      f.pointwise([&w](const Element& s) { return w(s); });
  return kind == NormKind::orlicz ? orlicz_norm(pair, fw)
                                  : luxemburg_norm(pair.phi, fw);
}

std::vector<MembershipRow> membership_diagnostic(
    const YoungFunction& psi, const Group& group,
    const std::function<double(const Element&)>& h,
    std::span<const double> alphas, std::span<const int> radii,
    MembershipOptions options) {
  if (radii.empty()) throw std::invalid_argument("no radii given");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) {
      throw std::invalid_argument("radii must be increasing");
    }
  }
  const int max_radius = radii.back();
  const auto ball = group.ball(max_radius);
  std::vector<int> lengths;
  std::vector<double> hs;
  lengths.reserve(ball.size());
  for (const Element& s : ball) {
    lengths.push_back(group.word_length(s));
    hs.push_back(h(s));
  }

  std::vector<MembershipRow> rows;
  for (double alpha : alphas) {
    MembershipRow row;
    row.alpha = alpha;
    row.radii.assign(radii.begin(), radii.end());
    std::vector<double> shell(static_cast<std::size_t>(max_radius) + 1, 0.0);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      shell[lengths[i]] += psi(alpha * hs[i]);
    }
    double running = 0.0;
    int next = 0;
    for (int r : radii) {
      for (; next <= r; ++next) running += shell[next];
      row.partial_sums.push_back(running);
    }

    const std::size_t m = radii.size();
    if (m < 3) {
      row.verdict = "inconclusive";
      rows.push_back(std::move(row));
      continue;
    }
    const auto rate = [&](std::size_t k) {
      return (row.partial_sums[k] - row.partial_sums[k - 1]) /
             (radii[k] - radii[k - 1]);
    };
    const auto middle = [&](std::size_t k) {
      return 0.5 * (radii[k] + radii[k - 1]);
    };
    const double d_last = rate(m - 1);
    const double d_prev = rate(m - 2);
    const double total = row.partial_sums.back();
    if (d_last == 0.0) {
      // The ball stopped growing or h vanishes beyond it: nothing is left.
      row.shell_exponent = std::numeric_limits<double>::infinity();
      row.growth_exponent = 0.0;
      row.tail_estimate = 0.0;
      row.verdict = "converging";
      rows.push_back(std::move(row));
      continue;
    }
    row.shell_exponent =
        d_prev > 0.0 ? -std::log(d_last / d_prev) /
                           std::log(middle(m - 1) / middle(m - 2))
                     : 0.0;
    row.growth_exponent =
        std::log(row.partial_sums[m - 1] / row.partial_sums[m - 2]) /
        std::log(static_cast<double>(radii[m - 1]) / radii[m - 2]);
    const double mu = row.shell_exponent;
    const auto tail_after = [&](std::size_t k) {
      return mu > 1.0 ? rate(k) * middle(k) / (mu - 1.0)
                      : std::numeric_limits<double>::infinity();
    };
    row.tail_estimate = tail_after(m - 1);
    const bool tails_shrinking = tail_after(m - 1) < tail_after(m - 2);
    if (mu > 1.0 + options.exponent_margin && tails_shrinking &&
        row.tail_estimate <= options.tail_tol * total) {
      row.verdict = "converging";
    } else if (mu < 1.0 - options.exponent_margin ||
               row.growth_exponent > 1.0) {
      row.verdict = "diverging";
    } else {
      row.verdict = "inconclusive";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace orlicz
