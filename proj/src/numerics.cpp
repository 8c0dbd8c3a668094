#include "orlicz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

namespace orlicz {

double Tolerance::slack(double scale) const {
  return abs + rel * std::fabs(scale);
}

bool Tolerance::close(double a, double b) const {
  return std::fabs(a - b) <= slack(std::max(std::fabs(a), std::fabs(b)));
}

double expand_upper_bracket(const ScalarFn& f, double target, double start,
                            double cap) {
  double hi = start;
  while (f(hi) < target) {
    if (hi * 2.0 > cap) {
      std::ostringstream msg;
      msg << "bracket for target " << target << " exceeds cap " << cap;
      throw bracket_error(msg.str(), target, cap);
    }
    hi *= 2.0;
  }
  return hi;
}

double bisect_increasing(const ScalarFn& f, double target, double lo,
                         double hi, int max_iter, double x_rel_tol) {
  for (int i = 0; i < max_iter; ++i) {
    const double mid = std::midpoint(lo, hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= x_rel_tol * hi) break;
  }
  return std::midpoint(lo, hi);
}

double solve_increasing(const ScalarFn& f, double target, double lo,
                        double hi) {
  const auto g = [&](double x) { return f(x) - target; };
  const double glo = g(lo);
  const double ghi = g(hi);
  if (glo >= 0.0) return lo;
  if (ghi <= 0.0) return hi;
  if (!std::isfinite(glo) || !std::isfinite(ghi)) {
    return bisect_increasing(f, target, lo, hi);
  }
  std::uintmax_t max_iter = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(50);
  const auto [a, b] =
      boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, tol, max_iter);
  return std::midpoint(a, b);
}

double golden_section_max(const ScalarFn& f, double lo, double hi,
                          int max_iter, double x_rel_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter; ++i) {
    if (b - a <= x_rel_tol * std::max({1.0, std::fabs(a), std::fabs(b)})) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

double simpson_integrate(const ScalarFn& f, double a, double b, double tol,
                         int max_doublings) {
  if (a == b) return 0.0;
  // Endpoint sum, odd-node sum and even-node sum are kept separately so each
  // doubling only evaluates the new midpoints.
  const double ends = f(a) + f(b);
  int panels = 2;
  double h = (b - a) / panels;
  double odd = f(a + h);
  double even = 0.0;
  double estimate = (ends + 4.0 * odd + 2.0 * even) * h / 3.0;
  for (int k = 0; k < max_doublings; ++k) {
    even += odd;
    panels *= 2;
    h = (b - a) / panels;
    odd = 0.0;
    for (int i = 1; i < panels; i += 2) odd += f(a + i * h);
    const double next = (ends + 4.0 * odd + 2.0 * even) * h / 3.0;
    if (std::fabs(next - estimate) < tol * std::max(1.0, std::fabs(next))) {
      return next;
    }
    estimate = next;
  }
  return estimate;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  if (n == 1) {
    xs[0] = lo;
    return xs;
  }
  const double l0 = std::log(lo);
  const double step = (std::log(hi) - l0) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = std::exp(l0 + step * i);
  xs.back() = hi;
  return xs;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace orlicz
