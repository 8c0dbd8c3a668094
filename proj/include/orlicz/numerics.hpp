#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

/// Absolute-plus-relative comparison tolerance. The defaults are used by
/// every inequality check unless a caller overrides them.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-6;

  /// Allowed slack when comparing against a quantity of size `scale`.
  double slack(double scale) const;
  bool close(double a, double b) const;
};

/// Raised when a bracket cannot be established below its cap.
class bracket_error : public std::runtime_error {
 public:
  bracket_error(const std::string& what, double at, double cap)
      : std::runtime_error(what), at_(at), cap_(cap) {}
  double at() const { return at_; }
  double cap() const { return cap_; }

 private:
  double at_;
  double cap_;
};

using ScalarFn = std::function<double(double)>;

/// Doubles `hi` (starting at `start`) until `f(hi) >= target`. Throws
/// bracket_error once `hi` would exceed `cap`.
double expand_upper_bracket(const ScalarFn& f, double target, double start,
                            double cap);

/// Solves f(x) = target for increasing f on [lo, hi] by plain bisection.
/// Stops when the bracket width falls under `x_rel_tol * hi` or after
/// `max_iter` halvings.
double bisect_increasing(const ScalarFn& f, double target, double lo,
                         double hi, int max_iter = 200,
                         double x_rel_tol = 1e-16);

/// Solves f(x) = target for increasing f on [lo, hi] with TOMS 748.
/// Converges to a bracket of relative width ~1e-15 in a handful of steps.
double solve_increasing(const ScalarFn& f, double target, double lo,
                        double hi);

/// Maximizer of a unimodal function on [lo, hi] by golden-section search.
/// Stops once the bracket is below `x_rel_tol * max(1, |lo|, |hi|)`.
double golden_section_max(const ScalarFn& f, double lo, double hi,
                          int max_iter = 200, double x_rel_tol = 1e-14);

/// Composite Simpson on [a, b], doubling the panel count until two
/// successive estimates differ by less than `tol * max(1, |estimate|)`.
double simpson_integrate(const ScalarFn& f, double a, double b,
                         double tol = 1e-10, int max_doublings = 22);

/// `n` log-spaced points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

/// SplitMix64 step, used to derive independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Uniform double in [0, 1) from 53 random bits; identical on every platform.
template <typename Engine>
double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace orlicz
