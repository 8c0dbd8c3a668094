#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <sstream>

namespace orlicz {

namespace {

std::shared_ptr<const ScalarFn> share(std::optional<ScalarFn> fn) {
  if (!fn) return nullptr;
  return std::make_shared<const ScalarFn>(std::move(*fn));
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// Stable x^k-series forms of the exponential pair near zero.
double expm_value(double x) {
  if (x < 1e-3) {
    return x * x * (0.5 + x * (1.0 / 6 + x * (1.0 / 24 + x * (1.0 / 120 + x / 720))));
  }
  return std::expm1(x) - x;
}

double expm_conjugate_value(double y) {
  if (y < 1e-3) {
    return y * y * (0.5 + y * (-1.0 / 6 + y * (1.0 / 12 + y * (-1.0 / 20 + y / 30))));
  }
  return (1.0 + y) * std::log1p(y) - y;
}

// Maximizer of xy - phi(x) over x >= 0.
double conjugate_maximizer(const YoungFunction& phi, double y,
                           ConjugateSearch search) {
  if (y <= 0.0) return 0.0;
  if (phi.has_derivative_inverse()) return phi.derivative_inverse(y);
  if (phi.has_derivative()) {
    const ScalarFn gen = [&](double x) { return phi.derivative(x); };
    if (gen(0.0) >= y) return 0.0;
    double hi = 0.0;
    try {
      hi = expand_upper_bracket(gen, y, 1.0, search.cap);
    } catch (const bracket_error&) {
      throw bracket_error("conjugate of " + phi.name() + " at y=" +
                              fmt_double(y) + ": maximizer exceeds cap " +
                              fmt_double(search.cap),
                          y, search.cap);
    }
    return solve_increasing(gen, y, hi <= 1.0 ? 0.0 : hi / 2, hi);
  }
  const ScalarFn objective = [&](double x) { return x * y - phi(x); };
  double b = 1.0;
  while (objective(2.0 * b) > objective(b)) {
    if (2.0 * b > search.cap) {
      throw bracket_error("conjugate of " + phi.name() + " at y=" +
                              fmt_double(y) + ": bracket exceeds cap " +
                              fmt_double(search.cap),
                          y, search.cap);
    }
    b *= 2.0;
  }
  const double x = golden_section_max(objective, 0.0, 2.0 * b);
  return objective(x) > 0.0 ? x : 0.0;
}

}  // namespace

YoungFunction::YoungFunction(std::string name, ScalarFn value,
                             std::optional<ScalarFn> derivative,
                             std::optional<ScalarFn> derivative_inverse)
    : name_(std::move(name)),
      value_(std::make_shared<const ScalarFn>(std::move(value))),
      derivative_(share(std::move(derivative))),
      derivative_inverse_(share(std::move(derivative_inverse))) {}

double YoungFunction::derivative(double x) const {
  if (!derivative_) {
    throw std::logic_error(name_ + " has no derivative attached");
  }
  return (*derivative_)(x);
}

double YoungFunction::derivative_inverse(double y, double cap) const {
  if (derivative_inverse_) return (*derivative_inverse_)(y);
  if (!derivative_) {
    throw std::logic_error(name_ + " has no derivative to invert");
  }
  const ScalarFn gen = [this](double x) { return (*derivative_)(x); };
  if (y <= gen(0.0)) return 0.0;
  const double hi = expand_upper_bracket(gen, y, 1.0, cap);
  return solve_increasing(gen, y, hi <= 1.0 ? 0.0 : hi / 2, hi);
}

double YoungFunction::inverse(double y) const {
  if (y <= 0.0) return 0.0;
  const ScalarFn f = [this](double x) { return (*value_)(x); };
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) < y) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      throw std::overflow_error("inverse of " + name_ + " out of range");
    }
  }
  return solve_increasing(f, y, lo, hi);
}

YoungFunction YoungFunction::with_conjugate(const YoungFunction& psi) const {
  YoungFunction copy = *this;
  copy.conjugate_ = std::make_shared<const YoungFunction>(psi);
  return copy;
}

YoungFunction YoungFunction::without_derivative() const {
  YoungFunction copy = *this;
  copy.derivative_ = nullptr;
  copy.derivative_inverse_ = nullptr;
  return copy;
}

YoungFunction YoungFunction::without_derivative_inverse() const {
  YoungFunction copy = *this;
  copy.derivative_inverse_ = nullptr;
  return copy;
}

void check_young_invariants(const YoungFunction& f,
                            std::span<const double> grid, Tolerance tol) {
  if (f(0.0) != 0.0) {
    throw young_invariant_error(f.name() + ": value at 0 is " +
                                    fmt_double(f(0.0)),
                                0.0, 0.0);
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x1 = grid[i - 1];
    const double x2 = grid[i];
    const double f1 = f(x1);
    const double f2 = f(x2);
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      throw young_invariant_error(f.name() + ": non-finite value", x1, x2);
    }
    if (!(f1 < f2)) {
      throw young_invariant_error(f.name() + ": not strictly increasing", x1,
                                  x2);
    }
    const double mid = f(std::midpoint(x1, x2));
    const double chord = 0.5 * (f1 + f2);
    if (mid > chord + tol.slack(chord)) {
      throw young_invariant_error(f.name() + ": midpoint convexity fails",
                                  x1, x2);
    }
  }
}

double conjugate_at(const YoungFunction& phi, double y,
                    ConjugateSearch search) {
  if (y <= 0.0) return 0.0;
  const double x = conjugate_maximizer(phi, y, search);
  return std::max(0.0, x * y - phi(x));
}

YoungFunction conjugate(const YoungFunction& phi, ConjugateSearch search) {
  std::optional<ScalarFn> inverse;
  if (phi.has_derivative()) {
    inverse = [phi](double x) { return phi.derivative(x); };
  }
  return YoungFunction(
      "conj[" + phi.name() + "]",
      [phi, search](double y) { return conjugate_at(phi, y, search); },
      ScalarFn([phi, search](double y) {
        return conjugate_maximizer(phi, y, search);
      }),
      std::move(inverse));
}

ComplementaryPair build_from_generator(ScalarFn generator, std::string name,
                                       GeneratorGrid grid) {
  if (generator(0.0) != 0.0) {
    throw generator_error(name + ": generator must vanish at 0", 0.0, 0.0);
  }
  for (int i = 1; i <= grid.samples; ++i) {
    const double x1 = grid.hi * (i - 1) / grid.samples;
    const double x2 = grid.hi * i / grid.samples;
    if (!(generator(x1) < generator(x2))) {
      throw generator_error(name + ": generator not strictly increasing on [" +
                                fmt_double(x1) + ", " + fmt_double(x2) + "]",
                            x1, x2);
    }
  }
  auto gen = std::make_shared<const ScalarFn>(std::move(generator));
  const double tol = grid.quadrature_tol;
  const ScalarFn gen_inverse = [gen](double y) {
    if (y <= 0.0) return 0.0;
    const ScalarFn& g = *gen;
    double lo = 0.0;
    double hi = 1.0;
    while (g(hi) < y) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw std::overflow_error("generator bounded");
    }
    return bisect_increasing(g, y, lo, hi);
  };
  YoungFunction psi(
      "int[" + name + "^-1]",
      [gen_inverse, tol](double y) {
        return y <= 0.0 ? 0.0 : simpson_integrate(gen_inverse, 0.0, y, tol);
      },
      gen_inverse, ScalarFn([gen](double x) { return (*gen)(x); }));
  YoungFunction phi(
      "int[" + name + "]",
      [gen, tol](double x) {
        return x <= 0.0 ? 0.0 : simpson_integrate(*gen, 0.0, x, tol);
      },
      ScalarFn([gen](double x) { return (*gen)(x); }), gen_inverse);
  return {phi, psi, PairingMode::numeric_conjugate};
}

double young_gap(const ComplementaryPair& pair, double x, double y) {
  return pair.phi(x) + pair.psi(y) - x * y;
}

Delta2Estimate delta2_estimate(const YoungFunction& phi,
                               std::span<const double> grid) {
  if (grid.size() < 2 || !(grid.front() > 0.0) ||
      grid.back() / grid.front() < 1e6 * (1.0 - 1e-12)) {
    throw std::invalid_argument("delta2 grid must span at least 6 decades");
  }
  Delta2Estimate out;
  out.xs.assign(grid.begin(), grid.end());
  out.ratios.reserve(grid.size());
  bool finite = true;
  for (double x : grid) {
    const double base = phi(x);
    if (base == 0.0) {
      throw young_invariant_error(
          phi.name() + ": vanishes at nonzero point " + fmt_double(x), x, x);
    }
    const double r = phi(2.0 * x) / base;
    if (!std::isfinite(r)) finite = false;
    out.ratios.push_back(r);
  }

  const auto at_or_after = [&](double x) {
    const auto it = std::lower_bound(out.xs.begin(), out.xs.end(), x);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - out.xs.begin(), static_cast<std::ptrdiff_t>(out.xs.size()) - 1));
  };
  const double hi = out.xs.back();
  const std::size_t last = out.xs.size() - 1;
  const std::size_t one_decade = at_or_after(hi / 10.0);
  const std::size_t two_decades = at_or_after(hi / 100.0);
  bool accelerating = false;
  if (finite) {
    const double d_last = out.ratios[last] - out.ratios[one_decade];
    const double d_prev = out.ratios[one_decade] - out.ratios[two_decades];
    accelerating = d_last > 1e-6 * std::fabs(out.ratios[last]) &&
                   d_last >= 0.5 * d_prev;
  }
  out.bounded = finite && !accelerating;
  out.constant = finite ? *std::max_element(out.ratios.begin(), out.ratios.end())
                        : std::numeric_limits<double>::infinity();
  return out;
}

EquivalenceResult strong_equivalence(const YoungFunction& phi1,
                                     const YoungFunction& phi2,
                                     std::span<const double> grid,
                                     CandidateRange range) {
  EquivalenceResult out;
  for (double x : grid) {
    if (!(x > 0.0)) continue;
    const double target = phi2(x);
    double r = std::numeric_limits<double>::infinity();
    if (std::isfinite(target)) {
      try {
        r = phi1.inverse(target) / x;
      } catch (const std::overflow_error&) {
      }
    }
    out.xs.push_back(x);
    out.ratios.push_back(r);
  }
  if (out.xs.empty()) return out;
  const auto [lo_it, hi_it] =
      std::minmax_element(out.ratios.begin(), out.ratios.end());
  // Rounding in the inverse can put r one ulp on the wrong side; widen by a
  // relative 1e-12 so the inequalities hold exactly on the grid.
  out.a = *lo_it * (1.0 - 1e-12);
  out.b = *hi_it * (1.0 + 1e-12);
  if (out.a < range.min_a || !(out.a > 0.0)) {
    out.violating_x = out.xs[lo_it - out.ratios.begin()];
  } else if (out.b > range.max_b || !std::isfinite(out.b)) {
    out.violating_x = out.xs[hi_it - out.ratios.begin()];
  } else {
    out.found = true;
  }
  return out;
}

YoungFunction catalog_function(std::string_view spec) {
  return catalog_pair(spec).phi;
}

ComplementaryPair catalog_pair(std::string_view spec) {
  const std::string s(spec);
  if (s.rfind("pnorm:", 0) == 0) {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(s.substr(6), &used);
      if (used != s.size() - 6) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + s + "'");
    }
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw std::invalid_argument("pnorm exponent must exceed 1: '" + s + "'");
    }
    const double q = p / (p - 1.0);
    YoungFunction psi(
        "pnorm:" + fmt_double(q), [q](double y) { return std::pow(y, q) / q; },
        ScalarFn([q](double y) { return std::pow(y, q - 1.0); }),
        ScalarFn([p](double x) { return std::pow(x, p - 1.0); }));
    YoungFunction phi(
        s, [p](double x) { return std::pow(x, p) / p; },
        ScalarFn([p](double x) { return std::pow(x, p - 1.0); }),
        ScalarFn([q](double y) { return std::pow(y, q - 1.0); }));
    return {phi.with_conjugate(psi), psi.with_conjugate(phi),
            PairingMode::closed_form};
  }
  if (s == "expm") {
    YoungFunction psi("(1+y)ln(1+y)-y", expm_conjugate_value,
                      ScalarFn([](double y) { return std::log1p(y); }),
                      ScalarFn([](double x) { return std::expm1(x); }));
    YoungFunction phi("expm", expm_value,
                      ScalarFn([](double x) { return std::expm1(x); }),
                      ScalarFn([](double y) { return std::log1p(y); }));
    return {phi.with_conjugate(psi), psi.with_conjugate(phi),
            PairingMode::closed_form};
  }
  if (s == "xlog") {
    YoungFunction phi(
        "xlog", [](double x) { return x * std::log1p(x); },
        ScalarFn([](double x) { return std::log1p(x) + x / (1.0 + x); }));
    return {phi, conjugate(phi, {kCatalogConjugateCap}),
            PairingMode::numeric_conjugate};
  }
  if (s == "cosh") {
    YoungFunction phi(
        "cosh",
        [](double x) {
          const double h = std::sinh(0.5 * x);
          return 2.0 * h * h;
        },
        ScalarFn([](double x) { return std::sinh(x); }),
        ScalarFn([](double y) { return std::asinh(y); }));
    return {phi, conjugate(phi, {kCatalogConjugateCap}),
            PairingMode::numeric_conjugate};
  }
  throw std::invalid_argument("unknown Young function '" + s +
                              "' (expected pnorm:<p>, xlog, cosh or expm)");
}

std::vector<std::string> catalog_pair_names() {
  return {"pnorm:1.5", "pnorm:2", "pnorm:3", "xlog", "cosh", "expm"};
}

}  // namespace orlicz
