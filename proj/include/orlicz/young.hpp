#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/numerics.hpp"

namespace orlicz {

/// A convex, strictly increasing function on [0, inf) with value 0 at 0.
///
/// Functions are opaque evaluators. The generator (the derivative) is
/// optional; when present it enables stationary-point solves instead of
/// direct maximization. A closed-form inverse of the generator may also be
/// attached, which is what the conjugate's derivative is.
class YoungFunction {
 public:
  YoungFunction(std::string name, ScalarFn value,
                std::optional<ScalarFn> derivative = std::nullopt,
                std::optional<ScalarFn> derivative_inverse = std::nullopt);

  double operator()(double x) const { return (*value_)(x); }
  const std::string& name() const { return name_; }

  bool has_derivative() const { return derivative_ != nullptr; }
  double derivative(double x) const;

  bool has_derivative_inverse() const { return derivative_inverse_ != nullptr; }
  /// Inverse of the generator. Uses the attached closed form, or else
  /// brackets by doubling up to `cap` and solves the generator equation.
  double derivative_inverse(double y, double cap = 1e300) const;

  /// Inverse of the function itself, by bracketing and root solving.
  double inverse(double y) const;

  /// The conjugate in closed form, when the function was built with one.
  const YoungFunction* closed_form_conjugate() const {
    return conjugate_.get();
  }
  YoungFunction with_conjugate(const YoungFunction& psi) const;

  /// Copies that forget optional structure; used to force the slower
  /// search paths.
  YoungFunction without_derivative() const;
  YoungFunction without_derivative_inverse() const;

 private:
  std::string name_;
  std::shared_ptr<const ScalarFn> value_;
  std::shared_ptr<const ScalarFn> derivative_;
  std::shared_ptr<const ScalarFn> derivative_inverse_;
  std::shared_ptr<const YoungFunction> conjugate_;
};

/// Raised when a function fails a Young-function invariant on a grid.
class young_invariant_error : public std::invalid_argument {
 public:
  young_invariant_error(const std::string& what, double x1, double x2)
      : std::invalid_argument(what), x1_(x1), x2_(x2) {}
  double x1() const { return x1_; }
  double x2() const { return x2_; }

 private:
  double x1_;
  double x2_;
};

/// Checks value 0 at 0, strict monotonicity, midpoint convexity and
/// finiteness on consecutive grid points. Throws young_invariant_error with
/// the offending sample pair.
void check_young_invariants(const YoungFunction& f,
                            std::span<const double> grid,
                            Tolerance tol = {});

enum class PairingMode { closed_form, numeric_conjugate };

struct ComplementaryPair {
  YoungFunction phi;
  YoungFunction psi;
  PairingMode mode = PairingMode::closed_form;

  /// (psi, phi): the pair seen from the other side.
  ComplementaryPair swapped() const { return {psi, phi, mode}; }
  std::string name() const { return phi.name(); }
};

struct ConjugateSearch {
  /// Largest abscissa the maximizer search may reach.
  double cap = 1e3;
};

/// sup{xy - phi(x) : x >= 0} at a single y.
double conjugate_at(const YoungFunction& phi, double y,
                    ConjugateSearch search = {});

/// The complementary function as a lazily evaluated YoungFunction. Its
/// derivative is the maximizer and its derivative inverse is phi's
/// generator, when phi has one.
YoungFunction conjugate(const YoungFunction& phi, ConjugateSearch search = {});

struct GeneratorGrid {
  double hi = 10.0;
  int samples = 256;
  double quadrature_tol = 1e-10;
};

/// Raised when a generator is not strictly increasing on the probe grid.
class generator_error : public std::invalid_argument {
 public:
  generator_error(const std::string& what, double x1, double x2)
      : std::invalid_argument(what), x1_(x1), x2_(x2) {}
  double x1() const { return x1_; }
  double x2() const { return x2_; }

 private:
  double x1_;
  double x2_;
};

/// Builds (Phi, Psi) from a strictly increasing generator with value 0 at 0:
/// Phi integrates the generator, Psi integrates its (bisection) inverse.
ComplementaryPair build_from_generator(ScalarFn generator, std::string name,
                                       GeneratorGrid grid = {});

/// Phi(x) + Psi(y) - xy. Nonnegative for a genuine complementary pair.
double young_gap(const ComplementaryPair& pair, double x, double y);

struct Delta2Estimate {
  bool bounded = false;
  /// sup of Phi(2x)/Phi(x) over the grid; meaningful when bounded.
  double constant = 0.0;
  std::vector<double> xs;
  std::vector<double> ratios;
};

/// Estimates the doubling constant of phi on a log grid spanning at least
/// six decades. The verdict is heuristic: the ratio sequence is declared
/// unbounded when it is non-finite or still accelerating over its last
/// decade.
Delta2Estimate delta2_estimate(const YoungFunction& phi,
                               std::span<const double> grid);

struct EquivalenceResult {
  bool found = false;
  double a = 0.0;
  double b = 0.0;
  /// Grid point where the best candidate breaks the candidate range.
  std::optional<double> violating_x;
  std::vector<double> xs;
  /// phi1^{-1}(phi2(x)) / x at each grid point.
  std::vector<double> ratios;
};

struct CandidateRange {
  double min_a = 1e-3;
  double max_b = 1e3;
};

/// Finds 0 < a <= b with phi1(a x) <= phi2(x) <= phi1(b x) on every grid
/// point. The tightest pair is a = min r(x), b = max r(x) with
/// r(x) = phi1^{-1}(phi2(x)) / x; it is reported when it lies inside the
/// candidate range.
EquivalenceResult strong_equivalence(const YoungFunction& phi1,
                                     const YoungFunction& phi2,
                                     std::span<const double> grid,
                                     CandidateRange range = {});

/// Catalog: `pnorm:<p>` (p > 1), `xlog`, `cosh`, `expm`.
YoungFunction catalog_function(std::string_view spec);
ComplementaryPair catalog_pair(std::string_view spec);
std::vector<std::string> catalog_pair_names();

/// Cap used for numeric conjugates of catalog members. x ln(1+x) has a
/// conjugate of exponential growth, so its maximizer leaves [0, 1e3] at
/// y ~ 8.
inline constexpr double kCatalogConjugateCap = 1e30;

}  // namespace orlicz
