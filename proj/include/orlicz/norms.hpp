#pragma once

#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/group.hpp"
#include "orlicz/orlicz_vector.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

class norm_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum over the support of phi(|f(s)|); +inf when a term overflows.
double modular(const YoungFunction& phi, const OrliczVector& f);

/// inf{k > 0 : modular(phi, f / k) <= 1}. Doubling bracket, then bisection
/// until |modular - 1| <= 1e-12 or 200 steps.
double luxemburg_norm(const YoungFunction& phi, const OrliczVector& f);

struct OrliczNormResult {
  double value = 0.0;
  /// Lagrange route: v_s = (psi')^{-1}(|f_s| / lambda), lambda chosen so the
  /// constraint sum psi(v_s) = 1 binds.
  double stationarity = 0.0;
  /// One-dimensional route: min over k > 0 of (1 + modular(phi, k f)) / k.
  double amemiya = 0.0;
  /// Relative gap between the two routes.
  double agreement = 0.0;
  /// False when psi has no derivative and only the second route ran.
  bool cross_checked = false;
};

/// sup{sum |f v| : modular(psi, v) <= 1}, computed two independent ways.
/// Throws norm_error if the routes disagree beyond 1e-5 relative.
OrliczNormResult orlicz_norm_detailed(const ComplementaryPair& pair,
                                      const OrliczVector& f);
double orlicz_norm(const ComplementaryPair& pair, const OrliczVector& f);

struct NormReport {
  double luxemburg = 0.0;
  double orlicz = 0.0;
  double method_agreement = 0.0;
};

NormReport norm_report(const ComplementaryPair& pair, const OrliczVector& f);

/// The maximizer v of the Orlicz-norm problem, phased so that
/// sum f(s) v(s) = ||f||_phi; sum psi(|v|) = 1. Needs psi's derivative.
OrliczVector norming_vector(const ComplementaryPair& pair,
                           const OrliczVector& f);

/// max of sum |f v| over `samples` random v on supp f scaled to
/// modular(psi, v) <= 1. A lower bound for the Orlicz norm.
double dual_sampling_bound(const ComplementaryPair& pair, const OrliczVector& f,
                           int samples, std::mt19937_64& rng);

/// min{N_phi(f) ||g||_psi, ||f||_phi N_psi(g)} - sum |f g|.
double holder_gap(const ComplementaryPair& pair, const OrliczVector& f,
                  const OrliczVector& g);

enum class NormKind { orlicz, luxemburg };

/// Norm of the pointwise product f w.
double weighted_norm(const ComplementaryPair& pair, const Weight& w,
                     const OrliczVector& f, NormKind kind = NormKind::orlicz);

struct MembershipRow {
  double alpha = 0.0;
  std::vector<int> radii;
  /// sum over B_R of psi(alpha h(s)) for each radius.
  std::vector<double> partial_sums;
  /// Decay exponent mu of the per-radius shell mass, ~ R^-mu.
  double shell_exponent = 0.0;
  /// Growth exponent of the partial sums over the last radius step.
  double growth_exponent = 0.0;
  /// Integral estimate of the mass beyond the last radius (inf if mu <= 1).
  double tail_estimate = 0.0;
  /// "converging", "diverging" or "inconclusive". Heuristic.
  std::string verdict;
};

struct MembershipOptions {
  /// Relative size of the estimated tail below which sums count as converged.
  double tail_tol = 1e-2;
  /// Margin around the critical shell exponent 1.
  double exponent_margin = 0.1;
};

/// Convergence table for sum psi(alpha h(s)) over growing balls: the
/// numerical face of "alpha h lies in the modular space for every alpha".
std::vector<MembershipRow> membership_diagnostic(
    const YoungFunction& psi, const Group& group,
    const std::function<double(const Element&)>& h,
    std::span<const double> alphas, std::span<const int> radii,
    MembershipOptions options = {});

}  // namespace orlicz
