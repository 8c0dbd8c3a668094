#pragma once

#include <cstdint>
#include <vector>

#include "orlicz/cocycle.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/orlicz_vector.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// (f * g)(t) = sum_s f(s) g(s^-1 t) Omega(s, s^-1 t), as an exact finite sum
/// over supp f x supp g.
OrliczVector twisted_convolve(const Cocycle& om, const OrliczVector& f,
                              const OrliczVector& g);

/// Untwisted convolution on `group`.
OrliczVector convolve(const Group& group, const OrliczVector& f,
                      const OrliczVector& g);

/// ||Omega||_inf ||f||_1 ||g||_1 - ||f * g||_1, with the sup of |Omega| taken
/// over supp f x supp g.
double l1_bound_gap(const Cocycle& om, const OrliczVector& f,
                    const OrliczVector& g);
/// Same with a caller-supplied bound for ||Omega||_inf.
double l1_bound_gap(const Cocycle& om, const OrliczVector& f,
                    const OrliczVector& g, double omega_sup);

/// l1 distance between (f * g) * h and f * (g * h).
double associativity_residual(const Cocycle& om, const OrliczVector& f,
                              const OrliczVector& g, const OrliczVector& h);

/// (g .' h)(s) = sum_t g(t) h(st) Omega(s, t).
OrliczVector module_action_left(const Cocycle& om, const OrliczVector& g,
                                const OrliczVector& h);
/// (h .' g)(s) = sum_t g(t) h(ts) Omega(t, s).
OrliczVector module_action_right(const Cocycle& om, const OrliczVector& h,
                                 const OrliczVector& g);

/// Bilinear pairing sum_s f(s) h(s); no complex conjugation.
Complex pairing(const OrliczVector& f, const OrliczVector& h);

/// |<f*g, h> - <f, g.'h>| + |<f*g, h> - <g, h.'f>|.
double duality_residual(const Cocycle& om, const OrliczVector& f,
                        const OrliczVector& g, const OrliczVector& h);

using Kernel = CocycleFn;

/// xi(g,h)(s) = sum_t g(t) h(st) L(s,t).
OrliczVector xi(const Group& group, const Kernel& l, const OrliczVector& g,
                const OrliczVector& h);
/// eta(f,h)(s) = sum_t f(t) h(ts) L(t,s).
OrliczVector eta(const Group& group, const Kernel& l, const OrliczVector& f,
                 const OrliczVector& h);
/// zeta(f,g)(t) = sum_s f(s) g(s^-1 t) L(s, s^-1 t).
OrliczVector zeta(const Group& group, const Kernel& l, const OrliczVector& f,
                  const OrliczVector& g);

/// Omega(s,t) = L(s,t) (u(s) + v(t)) with |L| <= 1.
struct SplitFactors {
  Kernel l;
  ElementFn u;
  ElementFn v;
};

/// L = Omega / (u + v) from a decomposition witness.
SplitFactors split_factors(const Cocycle& om, ElementFn u, ElementFn v);

class split_precondition_error : public std::invalid_argument {
 public:
  split_precondition_error(const std::string& what, Element s, Element t)
      : std::invalid_argument(what), s_(std::move(s)), t_(std::move(t)) {}
  const Element& worst_s() const { return s_; }
  const Element& worst_t() const { return t_; }

 private:
  Element s_;
  Element t_;
};

/// |<f*g, h> - <f u, xi(g,h)> - <g v, eta(f,h)>|. The factorization and
/// |L| <= 1 are checked on supp f x supp g first; a violation throws
/// split_precondition_error carrying the worst pair.
double splitting_residual(const Cocycle& om, const SplitFactors& factors,
                          const OrliczVector& f, const OrliczVector& g,
                          const OrliczVector& h);

/// f / w, and its inverse f w.
OrliczVector lambda_transform(const Weight& w, const OrliczVector& f);
OrliczVector inverse_lambda_transform(const Weight& w, const OrliczVector& f);

/// sum of amplitudes.
Complex augmentation(const OrliczVector& f);

struct SampleSpec {
  std::vector<int> radii{4};
  int samples = 100;
  std::uint64_t seed = 42;
};

struct ProbeRadius {
  int radius = 0;
  /// Empirical lower bound for the algebra constant on this ball.
  double c_hat = 0.0;
  std::size_t pairs = 0;
  std::vector<double> ratios;
};

/// ||f*g||_phi / (||f||_phi ||g||_phi).
double algebra_ratio(const ComplementaryPair& pair, const Cocycle& om,
                     const OrliczVector& f, const OrliczVector& g);

/// max ||f*g||_phi / (||f||_phi ||g||_phi) over random pairs on each ball.
/// On balls with at most 50 elements every delta pair is included too.
std::vector<ProbeRadius> submultiplicativity_probe(
    const ComplementaryPair& pair, const Cocycle& om, const SampleSpec& spec);

struct UnitReport {
  double left_residual = 0.0;
  double right_residual = 0.0;
  std::size_t samples = 0;
};

/// max |delta_e * f - f| and |f * delta_e - f| over random f on B_radius.
UnitReport unit_check(const Cocycle& om, int radius, int samples,
                      std::uint64_t seed);

}  // namespace orlicz
