#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/group.hpp"
#include "orlicz/weight.hpp"

namespace orlicz {

using Complex = std::complex<double>;
using CocycleFn = std::function<Complex(const Element&, const Element&)>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class CocycleKind { trivial, coboundary, bilinear_phase, product, custom };

/// Raised when a cocycle evaluates to zero or a construction is invalid.
class cocycle_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A normalized 2-cocycle G x G -> C \ {0}.
///
/// Evaluators are pure. When the modulus is known to be the coboundary
/// w(st)/(w(s)w(t)) of a weight, that weight travels with the cocycle so
/// witnesses for |Omega(s,t)| <= u(s) + v(t) can be derived from it.
class Cocycle {
 public:
  static Cocycle trivial(GroupPtr group);
  static Cocycle coboundary(const Weight& w);
  /// exp(i theta x^T B y) on Z^d. Also accepted on Z/nZ when exp(i theta B n)
  /// is 1, so that the phase is well defined on residues.
  static Cocycle bilinear_phase(GroupPtr group, IntMatrix b, double theta);
  static Cocycle product(const Cocycle& a, const Cocycle& b);
  static Cocycle custom(GroupPtr group, CocycleFn fn, std::string description,
                        std::optional<Weight> modulus_weight = std::nullopt);
  /// `base` with its value at the single pair (s, t) multiplied by `factor`.
  /// Generally breaks the cocycle identity; used as a negative control.
  static Cocycle perturbed(const Cocycle& base, const Element& s,
                           const Element& t, Complex factor);

  Complex operator()(const Element& s, const Element& t) const;

  CocycleKind kind() const { return kind_; }
  const GroupPtr& group() const { return group_; }
  const std::string& describe() const { return description_; }
  const std::optional<Weight>& modulus_weight() const { return modulus_weight_; }

 private:
  Cocycle(GroupPtr group, CocycleKind kind, CocycleFn fn,
          std::string description, std::optional<Weight> modulus_weight)
      : group_(std::move(group)), kind_(kind), fn_(std::move(fn)),
        description_(std::move(description)),
        modulus_weight_(std::move(modulus_weight)) {}

  GroupPtr group_;
  CocycleKind kind_;
  CocycleFn fn_;
  std::string description_;
  std::optional<Weight> modulus_weight_;
};

/// Standard cocycles used by the verification suites on `group`: trivial,
/// coboundaries of the polynomial and subexponential weights, a bilinear
/// phase where the group admits one, and a weight-times-phase product.
std::vector<Cocycle> cocycle_catalog(const GroupPtr& group);

/// max over r, s, t in B_radius of |Omega(r,s)Omega(rs,t) - Omega(s,t)Omega(r,st)|.
double cocycle_identity_residual(const Cocycle& om, int radius);

/// max over g in B_radius of |Omega(g,e) - 1| + |Omega(e,g) - 1|.
double normalization_residual(const Cocycle& om, int radius);

/// max |Omega(s,t)| over ball pairs.
double sup_norm_estimate(const Cocycle& om, int radius);

struct PolarFactors {
  Cocycle modulus;
  Cocycle phase;
};

/// Omega = |Omega| Omega_T. Evaluating either factor at a zero of Omega
/// throws cocycle_error.
PolarFactors polar_decompose(const Cocycle& om);

using ElementFn = std::function<double(const Element&)>;

struct DecompositionWitness {
  ElementFn u;
  ElementFn v;
  int verified_radius = 0;
  /// max over B x B of |Omega(s,t)| - u(s) - v(t); <= 0 on success.
  double max_violation = 0.0;
  Element worst_s;
  Element worst_t;
  std::string description;
};

class witness_error : public std::runtime_error {
 public:
  witness_error(const std::string& what, double max_violation, Element s,
                Element t)
      : std::runtime_error(what), max_violation_(max_violation),
        s_(std::move(s)), t_(std::move(t)) {}
  double max_violation() const { return max_violation_; }
  const Element& worst_s() const { return s_; }
  const Element& worst_t() const { return t_; }

 private:
  double max_violation_;
  Element s_;
  Element t_;
};

/// Checks |Omega(s,t)| <= u(s) + v(t) on every pair of B_radius and returns
/// the filled witness, whether or not it passed.
DecompositionWitness evaluate_witness(const Cocycle& om, ElementFn u,
                                      ElementFn v, int radius,
                                      std::string description);

/// Witness derived from the weight carried by the cocycle:
///   trivial      u = v = 1
///   polynomial   u = v = 2^beta / w_beta
///   subexp_alpha u = v = 1 / sigma_{alpha, C (2 - 2^alpha)}
///   subexp_log   u = v = kappa / rho_{gamma, C'}, first passing pair from
///                kappa in {1,2,4,8}, C' in C * {0.9, ..., 0.1}
/// Throws witness_error with the worst pair when nothing passes.
DecompositionWitness decomposition_witness(const Cocycle& om, int radius);

/// Verifies caller-supplied candidates; throws witness_error on failure.
DecompositionWitness decomposition_witness(const Cocycle& om, ElementFn u,
                                           ElementFn v, int radius);

}  // namespace orlicz
