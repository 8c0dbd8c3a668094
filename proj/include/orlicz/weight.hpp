#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orlicz/group.hpp"

namespace orlicz {

enum class WeightKind { trivial, polynomial, subexp_alpha, subexp_log, product };

/// A positive function on the group with value 1 at the identity, built from
/// the word length tau:
///   polynomial   (1 + tau)^beta
///   subexp_alpha exp(C tau^alpha),                0 < alpha < 1
///   subexp_log   exp(C tau / ln(1 + tau)^gamma),  set to 1 at tau = 0
///   product      pointwise product of two weights
class Weight {
 public:
  static Weight trivial(GroupPtr group);
  static Weight polynomial(GroupPtr group, double beta);
  static Weight subexp_alpha(GroupPtr group, double alpha, double c);
  static Weight subexp_log(GroupPtr group, double gamma, double c);
  static Weight product(const Weight& a, const Weight& b);

  double operator()(const Element& g) const;
  /// Value as a function of the word length; not defined for products.
  double at_length(int tau) const;

  WeightKind kind() const { return kind_; }
  const GroupPtr& group() const { return group_; }
  /// beta, alpha or gamma depending on kind.
  double exponent() const { return exponent_; }
  double scale() const { return scale_; }
  const std::vector<Weight>& factors() const { return factors_; }
  std::string describe() const;

 private:
  Weight(GroupPtr group, WeightKind kind, double exponent, double scale)
      : group_(std::move(group)), kind_(kind), exponent_(exponent),
        scale_(scale) {}

  GroupPtr group_;
  WeightKind kind_;
  double exponent_ = 0.0;
  double scale_ = 0.0;
  std::vector<Weight> factors_;
};

struct WeightAxiomsReport {
  bool identity_ok = false;
  bool inverse_bounded = false;
  /// max of 1/w over the ball.
  double inverse_sup = 0.0;
  /// max of w(st) / (w(s) w(t)) over ball pairs.
  double submult_sup = 0.0;
};

WeightAxiomsReport weight_axioms_report(const Weight& w, int radius);

}  // namespace orlicz
