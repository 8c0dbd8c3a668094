#include "orlicz/weight.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orlicz {

Weight Weight::trivial(GroupPtr group) {
  return Weight(std::move(group), WeightKind::trivial, 0.0, 0.0);
}

Weight Weight::polynomial(GroupPtr group, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("polynomial weight needs beta > 0");
  return Weight(std::move(group), WeightKind::polynomial, beta, 0.0);
}

Weight Weight::subexp_alpha(GroupPtr group, double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("subexponential weight needs 0 < alpha < 1");
  }
  if (!(c > 0.0)) throw std::invalid_argument("subexponential weight needs C > 0");
  return Weight(std::move(group), WeightKind::subexp_alpha, alpha, c);
}

Weight Weight::subexp_log(GroupPtr group, double gamma, double c) {
  if (!(gamma > 0.0)) throw std::invalid_argument("log weight needs gamma > 0");
  if (!(c > 0.0)) throw std::invalid_argument("log weight needs C > 0");
  return Weight(std::move(group), WeightKind::subexp_log, gamma, c);
}

Weight Weight::product(const Weight& a, const Weight& b) {
  if (a.group_ != b.group_) {
    throw std::invalid_argument("weights live on different groups");
  }
  Weight w(a.group_, WeightKind::product, 0.0, 0.0);
  w.factors_ = {a, b};
  return w;
}

double Weight::at_length(int tau) const {
  const double t = tau;
  switch (kind_) {
    case WeightKind::trivial:
      return 1.0;
    case WeightKind::polynomial:
      return std::pow(1.0 + t, exponent_);
    case WeightKind::subexp_alpha:
      return std::exp(scale_ * std::pow(t, exponent_));
    case WeightKind::subexp_log:
      // The closed form is 0/0-type at tau = 0; the identity gets 1.
      if (tau == 0) return 1.0;
      return std::exp(scale_ * t / std::pow(std::log1p(t), exponent_));
    case WeightKind::product:
      break;
  }
  throw std::logic_error("product weight has no length form");
}

double Weight::operator()(const Element& g) const {
  if (kind_ == WeightKind::product) return factors_[0](g) * factors_[1](g);
  if (kind_ == WeightKind::trivial) return 1.0;
  return at_length(group_->word_length(g));
}

std::string Weight::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case WeightKind::trivial:
      out << "trivial";
      break;
    case WeightKind::polynomial:
      out << "poly:" << exponent_;
      break;
    case WeightKind::subexp_alpha:
      out << "subexp:" << exponent_ << ':' << scale_;
      break;
    case WeightKind::subexp_log:
      out << "sublog:" << exponent_ << ':' << scale_;
      break;
    case WeightKind::product:
      out << factors_[0].describe() << '*' << factors_[1].describe();
      break;
  }
  return out.str();
}

WeightAxiomsReport weight_axioms_report(const Weight& w, int radius) {
  const Group& g = *w.group();
  const auto ball = g.ball(radius);
  WeightAxiomsReport out;
  out.identity_ok = w(g.identity()) == 1.0;
  std::vector<double> values;
  values.reserve(ball.size());
  for (const Element& s : ball) {
    values.push_back(w(s));
    out.inverse_sup = std::max(out.inverse_sup, 1.0 / values.back());
  }
  out.inverse_bounded = out.inverse_sup <= 1.0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      const double ratio =
          w(g.multiply(ball[i], ball[j])) / (values[i] * values[j]);
      out.submult_sup = std::max(out.submult_sup, ratio);
    }
  }
  return out;
}

}  // namespace orlicz
