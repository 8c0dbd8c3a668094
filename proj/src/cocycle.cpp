#include "orlicz/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace orlicz {

namespace {

std::optional<Weight> combine_moduli(const std::optional<Weight>& a,
                                     const std::optional<Weight>& b) {
  if (!a || !b) return std::nullopt;
  if (a->kind() == WeightKind::trivial) return b;
  if (b->kind() == WeightKind::trivial) return a;
  return Weight::product(*a, *b);
}

}  // namespace

Cocycle Cocycle::trivial(GroupPtr group) {
  auto w = Weight::trivial(group);
  return Cocycle(std::move(group), CocycleKind::trivial,
                 [](const Element&, const Element&) { return Complex(1.0); },
                 "trivial", std::move(w));
}

Cocycle Cocycle::coboundary(const Weight& w) {
  const GroupPtr& g = w.group();
  return Cocycle(
      g, CocycleKind::coboundary,
      [w, g](const Element& s, const Element& t) {
        return Complex(w(g->multiply(s, t)) / (w(s) * w(t)));
      },
      "coboundary[" + w.describe() + "]", w);
}

Cocycle Cocycle::bilinear_phase(GroupPtr group, IntMatrix b, double theta) {
  const int d = group->rank();
  if (!group->is_abelian()) {
    throw cocycle_error("bilinear phase needs an abelian group, got " +
                        group->name());
  }
  if (static_cast<int>(b.size()) != d) {
    throw cocycle_error("bilinear phase matrix must be " + std::to_string(d) +
                        "x" + std::to_string(d));
  }
  for (const auto& row : b) {
    if (static_cast<int>(row.size()) != d) {
      throw cocycle_error("bilinear phase matrix must be square");
    }
  }
  if (group->kind() == GroupKind::cyclic) {
    const double turn = theta * static_cast<double>(b[0][0]) *
                        static_cast<double>(group->parameter());
    if (std::abs(std::polar(1.0, turn) - Complex(1.0)) > 1e-12) {
      throw cocycle_error(
          "bilinear phase on " + group->name() +
          " needs theta * B * n to be a multiple of 2 pi");
    }
  }
  std::ostringstream desc;
  desc.precision(17);
  desc << "phase[" << theta << ";";
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) desc << (j ? "," : "") << b[i][j];
    desc << (i + 1 < d ? ";" : "]");
  }
  return Cocycle(
      group, CocycleKind::bilinear_phase,
      [b = std::move(b), theta, d](const Element& x, const Element& y) {
        // x^T B y
        std::int64_t form = 0;
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) form += x[i] * b[i][j] * y[j];
        }
        return std::polar(1.0, theta * static_cast<double>(form));
      },
      desc.str(), Weight::trivial(group));
}

Cocycle Cocycle::product(const Cocycle& a, const Cocycle& b) {
  if (a.group_ != b.group_) {
    throw cocycle_error("cocycles live on different groups");
  }
  return Cocycle(
      a.group_, CocycleKind::product,
      [fa = a.fn_, fb = b.fn_](const Element& s, const Element& t) {
        return fa(s, t) * fb(s, t);
      },
      a.description_ + "*" + b.description_,
      combine_moduli(a.modulus_weight_, b.modulus_weight_));
}

Cocycle Cocycle::custom(GroupPtr group, CocycleFn fn, std::string description,
                        std::optional<Weight> modulus_weight) {
  return Cocycle(std::move(group), CocycleKind::custom, std::move(fn),
                 std::move(description), std::move(modulus_weight));
}

Cocycle Cocycle::perturbed(const Cocycle& base, const Element& s,
                           const Element& t, Complex factor) {
  std::ostringstream desc;
  desc << base.description_ << " perturbed at " << s.str() << t.str();
  return Cocycle(
      base.group_, CocycleKind::custom,
      [fn = base.fn_, s, t, factor](const Element& x, const Element& y) {
        const Complex v = fn(x, y);
        return (x == s && y == t) ? v * factor : v;
      },
      desc.str(), std::nullopt);
}

Complex Cocycle::operator()(const Element& s, const Element& t) const {
  return fn_(s, t);
}

std::vector<Cocycle> cocycle_catalog(const GroupPtr& group) {
  std::vector<Cocycle> out;
  out.push_back(Cocycle::trivial(group));
  const Weight w1 = Weight::polynomial(group, 1.0);
  out.push_back(Cocycle::coboundary(w1));
  out.push_back(Cocycle::coboundary(Weight::polynomial(group, 2.0)));
  const Weight sigma = Weight::subexp_alpha(group, 0.5, 1.0);
  out.push_back(Cocycle::coboundary(sigma));
  out.push_back(Cocycle::coboundary(Weight::subexp_log(group, 1.0, 1.0)));
  std::optional<Cocycle> phase;
  switch (group->kind()) {
    case GroupKind::free_abelian: {
      const int d = group->rank();
      IntMatrix b(d, std::vector<std::int64_t>(d, 0));
      if (d >= 2) {
        b[1][0] = 1;
      } else {
        b[0][0] = 1;
      }
      phase = Cocycle::bilinear_phase(group, b, 0.7);
      break;
    }
    case GroupKind::cyclic:
      phase = Cocycle::bilinear_phase(
          group, {{1}},
          2.0 * std::numbers::pi / static_cast<double>(group->parameter()));
      break;
    case GroupKind::heisenberg:
      break;
  }
  if (phase) {
    out.push_back(*phase);
    out.push_back(Cocycle::product(out[1], *phase));
  } else {
    out.push_back(Cocycle::product(out[1], out[3]));
  }
  return out;
}

double cocycle_identity_residual(const Cocycle& om, int radius) {
  const Group& g = *om.group();
  const auto ball = g.ball(radius);
  double worst = 0.0;
  for (const Element& r : ball) {
    for (const Element& s : ball) {
      const Element rs = g.multiply(r, s);
      const Complex ors = om(r, s);
      for (const Element& t : ball) {
        const Complex lhs = ors * om(rs, t);
        const Complex rhs = om(s, t) * om(r, g.multiply(s, t));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

double normalization_residual(const Cocycle& om, int radius) {
  const Group& g = *om.group();
  const Element e = g.identity();
  double worst = 0.0;
  for (const Element& s : g.ball(radius)) {
    worst = std::max(worst, std::abs(om(s, e) - 1.0) + std::abs(om(e, s) - 1.0));
  }
  return worst;
}

double sup_norm_estimate(const Cocycle& om, int radius) {
  const auto ball = om.group()->ball(radius);
  double sup = 0.0;
  for (const Element& s : ball) {
    for (const Element& t : ball) sup = std::max(sup, std::abs(om(s, t)));
  }
  return sup;
}

PolarFactors polar_decompose(const Cocycle& om) {
  const auto nonzero = [om](const Element& s, const Element& t) {
    const Complex v = om(s, t);
    if (v == Complex(0.0)) {
      throw cocycle_error(om.describe() + " vanishes at " + s.str() + t.str());
    }
    return v;
  };
  Cocycle modulus = Cocycle::custom(
      om.group(),
      [nonzero](const Element& s, const Element& t) {
        return Complex(std::abs(nonzero(s, t)));
      },
      "|" + om.describe() + "|", om.modulus_weight());
  Cocycle phase = Cocycle::custom(
      om.group(),
      [nonzero](const Element& s, const Element& t) {
        const Complex v = nonzero(s, t);
        return v / std::abs(v);
      },
      "arg[" + om.describe() + "]", Weight::trivial(om.group()));
  return {std::move(modulus), std::move(phase)};
}

DecompositionWitness evaluate_witness(const Cocycle& om, ElementFn u,
                                      ElementFn v, int radius,
                                      std::string description) {
  const auto ball = om.group()->ball(radius);
  std::vector<double> us;
  std::vector<double> vs;
  us.reserve(ball.size());
  vs.reserve(ball.size());
  for (const Element& s : ball) {
    us.push_back(u(s));
    vs.push_back(v(s));
  }
  DecompositionWitness out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      const double gap = std::abs(om(ball[i], ball[j])) - us[i] - vs[j];
      if (gap > out.max_violation) {
        out.max_violation = gap;
        out.worst_s = ball[i];
        out.worst_t = ball[j];
      }
    }
  }
  out.u = std::move(u);
  out.v = std::move(v);
  out.verified_radius = radius;
  out.description = std::move(description);
  return out;
}

namespace {

[[noreturn]] void fail_witness(const DecompositionWitness& w,
                               const std::string& context) {
  std::ostringstream msg;
  msg.precision(17);
  msg << context << ": |Omega(s,t)| <= u(s)+v(t) fails by " << w.max_violation
      << " at s=" << w.worst_s.str() << " t=" << w.worst_t.str()
      << " on radius " << w.verified_radius;
  throw witness_error(msg.str(), w.max_violation, w.worst_s, w.worst_t);
}

ElementFn inverse_weight(Weight w, double kappa) {
  return [w = std::move(w), kappa](const Element& s) { return kappa / w(s); };
}

}  // namespace

DecompositionWitness decomposition_witness(const Cocycle& om, int radius) {
  if (!om.modulus_weight()) {
    throw witness_error(om.describe() +
                            ": modulus is not a known weight coboundary; "
                            "supply candidate u, v",
                        std::numeric_limits<double>::infinity(), {}, {});
  }
  const Weight& w = *om.modulus_weight();
  const GroupPtr& g = w.group();
  std::ostringstream desc;
  desc.precision(17);
  switch (w.kind()) {
    case WeightKind::trivial: {
      auto one = [](const Element&) { return 1.0; };
      auto out = evaluate_witness(om, one, one, radius, "u = v = 1");
      if (out.max_violation > 0.0) fail_witness(out, om.describe());
      return out;
    }
    case WeightKind::polynomial: {
      const double beta = w.exponent();
      const double kappa = std::pow(2.0, beta);
      desc << "u = v = " << kappa << " / " << w.describe();
      auto out = evaluate_witness(om, inverse_weight(w, kappa),
                                  inverse_weight(w, kappa), radius, desc.str());
      if (out.max_violation > 0.0) fail_witness(out, om.describe());
      return out;
    }
    case WeightKind::subexp_alpha: {
      const double alpha = w.exponent();
      const double c = w.scale() * (2.0 - std::pow(2.0, alpha));
      const Weight decay = Weight::subexp_alpha(g, alpha, c);
      desc << "u = v = 1 / " << decay.describe();
      auto out = evaluate_witness(om, inverse_weight(decay, 1.0),
                                  inverse_weight(decay, 1.0), radius,
                                  desc.str());
      if (out.max_violation > 0.0) fail_witness(out, om.describe());
      return out;
    }
    case WeightKind::subexp_log: {
      std::optional<DecompositionWitness> best;
      for (double kappa : {1.0, 2.0, 4.0, 8.0}) {
        for (int k = 9; k >= 1; --k) {
          const Weight decay =
              Weight::subexp_log(g, w.exponent(), w.scale() * k / 10.0);
          std::ostringstream d;
          d.precision(17);
          d << "u = v = " << kappa << " / " << decay.describe();
          auto out = evaluate_witness(om, inverse_weight(decay, kappa),
                                      inverse_weight(decay, kappa), radius,
                                      d.str());
          if (out.max_violation <= 0.0) return out;
          if (!best || out.max_violation < best->max_violation) {
            best = std::move(out);
          }
        }
      }
      fail_witness(*best, om.describe() + " (grid search exhausted)");
    }
    case WeightKind::product:
      break;
  }
  throw witness_error(om.describe() +
                          ": no witness construction for product weights; "
                          "supply candidate u, v",
                      std::numeric_limits<double>::infinity(), {}, {});
}

DecompositionWitness decomposition_witness(const Cocycle& om, ElementFn u,
                                           ElementFn v, int radius) {
  auto out = evaluate_witness(om, std::move(u), std::move(v), radius,
                              "caller-supplied u, v");
  if (out.max_violation > 0.0) fail_witness(out, om.describe());
  return out;
}

}  // namespace orlicz
