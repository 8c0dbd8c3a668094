#include "orlicz/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

namespace orlicz {

namespace {

// Neumaier-compensated complex sum.
struct Compensated {
  double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;

  static void add(double& sum, double& c, double x) {
    const double t = sum + x;
    c += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  Compensated& operator+=(Complex z) {
    add(re, re_c, z.real());
    add(im, im_c, z.imag());
    return *this;
  }
  Complex value() const { return {re + re_c, im + im_c}; }
};

using Accumulator = std::unordered_map<Element, Compensated, ElementHash>;

OrliczVector collect(const Accumulator& acc) {
  std::vector<OrliczVector::Entry> entries;
  entries.reserve(acc.size());
  for (const auto& [s, sum] : acc) entries.emplace_back(s, sum.value());
  return OrliczVector::from_entries(std::move(entries));
}

// sum_s f(s) g(r) K(s, r) delta_{sr}
OrliczVector kernel_convolve(const Group& group, const Kernel& k,
                             const OrliczVector& f, const OrliczVector& g) {
  Accumulator acc;
  acc.reserve(f.size() * g.size());
  for (const auto& [s, fs] : f) {
    for (const auto& [r, gr] : g) {
      acc[group.multiply(s, r)] += fs * gr * k(s, r);
    }
  }
  return collect(acc);
}

// s ranges over x t^-1 with x in supp h, t in supp g:
// out(s) = sum_t g(t) h(st) K(s, t)
OrliczVector kernel_left(const Group& group, const Kernel& k,
                         const OrliczVector& g, const OrliczVector& h) {
  Accumulator acc;
  for (const auto& [t, gt] : g) {
    const Element t_inv = group.invert(t);
    for (const auto& [x, hx] : h) {
      const Element s = group.multiply(x, t_inv);
      acc[s] += gt * hx * k(s, t);
    }
  }
  return collect(acc);
}

// out(s) = sum_t g(t) h(ts) K(t, s), s = t^-1 x
OrliczVector kernel_right(const Group& group, const Kernel& k,
                          const OrliczVector& h, const OrliczVector& g) {
  Accumulator acc;
  for (const auto& [t, gt] : g) {
    const Element t_inv = group.invert(t);
    for (const auto& [x, hx] : h) {
      const Element s = group.multiply(t_inv, x);
      acc[s] += gt * hx * k(t, s);
    }
  }
  return collect(acc);
}

void check_operands(const Group& group,
                    std::initializer_list<const OrliczVector*> vs) {
  for (const OrliczVector* v : vs) v->check_group(group);
}

Kernel kernel_of(const Cocycle& om) {
  return [om](const Element& s, const Element& t) { return om(s, t); };
}

}  // namespace

OrliczVector twisted_convolve(const Cocycle& om, const OrliczVector& f,
                              const OrliczVector& g) {
  const Group& group = *om.group();
  check_operands(group, {&f, &g});
  return kernel_convolve(group, kernel_of(om), f, g);
}

OrliczVector convolve(const Group& group, const OrliczVector& f,
                      const OrliczVector& g) {
  check_operands(group, {&f, &g});
  return kernel_convolve(
      group, [](const Element&, const Element&) { return Complex(1.0); }, f,
      g);
}

double l1_bound_gap(const Cocycle& om, const OrliczVector& f,
                    const OrliczVector& g, double omega_sup) {
  return omega_sup * f.l1_norm() * g.l1_norm() -
         twisted_convolve(om, f, g).l1_norm();
}

double l1_bound_gap(const Cocycle& om, const OrliczVector& f,
                    const OrliczVector& g) {
  double sup = 0.0;
  for (const auto& [s, fs] : f) {
    for (const auto& [r, gr] : g) sup = std::max(sup, std::abs(om(s, r)));
  }
  return l1_bound_gap(om, f, g, sup);
}

double associativity_residual(const Cocycle& om, const OrliczVector& f,
                              const OrliczVector& g, const OrliczVector& h) {
  const OrliczVector left = twisted_convolve(om, twisted_convolve(om, f, g), h);
  const OrliczVector right = twisted_convolve(om, f, twisted_convolve(om, g, h));
  return left.l1_distance(right);
}

OrliczVector module_action_left(const Cocycle& om, const OrliczVector& g,
                                const OrliczVector& h) {
  const Group& group = *om.group();
  check_operands(group, {&g, &h});
  return kernel_left(group, kernel_of(om), g, h);
}

OrliczVector module_action_right(const Cocycle& om, const OrliczVector& h,
                                 const OrliczVector& g) {
  const Group& group = *om.group();
  check_operands(group, {&g, &h});
  return kernel_right(group, kernel_of(om), h, g);
}

Complex pairing(const OrliczVector& f, const OrliczVector& h) {
  // Walk the smaller support.
  const OrliczVector& a = f.size() <= h.size() ? f : h;
  const OrliczVector& b = f.size() <= h.size() ? h : f;
  Complex total = 0.0;
  for (const auto& [s, as] : a) total += as * b.at(s);
  return total;
}

double duality_residual(const Cocycle& om, const OrliczVector& f,
                        const OrliczVector& g, const OrliczVector& h) {
  const Complex lhs = pairing(twisted_convolve(om, f, g), h);
  const Complex via_left = pairing(f, module_action_left(om, g, h));
  const Complex via_right = pairing(g, module_action_right(om, h, f));
  return std::abs(lhs - via_left) + std::abs(lhs - via_right);
}

OrliczVector xi(const Group& group, const Kernel& l, const OrliczVector& g,
                const OrliczVector& h) {
  check_operands(group, {&g, &h});
  return kernel_left(group, l, g, h);
}

OrliczVector eta(const Group& group, const Kernel& l, const OrliczVector& f,
                 const OrliczVector& h) {
  check_operands(group, {&f, &h});
  return kernel_right(group, l, h, f);
}

OrliczVector zeta(const Group& group, const Kernel& l, const OrliczVector& f,
                  const OrliczVector& g) {
  check_operands(group, {&f, &g});
  return kernel_convolve(group, l, f, g);
}

SplitFactors split_factors(const Cocycle& om, ElementFn u, ElementFn v) {
  Kernel l = [om, u, v](const Element& s, const Element& t) {
    return om(s, t) / (u(s) + v(t));
  };
  return {std::move(l), std::move(u), std::move(v)};
}

double splitting_residual(const Cocycle& om, const SplitFactors& factors,
                          const OrliczVector& f, const OrliczVector& g,
                          const OrliczVector& h) {
  const Group& group = *om.group();
  check_operands(group, {&f, &g, &h});
  double worst = 0.0;
  Element ws;
  Element wt;
  bool modulus_ok = true;
  for (const auto& [s, fs] : f) {
    const double us = factors.u(s);
    for (const auto& [t, gt] : g) {
      const Complex l = factors.l(s, t);
      const Complex omega = om(s, t);
      const double err = std::abs(omega - l * (us + factors.v(t)));
      const bool bounded = std::abs(l) <= 1.0 + 1e-12;
      if (err > worst || (!bounded && modulus_ok)) {
        worst = std::max(worst, err);
        ws = s;
        wt = t;
      }
      modulus_ok = modulus_ok && bounded;
    }
  }
  if (worst > 1e-10 * std::max(1.0, worst) || !modulus_ok) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "split factors invalid at s=" << ws.str() << " t=" << wt.str()
        << (modulus_ok ? ": factorization error " : ": |L| exceeds 1, error ")
        << worst;
    throw split_precondition_error(msg.str(), ws, wt);
  }
  const Complex lhs = pairing(twisted_convolve(om, f, g), h);
  const OrliczVector fu = f.pointwise(factors.u);
  const OrliczVector gv = g.pointwise(factors.v);
  const Complex rhs = pairing(fu, xi(group, factors.l, g, h)) +
                      pairing(gv, eta(group, factors.l, f, h));
  return std::abs(lhs - rhs);
}

OrliczVector lambda_transform(const Weight& w, const OrliczVector& f) {
  return f.pointwise([&w](const Element& s) { return 1.0 / w(s); });
}

OrliczVector inverse_lambda_transform(const Weight& w, const OrliczVector& f) {
  return f.pointwise([&w](const Element& s) { return w(s); });
}

Complex augmentation(const OrliczVector& f) {
  Complex total = 0.0;
  for (const auto& [s, a] : f) total += a;
  return total;
}

double algebra_ratio(const ComplementaryPair& pair, const Cocycle& om,
                     const OrliczVector& f, const OrliczVector& g) {
  const double denom = orlicz_norm(pair, f) * orlicz_norm(pair, g);
  return orlicz_norm(pair, twisted_convolve(om, f, g)) / denom;
}

std::vector<ProbeRadius> submultiplicativity_probe(
    const ComplementaryPair& pair, const Cocycle& om, const SampleSpec& spec) {
  std::vector<ProbeRadius> out;
  for (int radius : spec.radii) {
    const auto ball = om.group()->ball(radius);
    ProbeRadius row;
    row.radius = radius;
    const auto record = [&](const OrliczVector& f, const OrliczVector& g) {
      const double ratio = algebra_ratio(pair, om, f, g);
      row.ratios.push_back(ratio);
      row.c_hat = std::max(row.c_hat, ratio);
      ++row.pairs;
    };
    if (ball.size() <= 50) {
      for (const Element& s : ball) {
        for (const Element& t : ball) {
          record(OrliczVector::delta(s), OrliczVector::delta(t));
        }
      }
    }
    for (int i = 0; i < spec.samples; ++i) {
      std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(radius) * 1000003ULL + i));
      const OrliczVector f = random_vector(ball, rng);
      const OrliczVector g = random_vector(ball, rng);
      record(f, g);
    }
    out.push_back(std::move(row));
  }
  return out;
}

UnitReport unit_check(const Cocycle& om, int radius, int samples,
                      std::uint64_t seed) {
  const Group& group = *om.group();
  const auto ball = group.ball(radius);
  const OrliczVector unit = OrliczVector::delta(group.identity());
  UnitReport out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const OrliczVector f = random_vector(ball, rng);
    out.left_residual = std::max(
        out.left_residual, twisted_convolve(om, unit, f).max_distance(f));
    out.right_residual = std::max(
        out.right_residual, twisted_convolve(om, f, unit).max_distance(f));
    ++out.samples;
  }
  return out;
}

}  // namespace orlicz
