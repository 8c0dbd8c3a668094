#include "orlicz/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "orlicz/cocycle.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/specs.hpp"
#include "orlicz/twisted.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array kSuites = {
    Suite::young,  Suite::norms,     Suite::cocycle,
    Suite::twisted, Suite::duality,  Suite::splitting,
    Suite::lambda, Suite::growth,    Suite::membership,
};

constexpr std::array<Invariant, 41> kRegistry = {{
    {"young.invariants", Suite::young, "Phi(0)=0, Phi strictly increasing and convex", 0.0},
    {"young.conjugate", Suite::young, "Psi(y) = sup{xy - Phi(x) : x >= 0}", 1e-6},
    {"young.biconjugation", Suite::young, "conjugate(conjugate(Phi)) = Phi", 1e-6},
    {"young.inequality", Suite::young, "xy <= Phi(x) + Psi(y)", 1e-9},
    {"young.equality", Suite::young, "x phi(x) = Phi(x) + Psi(phi(x))", 1e-8},
    {"young.monotone", Suite::young, "Phi1 <= Phi2 implies Psi1 >= Psi2", 1e-9},
    {"young.delta2", Suite::young, "Phi(2x) <= K Phi(x)", 0.0},
    {"young.equivalence", Suite::young, "Phi1(ax) <= Phi2(x) <= Phi1(bx)", 1e-9},
    {"norms.sandwich", Suite::norms, "N(f) <= ||f|| <= 2 N(f)", 1e-9},
    {"norms.agreement", Suite::norms, "stationarity route = one-dimensional route", 1e-5},
    {"norms.dual_sampling", Suite::norms, "sum |f v| <= ||f|| when sum Psi(|v|) <= 1", 1e-9},
    {"norms.holder", Suite::norms, "sum |fg| <= min{N(f)||g||', ||f||N'(g)}", 1e-9},
    {"norms.homogeneity", Suite::norms, "N(cf) = |c| N(f), ||cf|| = |c| ||f||", 1e-9},
    {"norms.triangle", Suite::norms, "N(f+g) <= N(f) + N(g)", 1e-9},
    {"norms.unit_ball", Suite::norms, "N(f) <= 1 iff sum Phi(|f|) <= 1", 0.0},
    {"norms.pnorm_closed_form", Suite::norms, "N(f) = ||f||_p p^(-1/p) for Phi = x^p/p", 1e-8},
    {"cocycle.identity", Suite::cocycle, "Omega(r,s)Omega(rs,t) = Omega(s,t)Omega(r,st)", 1e-10},
    {"cocycle.normalization", Suite::cocycle, "Omega(e,s) = Omega(s,e) = 1", 1e-12},
    {"cocycle.broken", Suite::cocycle, "perturbed cocycle breaks the identity by > 1e-2", -1e-2},
    {"cocycle.polar", Suite::cocycle, "Omega = |Omega| Omega_T", 1e-12},
    {"cocycle.witness", Suite::cocycle, "|Omega(s,t)| <= u(s) + v(t)", 0.0},
    {"cocycle.weight_axioms", Suite::cocycle, "w(e) = 1, w(st) <= w(s)w(t), 1/w bounded", 1e-12},
    {"twisted.associativity", Suite::twisted, "(f*g)*h = f*(g*h)", 1e-10},
    {"twisted.delta_associativity", Suite::twisted, "delta associativity defect = cocycle identity defect", 1e-12},
    {"twisted.unit", Suite::twisted, "delta_e * f = f * delta_e = f", 1e-12},
    {"twisted.l1_bound", Suite::twisted, "||f*g||_1 <= ||Omega||_inf ||f||_1 ||g||_1", 1e-9},
    {"twisted.probe", Suite::twisted, "||f*g|| <= C ||f|| ||g||, empirical lower bound for C", kInf},
    {"duality.pairing", Suite::duality, "<f*g,h> = <f,g.'h> = <g,h.'f>", 1e-10},
    {"duality.action_bound", Suite::duality, "||g.'h||' <= 2 C ||g|| N'(h)", 1e-9},
    {"splitting.identity", Suite::splitting, "<f*g,h> = <fu, xi(g,h)> + <gv, eta(f,h)>", 1e-10},
    {"splitting.xi_bound", Suite::splitting, "|xi(g,h)| <= |h| conv |g(s^-1)|", 1e-12},
    {"splitting.zeta", Suite::splitting, "sum f xi(g,h) = sum h zeta(f,g)", 1e-10},
    {"lambda.isometry", Suite::lambda, "||f/w||_{Phi,w} = ||f||_Phi", 1e-12},
    {"lambda.intertwining", Suite::lambda, "(f*g)/w = (f/w) conv (g/w)", 1e-12},
    {"lambda.augmentation", Suite::lambda, "sum(f conv g) = sum(f) sum(g)", 1e-12},
    {"lambda.inverse", Suite::lambda, "(f/w) w = f", 1e-12},
    {"growth.order", Suite::growth, "c1 n^d <= |B_n| <= c2 n^d", 0.2},
    {"growth.word_length", Suite::growth, "tau(st) <= tau(s) + tau(t), tau(s^-1) = tau(s)", 0.0},
    {"growth.ball_sizes", Suite::growth, "ball sizes match closed forms", 0.0},
    {"membership.verdict", Suite::membership, "1/w_beta in S^Psi iff beta l > d", 0.0},
    {"membership.finite", Suite::membership, "finite groups: every sum converges", 0.0},
}};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ' ') c = '_';
  }
  return s;
}

class Recorder {
 public:
  Recorder(const SuiteConfig& cfg, Suite suite,
           std::vector<VerificationRecord>& out)
      : cfg_(cfg), suite_(suite), out_(out) {}

  // Runs `body` with a per-case generator; it returns the residual.
  void check(std::string_view invariant_id, const std::string& detail,
             const std::function<double(std::mt19937_64&)>& body,
             std::optional<double> default_tol = std::nullopt) {
    const Invariant& inv = find_invariant(invariant_id);
    if (inv.suite != suite_) {
      throw std::logic_error("invariant " + std::string(invariant_id) +
                             " used outside its suite");
    }
    VerificationRecord rec;
    rec.suite = std::string(suite_name(suite_));
    rec.invariant = std::string(inv.id);
    rec.case_id = sanitize(std::string(inv.id) + "/" + detail);
    rec.anchor = std::string(inv.anchor);
    rec.seed = mix_seed(cfg_.seed, fnv1a(rec.case_id));
    const auto over = cfg_.tolerances.find(rec.invariant);
    rec.tolerance = over != cfg_.tolerances.end()
                        ? over->second
                        : default_tol.value_or(inv.tolerance);
    try {
      std::mt19937_64 rng(rec.seed);
      rec.residual = body(rng);
      rec.pass = rec.residual <= rec.tolerance;
    } catch (const std::exception& e) {
      rec.residual = kInf;
      rec.pass = false;
      rec.error = e.what();
    }
    out_.push_back(std::move(rec));
  }

 private:
  const SuiteConfig& cfg_;
  Suite suite_;
  std::vector<VerificationRecord>& out_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> pair_names(const SuiteConfig& cfg) {
  if (cfg.pair == "catalog") return catalog_pair_names();
  return split_list(cfg.pair);
}

std::vector<Cocycle> cocycles(const SuiteConfig& cfg, const GroupPtr& g) {
  if (cfg.cocycle == "catalog") return cocycle_catalog(g);
  std::vector<Cocycle> out;
  for (const auto& spec : split_list(cfg.cocycle)) {
    out.push_back(parse_cocycle(g, spec));
  }
  return out;
}

// Pair used where a single one is needed.
ComplementaryPair primary_pair(const SuiteConfig& cfg) {
  return cfg.pair == "catalog" ? catalog_pair("pnorm:2")
                               : catalog_pair(pair_names(cfg).front());
}

double relative_error(double value, double reference) {
  return std::fabs(value - reference) / std::max(std::fabs(reference), 1e-300);
}

double scale_of(double a) { return std::max(1.0, std::fabs(a)); }

bool is_pnorm(const std::string& name) { return name.rfind("pnorm:", 0) == 0; }

double pnorm_exponent(const std::string& name) {
  return parse_double(std::string_view(name).substr(6));
}

// Growth order of the group; 0 for finite groups.
int growth_degree(const Group& g) {
  switch (g.kind()) {
    case GroupKind::free_abelian:
      return g.rank();
    case GroupKind::heisenberg:
      return 4;
    case GroupKind::cyclic:
      return 0;
  }
  return 0;
}

// ---------------------------------------------------------------- young

void young_suite(const SuiteConfig& cfg, Recorder& rec) {
  for (const auto& name : pair_names(cfg)) {
    const ComplementaryPair pair = catalog_pair(name);
    rec.check("young.invariants", name, [&](std::mt19937_64&) {
      check_young_invariants(pair.phi, log_grid(1e-3, 1e2, 200));
      check_young_invariants(pair.psi, log_grid(1e-3, 50.0, 200));
      return 0.0;
    });
    if (const YoungFunction* closed = pair.phi.closed_form_conjugate()) {
      rec.check("young.conjugate", name, [&](std::mt19937_64&) {
        double worst = 0.0;
        for (double y : log_grid(1e-3, 1e2, 100)) {
          worst = std::max(worst,
                           relative_error(conjugate_at(pair.phi, y,
                                                       {kCatalogConjugateCap}),
                                          (*closed)(y)));
        }
        return worst;
      });
    }
    rec.check("young.biconjugation", name, [&](std::mt19937_64&) {
      const YoungFunction bi = conjugate(pair.psi, {kCatalogConjugateCap});
      double worst = 0.0;
      for (double x : log_grid(1e-2, 10.0, 40)) {
        worst = std::max(worst, relative_error(bi(x), pair.phi(x)));
      }
      return worst;
    });
    rec.check("young.inequality", name, [&](std::mt19937_64& rng) {
      double worst = 0.0;
      for (int i = 0; i < 100 * cfg.samples; ++i) {
        const double x = 50.0 * uniform01(rng);
        const double y = 50.0 * uniform01(rng);
        worst = std::max(worst, -young_gap(pair, x, y));
      }
      return worst;
    });
    if (pair.phi.has_derivative()) {
      rec.check("young.equality", name, [&](std::mt19937_64&) {
        double worst = 0.0;
        for (double x : log_grid(1e-3, 10.0, 60)) {
          worst = std::max(worst,
                           std::fabs(young_gap(pair, x, pair.phi.derivative(x))));
        }
        return worst;
      });
    }
    rec.check("young.monotone", name, [&](std::mt19937_64&) {
      // 2 Phi >= Phi, so its conjugate must lie below Psi.
      const YoungFunction twice(
          "2*" + name, [phi = pair.phi](double x) { return 2.0 * phi(x); });
      double worst = 0.0;
      for (double y : log_grid(1e-3, 20.0, 60)) {
        const double lower = conjugate_at(twice, y, {kCatalogConjugateCap});
        const double upper = pair.psi(y);
        worst = std::max(worst, (lower - upper) / scale_of(upper));
      }
      return worst;
    });
    rec.check("young.delta2", name, [&](std::mt19937_64&) {
      const bool expect_bounded = is_pnorm(name) || name == "xlog";
      const auto est = delta2_estimate(pair.phi, log_grid(1e-4, 1e2, 121));
      if (est.bounded != expect_bounded) return 1.0;
      if (est.bounded && is_pnorm(name)) {
        return relative_error(est.constant, std::pow(2.0, pnorm_exponent(name))) >
                       1e-9
                   ? 1.0
                   : 0.0;
      }
      return 0.0;
    });
    rec.check("young.equivalence", name + "/self", [&](std::mt19937_64&) {
      const auto eq =
          strong_equivalence(pair.phi, pair.phi, log_grid(1e-3, 1e2, 100));
      if (!eq.found) return 1.0;
      return std::fabs(eq.a - 1.0) + std::fabs(eq.b - 1.0);
    });
    if (name == "xlog") {
      rec.check("young.equivalence", name + "/conjugate-vs-cosh",
                [&](std::mt19937_64&) {
                  const auto eq = strong_equivalence(
                      catalog_function("cosh"), pair.psi,
                      log_grid(1e-2, 30.0, 100));
                  return eq.found ? 0.0 : 1.0;
                });
    }
  }
}

// ---------------------------------------------------------------- norms

void norms_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const auto ball = group->ball(cfg.radius);
  const std::string where = group->name() + "/B" + std::to_string(cfg.radius);
  for (const auto& name : pair_names(cfg)) {
    const ComplementaryPair pair = catalog_pair(name);
    const std::string detail = name + "/" + where;
    const auto each_vector = [&](std::mt19937_64& rng, auto&& fn) {
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        worst = std::max(worst, fn(random_vector(ball, rng), rng));
      }
      return worst;
    };
    rec.check("norms.sandwich", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64&) {
        const double n = luxemburg_norm(pair.phi, f);
        const double o = orlicz_norm(pair, f);
        return std::max({0.0, n - o, o - 2.0 * n});
      });
    });
    rec.check("norms.agreement", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64&) {
        return orlicz_norm_detailed(pair, f).agreement;
      });
    });
    rec.check("norms.dual_sampling", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64& r) {
        const double o = orlicz_norm(pair, f);
        return std::max(0.0, dual_sampling_bound(pair, f, 10, r) - o) /
               scale_of(o);
      });
    });
    rec.check("norms.holder", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64& r) {
        return std::max(0.0, -holder_gap(pair, f, random_vector(ball, r)));
      });
    });
    rec.check("norms.homogeneity", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64& r) {
        const Complex c = std::polar(0.25 + 4.0 * uniform01(r),
                                     6.283185307179586 * uniform01(r));
        const OrliczVector cf = f.scaled(c);
        const double a = std::abs(c);
        return std::max(
            relative_error(luxemburg_norm(pair.phi, cf),
                           a * luxemburg_norm(pair.phi, f)),
            relative_error(orlicz_norm(pair, cf), a * orlicz_norm(pair, f)));
      });
    });
    rec.check("norms.triangle", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64& r) {
        const OrliczVector g = random_vector(ball, r);
        const OrliczVector sum = f + g;
        const double lux = luxemburg_norm(pair.phi, sum) -
                           luxemburg_norm(pair.phi, f) -
                           luxemburg_norm(pair.phi, g);
        const double orl =
            orlicz_norm(pair, sum) - orlicz_norm(pair, f) - orlicz_norm(pair, g);
        return std::max({0.0, lux, orl}) /
               scale_of(orlicz_norm(pair, f) + orlicz_norm(pair, g));
      });
    });
    rec.check("norms.unit_ball", detail, [&](std::mt19937_64& rng) {
      return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64&) {
        const double n = luxemburg_norm(pair.phi, f);
        double mismatches = 0.0;
        for (double target : {0.5, 0.9, 1.1, 2.0}) {
          const OrliczVector g = f.scaled(target / n);
          const bool in_ball = luxemburg_norm(pair.phi, g) <= 1.0;
          const bool modular_ok = modular(pair.phi, g) <= 1.0;
          if (in_ball != modular_ok) mismatches += 1.0;
        }
        return mismatches;
      });
    });
    if (is_pnorm(name)) {
      const double p = pnorm_exponent(name);
      rec.check("norms.pnorm_closed_form", detail, [&](std::mt19937_64& rng) {
        return each_vector(rng, [&](const OrliczVector& f, std::mt19937_64&) {
          double sum = 0.0;
          for (const auto& [s, a] : f) sum += std::pow(std::abs(a), p);
          const double expected = std::pow(sum, 1.0 / p) * std::pow(p, -1.0 / p);
          return relative_error(luxemburg_norm(pair.phi, f), expected);
        });
      });
    }
  }
}

// -------------------------------------------------------------- cocycle

void cocycle_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int r = cfg.radius;
  const auto ball = group->ball(r);
  const std::string where = group->name() + "/B" + std::to_string(r);
  const Weight weight = parse_weight(group, cfg.weight);
  rec.check("cocycle.weight_axioms", weight.describe() + "/" + where,
            [&](std::mt19937_64&) {
              const auto rep = weight_axioms_report(weight, r);
              return (rep.identity_ok ? 0.0 : 1.0) +
                     (rep.inverse_bounded ? 0.0 : 1.0) +
                     std::max(0.0, rep.submult_sup - 1.0);
            });
  const Element g1 = group->generators().front();
  for (const Cocycle& om : cocycles(cfg, group)) {
    const std::string detail = om.describe() + "/" + where;
    rec.check("cocycle.identity", detail, [&](std::mt19937_64&) {
      return cocycle_identity_residual(om, r);
    });
    rec.check("cocycle.normalization", detail, [&](std::mt19937_64&) {
      return normalization_residual(om, 2 * r);
    });
    rec.check("cocycle.broken", detail, [&](std::mt19937_64&) {
      const Cocycle broken = Cocycle::perturbed(om, g1, g1, 1.5);
      return -cocycle_identity_residual(broken, std::min(r, 2));
    });
    rec.check("cocycle.polar", detail, [&](std::mt19937_64&) {
      const PolarFactors polar = polar_decompose(om);
      double worst = 0.0;
      for (const Element& s : ball) {
        for (const Element& t : ball) {
          worst = std::max(worst,
                           std::abs(polar.modulus(s, t) * polar.phase(s, t) -
                                    om(s, t)));
        }
      }
      return worst;
    });
    const auto& mw = om.modulus_weight();
    if (mw && mw->kind() != WeightKind::product) {
      rec.check("cocycle.witness", detail, [&](std::mt19937_64&) {
        return decomposition_witness(om, 2 * r).max_violation;
      });
    }
  }
}

// -------------------------------------------------------------- twisted

void twisted_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int r = cfg.radius;
  const auto ball = group->ball(r);
  const std::string where = group->name() + "/B" + std::to_string(r);
  const ComplementaryPair pair = primary_pair(cfg);
  for (const Cocycle& om : cocycles(cfg, group)) {
    const std::string detail = om.describe() + "/" + where;
    rec.check("twisted.associativity", detail, [&](std::mt19937_64& rng) {
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector h = random_vector(ball, rng);
        worst = std::max(worst, associativity_residual(om, f, g, h));
      }
      return worst;
    });
    rec.check("twisted.delta_associativity", detail, [&](std::mt19937_64&) {
      const auto small = group->ball(std::min(r, 2));
      double worst = 0.0;
      for (const Element& a : small) {
        for (const Element& b : small) {
          for (const Element& c : small) {
            const double defect =
                std::abs(om(a, b) * om(group->multiply(a, b), c) -
                         om(b, c) * om(a, group->multiply(b, c)));
            const double assoc = associativity_residual(
                om, OrliczVector::delta(a), OrliczVector::delta(b),
                OrliczVector::delta(c));
            worst = std::max(worst, std::fabs(assoc - defect));
          }
        }
      }
      return worst;
    });
    rec.check("twisted.unit", detail, [&](std::mt19937_64& rng) {
      const auto rep = unit_check(om, r, cfg.samples, rng());
      return std::max(rep.left_residual, rep.right_residual);
    });
    rec.check("twisted.l1_bound", detail, [&](std::mt19937_64& rng) {
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const double scale = scale_of(f.l1_norm() * g.l1_norm());
        worst = std::max(worst, -l1_bound_gap(om, f, g) / scale);
      }
      return std::max(worst, 0.0);
    });
    rec.check("twisted.probe", pair.name() + "/" + detail,
              [&](std::mt19937_64& rng) {
                const auto rows =
                    submultiplicativity_probe(pair, om, {{r}, cfg.samples, rng()});
                return rows.front().c_hat;
              });
  }
}

// -------------------------------------------------------------- duality

void duality_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int r = cfg.radius;
  const auto ball = group->ball(r);
  const std::string where = group->name() + "/B" + std::to_string(r);
  const ComplementaryPair pair = primary_pair(cfg);
  const ComplementaryPair dual = pair.swapped();
  for (const Cocycle& om : cocycles(cfg, group)) {
    const std::string detail = om.describe() + "/" + where;
    rec.check("duality.pairing", detail, [&](std::mt19937_64& rng) {
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector h = random_vector(ball, rng);
        worst = std::max(worst, duality_residual(om, f, g, h));
      }
      return worst;
    });
    rec.check("duality.action_bound", pair.name() + "/" + detail,
              [&](std::mt19937_64& rng) {
                // Random pairs on B_r miss the functionals that norm g.'h,
                // which live on B_2r; each one joins the probe sample.
                double c_hat =
                    submultiplicativity_probe(pair, om, {{r}, cfg.samples, rng()})
                        .front()
                        .c_hat;
                std::vector<std::array<double, 3>> sides;
                for (int i = 0; i < cfg.samples; ++i) {
                  const OrliczVector g = random_vector(ball, rng);
                  const OrliczVector h = random_vector(ball, rng);
                  const OrliczVector action = module_action_left(om, g, h);
                  const OrliczVector f_star = norming_vector(dual, action);
                  c_hat = std::max(c_hat, algebra_ratio(pair, om, f_star, g));
                  sides.push_back({orlicz_norm(dual, action),
                                   orlicz_norm(pair, g),
                                   luxemburg_norm(pair.psi, h)});
                }
                double worst = 0.0;
                for (const auto& [lhs, g_norm, h_norm] : sides) {
                  worst = std::max(worst, lhs / (2.0 * c_hat * g_norm * h_norm) - 1.0);
                }
                return std::max(worst, 0.0);
              });
  }
}

// ------------------------------------------------------------ splitting

SplitFactors factors_for(const Cocycle& om, int radius, std::string& note) {
  const auto& mw = om.modulus_weight();
  if (mw && mw->kind() != WeightKind::product) {
    const auto w = decomposition_witness(om, radius);
    note = w.description;
    return split_factors(om, w.u, w.v);
  }
  // Constant witness on the ball, valid wherever the operands live.
  const double half = 0.5 * sup_norm_estimate(om, radius);
  note = "u = v = sup|Omega| / 2";
  const ElementFn c = [half](const Element&) { return half; };
  return split_factors(om, c, c);
}

void splitting_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int r = cfg.radius;
  const auto ball = group->ball(r);
  const std::string where = group->name() + "/B" + std::to_string(r);
  for (const Cocycle& om : cocycles(cfg, group)) {
    const std::string detail = om.describe() + "/" + where;
    rec.check("splitting.identity", detail, [&](std::mt19937_64& rng) {
      std::string note;
      const SplitFactors factors = factors_for(om, r, note);
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector h = random_vector(ball, rng);
        worst = std::max(worst, splitting_residual(om, factors, f, g, h));
      }
      return worst;
    });
    rec.check("splitting.xi_bound", detail, [&](std::mt19937_64& rng) {
      std::string note;
      const SplitFactors factors = factors_for(om, r, note);
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector h = random_vector(ball, rng);
        const OrliczVector x = xi(*group, factors.l, g, h);
        std::vector<OrliczVector::Entry> flipped;
        for (const auto& [s, a] : g) {
          flipped.emplace_back(group->invert(s), std::abs(a));
        }
        std::vector<OrliczVector::Entry> magnitudes;
        for (const auto& [s, a] : h) magnitudes.emplace_back(s, std::abs(a));
        const OrliczVector abs_h = OrliczVector::from_entries(std::move(magnitudes));
        const OrliczVector bound = convolve(
            *group, abs_h, OrliczVector::from_entries(std::move(flipped)));
        for (const auto& [s, a] : x) {
          worst = std::max(worst, std::abs(a) - bound.at(s).real());
        }
      }
      return std::max(worst, 0.0);
    });
    rec.check("splitting.zeta", detail, [&](std::mt19937_64& rng) {
      std::string note;
      const SplitFactors factors = factors_for(om, r, note);
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector h = random_vector(ball, rng);
        worst = std::max(worst,
                         std::abs(pairing(f, xi(*group, factors.l, g, h)) -
                                  pairing(h, zeta(*group, factors.l, f, g))));
      }
      return worst;
    });
  }
}

// --------------------------------------------------------------- lambda

void lambda_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int r = cfg.radius;
  const auto ball = group->ball(r);
  const std::string where = group->name() + "/B" + std::to_string(r);
  const ComplementaryPair pair = primary_pair(cfg);

  std::vector<Weight> weights{parse_weight(group, cfg.weight)};
  for (const Cocycle& om : cocycles(cfg, group)) {
    if (om.kind() != CocycleKind::coboundary) continue;
    const Weight& w = *om.modulus_weight();
    const bool seen = std::any_of(weights.begin(), weights.end(), [&](const Weight& x) {
      return x.describe() == w.describe();
    });
    if (!seen) weights.push_back(w);
  }

  for (const Weight& w : weights) {
    const std::string detail = w.describe() + "/" + where;
    rec.check("lambda.isometry", pair.name() + "/" + detail,
              [&](std::mt19937_64& rng) {
                double worst = 0.0;
                for (int i = 0; i < cfg.samples; ++i) {
                  const OrliczVector f = random_vector(ball, rng);
                  worst = std::max(
                      worst, relative_error(
                                 weighted_norm(pair, w, lambda_transform(w, f)),
                                 orlicz_norm(pair, f)));
                }
                return worst;
              });
    rec.check("lambda.intertwining", detail, [&](std::mt19937_64& rng) {
      const Cocycle om = Cocycle::coboundary(w);
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        const OrliczVector g = random_vector(ball, rng);
        const OrliczVector lhs = lambda_transform(w, twisted_convolve(om, f, g));
        const OrliczVector rhs =
            convolve(*group, lambda_transform(w, f), lambda_transform(w, g));
        worst = std::max(worst, lhs.max_distance(rhs) / scale_of(rhs.sup_abs()));
      }
      return worst;
    });
    rec.check("lambda.inverse", detail, [&](std::mt19937_64& rng) {
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const OrliczVector f = random_vector(ball, rng);
        worst = std::max(
            worst,
            inverse_lambda_transform(w, lambda_transform(w, f)).max_distance(f));
      }
      return worst;
    });
  }
  rec.check("lambda.augmentation", where, [&](std::mt19937_64& rng) {
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const OrliczVector f = random_vector(ball, rng);
      const OrliczVector g = random_vector(ball, rng);
      const Complex expected = augmentation(f) * augmentation(g);
      worst = std::max(worst, std::abs(augmentation(convolve(*group, f, g)) -
                                       expected) /
                                  scale_of(std::abs(expected)));
    }
    return worst;
  });
}

// --------------------------------------------------------------- growth

// |B_n| for the standard generators of Z^d: sum_k 2^k C(d,k) C(n,k).
double free_abelian_ball(int d, int n) {
  double total = 0.0;
  for (int k = 0; k <= std::min(d, n); ++k) {
    double term = std::ldexp(1.0, k);
    for (int j = 0; j < k; ++j) {
      term *= static_cast<double>(d - j) / (j + 1);
      term *= static_cast<double>(n - j);
    }
    for (int j = 1; j <= k; ++j) term /= j;
    total += term;
  }
  return std::round(total);
}

constexpr std::array<std::size_t, 13> kHeisenbergBalls = {
    1, 5, 17, 53, 135, 299, 593, 1069, 1793, 2845, 4309, 6281, 8871};

int default_growth_radius(const Group& g) {
  switch (g.kind()) {
    case GroupKind::heisenberg:
      return 12;
    case GroupKind::cyclic:
      return 2 * static_cast<int>(std::min<std::int64_t>(g.parameter(), 20));
    case GroupKind::free_abelian:
      break;
  }
  static constexpr std::array<int, 9> radii = {0, 40, 20, 14, 12, 10, 8, 8, 8};
  return radii[static_cast<std::size_t>(g.rank())];
}

double default_growth_tolerance(const Group& g) {
  switch (g.kind()) {
    case GroupKind::heisenberg:
      return 0.4;
    case GroupKind::cyclic:
      return 0.1;
    case GroupKind::free_abelian:
      break;
  }
  return 0.1 * g.rank();
}

void growth_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const int max_r = default_growth_radius(*group);
  rec.check("growth.order", group->name() + "/maxR" + std::to_string(max_r),
            [&](std::mt19937_64&) {
              const auto est = growth_order_estimate(*group, max_r);
              return std::fabs(est.d_hat - growth_degree(*group));
            },
            default_growth_tolerance(*group));
  const int r = cfg.radius;
  rec.check("growth.word_length",
            group->name() + "/B" + std::to_string(r), [&](std::mt19937_64&) {
              const auto ball = group->ball(r);
              double violations = 0.0;
              for (const Element& s : ball) {
                const int ts = group->word_length(s);
                if (group->word_length(group->invert(s)) != ts) violations += 1.0;
                if (group->word_length_bfs(s) != ts) violations += 1.0;
                for (const Element& t : ball) {
                  if (group->word_length(group->multiply(s, t)) >
                      ts + group->word_length(t)) {
                    violations += 1.0;
                  }
                }
              }
              return violations;
            });
  const int sizes_r = group->kind() == GroupKind::heisenberg
                          ? static_cast<int>(kHeisenbergBalls.size()) - 1
                          : std::min(max_r, 12);
  rec.check("growth.ball_sizes", group->name() + "/B" + std::to_string(sizes_r),
            [&](std::mt19937_64&) {
              const auto sizes = group->ball_sizes(sizes_r);
              double mismatches = 0.0;
              for (int n = 0; n <= sizes_r; ++n) {
                double expected = 0.0;
                switch (group->kind()) {
                  case GroupKind::free_abelian:
                    expected = free_abelian_ball(group->rank(), n);
                    break;
                  case GroupKind::heisenberg:
                    expected = static_cast<double>(kHeisenbergBalls[n]);
                    break;
                  case GroupKind::cyclic:
                    expected = static_cast<double>(
                        std::min<std::int64_t>(group->parameter(), 2 * n + 1));
                    break;
                }
                if (static_cast<double>(sizes[n]) != expected) mismatches += 1.0;
              }
              return mismatches;
            });
}

// ----------------------------------------------------------- membership

// Exponent l with Psi(y) ~ y^l near 0.
double lower_index(const std::string& name) {
  if (is_pnorm(name)) {
    const double p = pnorm_exponent(name);
    return p / (p - 1.0);
  }
  return 2.0;
}

std::vector<int> membership_radii(const Group& g) {
  switch (g.kind()) {
    case GroupKind::heisenberg:
      return {4, 8, 12};
    case GroupKind::cyclic: {
      // Past saturation, where the sums stop changing.
      const int half = static_cast<int>(g.parameter() / 2);
      return {half, half + 1, half + 2};
    }
    case GroupKind::free_abelian:
      break;
  }
  switch (g.rank()) {
    case 1:
      return {128, 256, 512};
    case 2:
      return {8, 16, 32};
    case 3:
      return {6, 12, 18};
    default:
      return {4, 6, 8};
  }
}

void membership_suite(const SuiteConfig& cfg, Recorder& rec) {
  const GroupPtr group = parse_group(cfg.group);
  const auto radii = membership_radii(*group);
  const std::array<double, 2> alphas = {1.0, 10.0};
  const int d = growth_degree(*group);
  for (const auto& name : pair_names(cfg)) {
    const ComplementaryPair pair = catalog_pair(name);
    if (group->is_finite()) {
      rec.check("membership.finite", name + "/" + group->name(),
                [&](std::mt19937_64&) {
                  const Weight w = Weight::polynomial(group, 0.1);
                  const auto rows = membership_diagnostic(
                      pair.psi, *group,
                      [&w](const Element& s) { return 1.0 / w(s); }, alphas,
                      radii);
                  double wrong = 0.0;
                  for (const auto& row : rows) {
                    if (row.verdict != "converging") wrong += 1.0;
                  }
                  return wrong;
                });
      continue;
    }
    const double critical = d / lower_index(name);
    for (const auto& [factor, expected] :
         {std::pair{2.0, "converging"}, std::pair{0.4, "diverging"}}) {
      const double beta = factor * critical;
      const Weight w = Weight::polynomial(group, beta);
      rec.check("membership.verdict",
                name + "/" + group->name() + "/" + w.describe(),
                [&](std::mt19937_64&) {
                  const auto rows = membership_diagnostic(
                      pair.psi, *group,
                      [&w](const Element& s) { return 1.0 / w(s); }, alphas,
                      radii);
                  double wrong = 0.0;
                  for (const auto& row : rows) {
                    if (row.verdict != expected) wrong += 1.0;
                  }
                  return wrong;
                });
    }
  }
}

}  // namespace

std::span<const Suite> all_suites() { return kSuites; }

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::young: return "young";
    case Suite::norms: return "norms";
    case Suite::cocycle: return "cocycle";
    case Suite::twisted: return "twisted";
    case Suite::duality: return "duality";
    case Suite::splitting: return "splitting";
    case Suite::lambda: return "lambda";
    case Suite::growth: return "growth";
    case Suite::membership: return "membership";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::span<const Invariant> invariant_registry() { return kRegistry; }

const Invariant& find_invariant(std::string_view id) {
  for (const Invariant& inv : kRegistry) {
    if (inv.id == id) return inv;
  }
  throw std::out_of_range("unknown invariant " + std::string(id));
}

void validate_config(const SuiteConfig& cfg) {
  try {
    const GroupPtr group = parse_group(cfg.group);
    for (const auto& name : pair_names(cfg)) catalog_pair(name);
    parse_weight(group, cfg.weight);
    cocycles(cfg, group);
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  for (const auto& [key, value] : cfg.tolerances) {
    try {
      find_invariant(key);
    } catch (const std::out_of_range&) {
      throw config_error("tolerance for unknown invariant '" + key + "'");
    }
  }
}

std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg, Suite suite) {
  std::vector<VerificationRecord> out;
  Recorder rec(cfg, suite, out);
  try {
  switch (suite) {
    case Suite::young: young_suite(cfg, rec); break;
    case Suite::norms: norms_suite(cfg, rec); break;
    case Suite::cocycle: cocycle_suite(cfg, rec); break;
    case Suite::twisted: twisted_suite(cfg, rec); break;
    case Suite::duality: duality_suite(cfg, rec); break;
    case Suite::splitting: splitting_suite(cfg, rec); break;
    case Suite::lambda: lambda_suite(cfg, rec); break;
    case Suite::growth: growth_suite(cfg, rec); break;
    case Suite::membership: membership_suite(cfg, rec); break;
  }
  } catch (const std::exception& e) {
    VerificationRecord failed;
    failed.suite = std::string(suite_name(suite));
    failed.case_id = failed.suite + "/setup";
    failed.invariant = "setup";
    failed.anchor = "suite setup";
    failed.residual = kInf;
    failed.seed = cfg.seed;
    failed.error = e.what();
    out.push_back(std::move(failed));
  }
  return out;
}

std::vector<VerificationRecord> run_all(const SuiteConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (Suite s : kSuites) {
    auto part = run_suite(cfg, s);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace orlicz
