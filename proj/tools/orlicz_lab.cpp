#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orlicz/cocycle.hpp"
#include "orlicz/config.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/report.hpp"
#include "orlicz/specs.hpp"
#include "orlicz/suites.hpp"
#include "orlicz/twisted.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

OrliczVector load_vector(const std::string& path, const GroupPtr& group) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read vector file " + path);
  return read_vector(in, *group);
}

// Rank of the first data line of a vector file.
int vector_rank(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read vector file " + path);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto commas = std::count(line.begin(), line.end(), ',');
    return static_cast<int>(commas) - 1;
  }
  throw config_error("vector file " + path + " is empty");
}

Element parse_element(const Group& g, const std::string& text) {
  return g.element(parse_int_list(text));
}

struct Globals {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::string format = "lines";
  std::optional<std::string> out;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::string> group, pair, weight, cocycle;
  std::optional<int> radius, samples;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for twisted Orlicz algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--config", globals.config, "Config file (default: $" +
                                                 std::string(kConfigEnv) + ")");
  app.add_option("--seed", globals.seed, "Random seed");
  app.add_option("--format", globals.format, "Report format")
      ->check(CLI::IsMember({"lines", "table"}));
  app.add_option("--out", globals.out, "Write output to this file");

  std::ostringstream out;
  std::function<int()> action;

  // young
  auto* young = app.add_subcommand("young", "Young functions and conjugates");
  young->require_subcommand(1);
  std::string phi_spec = "pnorm:2";
  std::string at_list = "1";
  auto* yconj = young->add_subcommand("conjugate", "Numeric conjugate at points");
  yconj->add_option("--phi", phi_spec)->required();
  yconj->add_option("--at", at_list, "Comma-separated y values");
  yconj->callback([&] {
    action = [&] {
      const ComplementaryPair pair = catalog_pair(phi_spec);
      const YoungFunction* closed = pair.phi.closed_form_conjugate();
      for (double y : parse_double_list(at_list)) {
        out << "y=" << num(y)
            << " psi=" << num(conjugate_at(pair.phi, y, {kCatalogConjugateCap}));
        if (closed) out << " closed_form=" << num((*closed)(y));
        out << '\n';
      }
      return 0;
    };
  });
  double lo = 1e-4;
  double hi = 1e2;
  auto* ydelta = young->add_subcommand("delta2", "Doubling-constant estimate");
  ydelta->add_option("--phi", phi_spec)->required();
  ydelta->add_option("--lo", lo);
  ydelta->add_option("--hi", hi);
  ydelta->callback([&] {
    action = [&] {
      const auto est =
          delta2_estimate(catalog_function(phi_spec), log_grid(lo, hi, 121));
      out << "phi=" << phi_spec
          << " bounded=" << (est.bounded ? "yes" : "no");
      if (est.bounded) out << " K=" << num(est.constant);
      out << '\n';
      for (std::size_t i = 0; i < est.xs.size(); i += 20) {
        out << "x=" << num(est.xs[i]) << " ratio=" << num(est.ratios[i]) << '\n';
      }
      return 0;
    };
  });
  std::string phi2_spec;
  auto* yequiv = young->add_subcommand("equiv", "Strong equivalence witness");
  yequiv->add_option("--phi1", phi_spec)->required();
  yequiv->add_option("--phi2", phi2_spec)->required();
  yequiv->add_option("--lo", lo);
  yequiv->add_option("--hi", hi);
  yequiv->callback([&] {
    action = [&] {
      const auto eq = strong_equivalence(catalog_function(phi_spec),
                                         catalog_function(phi2_spec),
                                         log_grid(lo, hi, 200));
      out << "found=" << (eq.found ? "yes" : "no") << " a=" << num(eq.a)
          << " b=" << num(eq.b);
      if (eq.violating_x) out << " violating_x=" << num(*eq.violating_x);
      out << '\n';
      return eq.found ? 0 : kExitFail;
    };
  });

  // group
  auto* group = app.add_subcommand("group", "Groups, balls and weights");
  group->require_subcommand(1);
  std::string group_spec = "z2";
  int radius = 4;
  auto* gball = group->add_subcommand("ball", "Ball sizes and elements");
  gball->add_option("--group", group_spec);
  gball->add_option("--radius", radius);
  bool list_elements = false;
  gball->add_flag("--list", list_elements, "Print the elements");
  gball->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const auto sizes = g->ball_sizes(radius);
      for (std::size_t n = 0; n < sizes.size(); ++n) {
        out << "n=" << n << " size=" << sizes[n] << '\n';
      }
      if (list_elements) {
        for (const Element& s : g->ball(radius)) {
          out << s.str() << " length=" << g->word_length(s) << '\n';
        }
      }
      return 0;
    };
  });
  int max_r = 12;
  auto* ggrowth = group->add_subcommand("growth", "Growth-order estimate");
  ggrowth->add_option("--group", group_spec);
  ggrowth->add_option("--max-r", max_r);
  ggrowth->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const auto est = growth_order_estimate(*g, max_r);
      out << "group=" << g->name() << " d_hat=" << num(est.d_hat)
          << " fit_residual=" << num(est.fit_residual) << " c1=" << num(est.c1)
          << " c2=" << num(est.c2) << '\n';
      return 0;
    };
  });
  std::string kind = "poly";
  double beta = 1.0, alpha = 0.5, gamma = 1.0, scale = 1.0;
  std::string at_elem = "0,0";
  auto* gweight = group->add_subcommand("weight", "Evaluate a weight");
  gweight->add_option("--group", group_spec);
  gweight->add_option("--kind", kind)
      ->check(CLI::IsMember({"trivial", "poly", "subexp", "sublog"}));
  gweight->add_option("--beta", beta);
  gweight->add_option("--alpha", alpha);
  gweight->add_option("--gamma", gamma);
  gweight->add_option("-C,--c", scale);
  gweight->add_option("--at", at_elem, "Element coordinates");
  gweight->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      std::string spec = kind;
      if (kind == "poly") spec += ":" + num(beta);
      if (kind == "subexp") spec += ":" + num(alpha) + ":" + num(scale);
      if (kind == "sublog") spec += ":" + num(gamma) + ":" + num(scale);
      const Weight w = parse_weight(g, spec);
      const Element s = parse_element(*g, at_elem);
      out << "weight=" << w.describe() << " at=" << s.str()
          << " length=" << g->word_length(s) << " value=" << num(w(s)) << '\n';
      return 0;
    };
  });

  // cocycle
  auto* cocycle = app.add_subcommand("cocycle", "Cocycle checks");
  cocycle->require_subcommand(1);
  std::optional<std::string> weight_spec;
  std::string cocycle_spec = "trivial";
  const auto pick_cocycle = [&](const GroupPtr& g) {
    return weight_spec ? Cocycle::coboundary(parse_weight(g, *weight_spec))
                       : parse_cocycle(g, cocycle_spec);
  };
  auto* ccheck = cocycle->add_subcommand("check", "Identity and normalization");
  ccheck->add_option("--group", group_spec);
  ccheck->add_option("--weight", weight_spec, "Use the coboundary of this weight");
  ccheck->add_option("--cocycle", cocycle_spec);
  ccheck->add_option("--radius", radius);
  ccheck->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const Cocycle om = pick_cocycle(g);
      const double id = cocycle_identity_residual(om, radius);
      const double norm = normalization_residual(om, radius);
      out << "cocycle=" << om.describe() << " radius=" << radius
          << " identity_residual=" << num(id)
          << " normalization_residual=" << num(norm)
          << " sup=" << num(sup_norm_estimate(om, radius)) << '\n';
      return id <= 1e-10 && norm <= 1e-12 ? 0 : kExitFail;
    };
  });
  auto* cwit = cocycle->add_subcommand("witness", "Decomposition witness");
  cwit->add_option("--group", group_spec);
  cwit->add_option("--weight", weight_spec);
  cwit->add_option("--cocycle", cocycle_spec);
  cwit->add_option("--radius", radius);
  cwit->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const Cocycle om = pick_cocycle(g);
      try {
        const auto w = decomposition_witness(om, radius);
        out << "cocycle=" << om.describe() << " witness=\"" << w.description
            << "\" radius=" << w.verified_radius
            << " max_violation=" << num(w.max_violation) << '\n';
        return 0;
      } catch (const witness_error& e) {
        out << "cocycle=" << om.describe() << " failed: " << e.what() << '\n';
        return kExitFail;
      }
    };
  });
  std::string s_elem = "0,0", t_elem = "0,0";
  auto* cpolar = cocycle->add_subcommand("polar", "Modulus and phase at (s,t)");
  cpolar->add_option("--group", group_spec);
  cpolar->add_option("--weight", weight_spec);
  cpolar->add_option("--cocycle", cocycle_spec);
  cpolar->add_option("--s", s_elem);
  cpolar->add_option("--t", t_elem);
  cpolar->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const Cocycle om = pick_cocycle(g);
      const PolarFactors p = polar_decompose(om);
      const Element s = parse_element(*g, s_elem);
      const Element t = parse_element(*g, t_elem);
      const Complex v = om(s, t);
      const Complex ph = p.phase(s, t);
      out << "s=" << s.str() << " t=" << t.str() << " value=" << num(v.real())
          << "," << num(v.imag()) << " modulus=" << num(p.modulus(s, t).real())
          << " phase=" << num(ph.real()) << "," << num(ph.imag()) << '\n';
      return 0;
    };
  });

  // norm
  std::string vec_path;
  std::optional<std::string> norm_group;
  auto* norm = app.add_subcommand("norm", "Luxemburg and Orlicz norms of a vector");
  norm->add_option("--phi", phi_spec)->required();
  norm->add_option("--vec", vec_path, "Lines c1,...,cd,re,im")->required();
  norm->add_option("--group", norm_group, "Default: Z^d from the file");
  norm->callback([&] {
    action = [&] {
      const GroupPtr g = norm_group ? parse_group(*norm_group)
                                    : Group::free_abelian(vector_rank(vec_path));
      const OrliczVector f = load_vector(vec_path, g);
      const NormReport rep = norm_report(catalog_pair(phi_spec), f);
      out << "phi=" << phi_spec << " luxemburg=" << num(rep.luxemburg)
          << " orlicz=" << num(rep.orlicz)
          << " method_agreement=" << num(rep.method_agreement) << '\n';
      return 0;
    };
  });

  // conv
  auto* conv = app.add_subcommand("conv", "Twisted convolution");
  std::string f_path, g_path;
  conv->add_option("--group", group_spec);
  conv->add_option("--cocycle", cocycle_spec);
  conv->add_option("--f", f_path);
  conv->add_option("--g", g_path);
  int samples = 100;
  auto* probe = conv->add_subcommand("probe", "Empirical algebra constant");
  probe->add_option("--phi", phi_spec);
  probe->add_option("--group", group_spec);
  probe->add_option("--cocycle", cocycle_spec);
  std::vector<int> radii{8};
  probe->add_option("--radius", radii, "One or more radii")->delimiter(',');
  probe->add_option("--samples", samples);
  probe->callback([&] {
    action = [&] {
      const GroupPtr g = parse_group(group_spec);
      const Cocycle om = parse_cocycle(g, cocycle_spec);
      const std::uint64_t seed = globals.seed.value_or(42);
      const auto rows = submultiplicativity_probe(catalog_pair(phi_spec), om,
                                                  {radii, samples, seed});
      for (const auto& row : rows) {
        out << "cocycle=" << om.describe() << " phi=" << phi_spec
            << " radius=" << row.radius << " pairs=" << row.pairs
            << " C_hat=" << num(row.c_hat) << " (empirical lower bound)"
            << " seed=" << seed << '\n';
      }
      return 0;
    };
  });
  conv->callback([&] {
    if (conv->got_subcommand(probe)) return;
    action = [&] {
      if (f_path.empty() || g_path.empty()) {
        throw config_error("conv needs --f and --g (or the probe subcommand)");
      }
      const GroupPtr g = parse_group(group_spec);
      const Cocycle om = parse_cocycle(g, cocycle_spec);
      out << write_vector(
          twisted_convolve(om, load_vector(f_path, g), load_vector(g_path, g)));
      return 0;
    };
  });

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", vopt.suite, "Suite name or 'all'");
  verify->add_option("--group", vopt.group);
  verify->add_option("--pair", vopt.pair);
  verify->add_option("--weight", vopt.weight);
  verify->add_option("--cocycle", vopt.cocycle);
  verify->add_option("--radius", vopt.radius);
  verify->add_option("--samples", vopt.samples);
  verify->callback([&] {
    action = [&] {
      SuiteConfig cfg = resolve_config(globals.config);
      if (globals.seed) cfg.seed = *globals.seed;
      if (vopt.group) cfg.group = *vopt.group;
      if (vopt.pair) cfg.pair = *vopt.pair;
      if (vopt.weight) cfg.weight = *vopt.weight;
      if (vopt.cocycle) cfg.cocycle = *vopt.cocycle;
      if (vopt.radius) cfg.radius = *vopt.radius;
      if (vopt.samples) cfg.samples = *vopt.samples;
      validate_config(cfg);
      std::vector<VerificationRecord> records;
      if (vopt.suite == "all") {
        records = run_all(cfg);
      } else if (const auto s = parse_suite(vopt.suite)) {
        records = run_suite(cfg, *s);
      } else {
        throw config_error("unknown suite '" + vopt.suite + "'");
      }
      out << emit_report(records, *parse_report_format(globals.format), cfg);
      const bool ok = std::all_of(records.begin(), records.end(),
                                  [](const auto& r) { return r.pass; });
      return ok ? 0 : kExitFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  int code = 0;
  try {
    code = action();
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  if (globals.out) {
    std::ofstream file(*globals.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << *globals.out << '\n';
      return kExitConfig;
    }
    file << out.str();
  } else {
    std::cout << out.str();
  }
  return code;
}
