#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

// Oracle: brute-force sup of xy - phi(x) on a dense grid refined around the
// best sample.
double brute_conjugate(const YoungFunction& phi, double y, double hi) {
  double best_x = 0.0;
  double best = 0.0;
  const int n = 20000;
  for (int i = 0; i <= n; ++i) {
    const double x = hi * i / n;
    const double v = x * y - phi(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double lo = std::max(0.0, best_x - hi / n);
  double up = best_x + hi / n;
  for (int k = 0; k < 200; ++k) {
    const double m1 = lo + (up - lo) / 3.0;
    const double m2 = up - (up - lo) / 3.0;
    if (m1 * y - phi(m1) < m2 * y - phi(m2)) {
      lo = m1;
    } else {
      up = m2;
    }
  }
  const double x = 0.5 * (lo + up);
  return std::max(best, x * y - phi(x));
}

YoungFunction power(double p) {
  return YoungFunction("x^" + std::to_string(p),
                       [p](double x) { return std::pow(x, p) / p; },
                       ScalarFn([p](double x) { return std::pow(x, p - 1.0); }));
}

}  // namespace

TEST_CASE("generator y gives x^2/2 and y^2/2") {
  const auto pair = build_from_generator([](double y) { return y; }, "id");
  CHECK(pair.phi(2.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(pair.psi(3.0) == doctest::Approx(4.5).epsilon(1e-9));
  CHECK(pair.phi(0.0) == 0.0);
  CHECK(pair.psi(0.0) == 0.0);
  CHECK(pair.mode == PairingMode::numeric_conjugate);
}

TEST_CASE("generator e^y - 1 reproduces the expm pair") {
  const auto pair =
      build_from_generator([](double y) { return std::expm1(y); }, "exp");
  for (double x : log_grid(1e-2, 5.0, 30)) {
    const double expected = std::expm1(x) - x;
    CHECK(std::fabs(pair.phi(x) - expected) <= 1e-8 * std::max(1.0, expected));
  }
  for (double y : log_grid(1e-2, 50.0, 30)) {
    const double expected = (1.0 + y) * std::log1p(y) - y;
    CHECK(std::fabs(pair.psi(y) - expected) <= 1e-8 * std::max(1.0, expected));
  }
}

TEST_CASE("non-monotone generator is rejected with the violating pair") {
  try {
    build_from_generator([](double y) { return std::sin(y); }, "sin");
    FAIL("expected generator_error");
  } catch (const generator_error& e) {
    CHECK(e.x1() < e.x2());
    CHECK(std::sin(e.x2()) <= std::sin(e.x1()));
  }
  CHECK_THROWS_AS(build_from_generator([](double y) { return y + 1.0; }, "shift"),
                  generator_error);
}

TEST_CASE("conjugate of x^3/3 at 1 is 2/3") {
  const double v = conjugate_at(power(3.0), 1.0);
  CHECK(std::fabs(v - 2.0 / 3.0) / (2.0 / 3.0) <= 1e-6);
  CHECK(conjugate_at(power(3.0), 0.0) == 0.0);
}

TEST_CASE("conjugate agrees with a brute-force maximization") {
  const YoungFunction no_derivative = catalog_function("cosh").without_derivative();
  const YoungFunction xlog = catalog_function("xlog");
  for (double y : {0.1, 0.7, 2.0, 5.0}) {
    CHECK(conjugate_at(no_derivative, y) ==
          doctest::Approx(brute_conjugate(no_derivative, y, 10.0)).epsilon(1e-9));
    CHECK(conjugate_at(xlog, y) ==
          doctest::Approx(brute_conjugate(xlog, y, 200.0)).epsilon(1e-9));
  }
}

TEST_CASE("conjugate reproduces the closed forms on a log grid") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double q = p / (p - 1.0);
    for (double y : log_grid(1e-3, 1e2, 100)) {
      const double expected = std::pow(y, q) / q;
      CHECK(std::fabs(conjugate_at(power(p), y, {1e30}) - expected) <=
            1e-6 * expected);
    }
  }
  const YoungFunction expm = catalog_function("expm");
  for (double y : log_grid(1e-3, 1e2, 100)) {
    const double expected = (1.0 + y) * std::log1p(y) - y;
    CHECK(std::fabs(conjugate_at(expm, y) - expected) <= 1e-6 * expected);
  }
}

TEST_CASE("bracket cap is reported with y and cap") {
  try {
    conjugate_at(catalog_function("xlog"), 20.0);
    FAIL("expected bracket_error");
  } catch (const bracket_error& e) {
    CHECK(e.cap() == 1e3);
    CHECK(std::string(e.what()).find("y=20") != std::string::npos);
  }
  CHECK_NOTHROW(conjugate_at(catalog_function("xlog"), 20.0, {kCatalogConjugateCap}));
}

TEST_CASE("young gap examples") {
  const auto pair = catalog_pair("pnorm:2");
  CHECK(young_gap(pair, 1.0, 1.0) == doctest::Approx(0.0));
  CHECK(young_gap(pair, 0.0, 3.0) == doctest::Approx(pair.psi(3.0)));
}

TEST_CASE("young inequality holds for every catalog pair") {
  std::mt19937_64 rng(7);
  for (const auto& name : catalog_pair_names()) {
    const auto pair = catalog_pair(name);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double x = 50.0 * uniform01(rng);
      const double y = 50.0 * uniform01(rng);
      worst = std::min(worst, young_gap(pair, x, y));
    }
    INFO(name);
    CHECK(worst >= -1e-9);
  }
}

TEST_CASE("equality locus y = phi(x)") {
  for (const auto& name : catalog_pair_names()) {
    const auto pair = catalog_pair(name);
    for (double x : log_grid(1e-3, 10.0, 40)) {
      INFO(name << " x=" << x);
      CHECK(std::fabs(young_gap(pair, x, pair.phi.derivative(x))) <= 1e-8);
    }
  }
}

TEST_CASE("biconjugation recovers phi") {
  for (const auto& name : catalog_pair_names()) {
    const auto pair = catalog_pair(name);
    const YoungFunction bi = conjugate(pair.psi, {kCatalogConjugateCap});
    for (double x : log_grid(1e-2, 10.0, 25)) {
      INFO(name << " x=" << x);
      CHECK(std::fabs(bi(x) - pair.phi(x)) <= 1e-6 * pair.phi(x));
    }
  }
}

TEST_CASE("monotone conjugacy") {
  const YoungFunction small = power(2.0);
  const YoungFunction big("x^2", [](double x) { return x * x; });
  for (double y : log_grid(1e-2, 20.0, 30)) {
    CHECK(conjugate_at(small, y) >= conjugate_at(big, y) - 1e-12);
  }
}

TEST_CASE("invariant checks flag bad functions") {
  const auto grid = log_grid(1e-3, 10.0, 50);
  CHECK_NOTHROW(check_young_invariants(catalog_function("cosh"), grid));
  const YoungFunction shifted("shifted", [](double x) { return x * x + 1.0; });
  std::vector<double> with_zero{0.0};
  with_zero.insert(with_zero.end(), grid.begin(), grid.end());
  CHECK_THROWS_AS(check_young_invariants(shifted, with_zero), young_invariant_error);
  const YoungFunction concave("sqrt", [](double x) { return std::sqrt(x); });
  CHECK_THROWS_AS(check_young_invariants(concave, grid), young_invariant_error);
}

TEST_CASE("delta2 constants") {
  const auto grid = log_grid(1e-6, 1e2, 161);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto est = delta2_estimate(power(p), grid);
    CHECK(est.bounded);
    CHECK(est.constant == doctest::Approx(std::pow(2.0, p)).epsilon(1e-12));
  }
  const auto xlog = delta2_estimate(catalog_function("xlog"), grid);
  CHECK(xlog.bounded);
  CHECK(xlog.constant == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(xlog.constant <= 4.0);

  const auto expm = delta2_estimate(catalog_function("expm"), grid);
  CHECK_FALSE(expm.bounded);
  const YoungFunction e = catalog_function("expm");
  CHECK(e(40.0) / e(20.0) - e(10.0) / e(5.0) > 1e6);
  CHECK_FALSE(delta2_estimate(catalog_function("cosh"), grid).bounded);

  CHECK_THROWS_AS(delta2_estimate(power(2.0), log_grid(1.0, 100.0, 10)),
                  std::invalid_argument);
  const YoungFunction flat("flat", [](double x) { return x < 1.0 ? 0.0 : x - 1.0; });
  CHECK_THROWS_AS(delta2_estimate(flat, grid), young_invariant_error);
}

TEST_CASE("strong equivalence witnesses") {
  const auto grid = log_grid(1e-3, 1e2, 100);
  const auto self = strong_equivalence(power(2.0), power(2.0), grid);
  CHECK(self.found);
  CHECK(self.a == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(self.b == doctest::Approx(1.0).epsilon(1e-10));

  const YoungFunction square("x^2", [](double x) { return x * x; });
  const auto half = strong_equivalence(square, power(2.0), grid);
  CHECK(half.found);
  CHECK(half.a == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(half.b == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  for (double x : grid) {
    CHECK(square(half.a * x) <= power(2.0)(x) * (1.0 + 1e-9));
    CHECK(power(2.0)(x) <= square(half.b * x) * (1.0 + 1e-9));
  }

  const auto xlog = catalog_pair("xlog");
  const auto near_cosh = strong_equivalence(catalog_function("cosh"), xlog.psi,
                                            log_grid(1e-2, 30.0, 100));
  CHECK(near_cosh.found);
  CHECK(near_cosh.a > 0.0);
  CHECK(std::isfinite(near_cosh.b));

  const auto apart = strong_equivalence(power(2.0), catalog_function("expm"), grid);
  CHECK_FALSE(apart.found);
  CHECK(apart.violating_x.has_value());
}

TEST_CASE("catalog rejects unknown names") {
  CHECK_THROWS_AS(catalog_pair("pnorm:1"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_pair("pnorm:x"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_pair("sinh"), std::invalid_argument);
  CHECK(catalog_pair_names().size() == 6);
}
