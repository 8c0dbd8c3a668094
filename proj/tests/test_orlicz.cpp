#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/norms.hpp"
#include "orlicz/numerics.hpp"

using namespace orlicz;

namespace {

OrliczVector sample(std::uint64_t seed, int radius = 3) {
  std::mt19937_64 rng(seed);
  const auto ball = Group::free_abelian(2)->ball(radius);
  return random_vector(ball, rng);
}

double lp(const OrliczVector& f, double p) {
  double s = 0.0;
  for (const auto& [e, a] : f) s += std::pow(std::abs(a), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

TEST_CASE("vector construction sums duplicates and drops exact zeros") {
  const Element a{1, 0};
  const Element b{0, 1};
  const auto f = OrliczVector::from_entries({{b, 1.0}, {a, 2.0}, {b, -1.0}, {a, Complex(0, 1)}});
  CHECK(f.size() == 1);
  CHECK(f.at(a) == Complex(2.0, 1.0));
  CHECK(f.at(b) == Complex(0.0));
  const auto g = OrliczVector::from_entries({{a, 1e-300}});
  CHECK(g.size() == 1);
  CHECK((f - f).empty());
  CHECK((f + f).at(a) == Complex(4.0, 2.0));
  CHECK(f.l1_norm() == doctest::Approx(std::sqrt(5.0)));
  CHECK(f.conjugated().at(a) == Complex(2.0, -1.0));
  CHECK_THROWS_AS(f.check_group(*Group::free_abelian(3)), std::invalid_argument);
}

TEST_CASE("random vectors stay in the ball and are reproducible") {
  const auto ball = Group::free_abelian(2)->ball(3);
  std::mt19937_64 r1(5);
  std::mt19937_64 r2(5);
  std::mt19937_64 r3(6);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_vector(ball, r1);
    const auto g = random_vector(ball, r2);
    CHECK(f.entries() == g.entries());
    CHECK_FALSE(f.empty());
    for (const auto& [e, a] : f) {
      CHECK(std::binary_search(ball.begin(), ball.end(), e));
      CHECK(a.real() >= 0.0);
      CHECK(a.real() < 1.0);
    }
    for (const auto& [e, a] : random_positive_vector(ball, r3)) {
      CHECK(a.imag() == 0.0);
      CHECK(a.real() > 0.0);
    }
  }
}

TEST_CASE("closed-form norms for x^2/2") {
  const auto pair = catalog_pair("pnorm:2");
  const auto f = OrliczVector::from_entries({{Element{0, 0}, 3.0}, {Element{1, 0}, 4.0}});
  CHECK(luxemburg_norm(pair.phi, f) == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(orlicz_norm(pair, f) == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-8));
  const auto d = OrliczVector::delta(Element{2, 1});
  CHECK(luxemburg_norm(pair.phi, d) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(orlicz_norm(pair, d) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  CHECK(luxemburg_norm(pair.phi, OrliczVector{}) == 0.0);
  CHECK(orlicz_norm(pair, OrliczVector{}) == 0.0);
}

TEST_CASE("pnorm closed forms on random vectors") {
  for (double p : {1.5, 3.0}) {
    const double q = p / (p - 1.0);
    const auto pair = catalog_pair("pnorm:" + std::to_string(p).substr(0, 3));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto f = sample(seed);
      CHECK(luxemburg_norm(pair.phi, f) ==
            doctest::Approx(std::pow(p, -1.0 / p) * lp(f, p)).epsilon(1e-9));
      CHECK(orlicz_norm(pair, f) == doctest::Approx(std::pow(q, 1.0 / q) * lp(f, p)).epsilon(1e-7));
    }
  }
}

TEST_CASE("expm modular") {
  const auto phi = catalog_function("expm");
  CHECK(modular(phi, OrliczVector::delta(Element{0}, 1.0)) == doctest::Approx(std::exp(1.0) - 2.0));
  CHECK(std::isinf(modular(phi, OrliczVector::delta(Element{0}, 1000.0))));
}

TEST_CASE("norm properties on every catalog pair") {
  for (const auto& name : catalog_pair_names()) {
    const auto pair = catalog_pair(name);
    INFO(name);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto f = sample(seed);
      const auto g = sample(seed + 100);
      const auto detail = orlicz_norm_detailed(pair, f);
      const double lux = luxemburg_norm(pair.phi, f);
      CHECK(detail.cross_checked);
      CHECK(detail.agreement <= 1e-5);
      CHECK(lux <= detail.value * (1.0 + 1e-9));
      CHECK(detail.value <= 2.0 * lux * (1.0 + 1e-9));
      CHECK(modular(pair.phi, f.scaled(1.0 / lux)) == doctest::Approx(1.0).epsilon(1e-9));

      const Complex c(-2.5, 1.0);
      CHECK(orlicz_norm(pair, f.scaled(c)) ==
            doctest::Approx(std::abs(c) * detail.value).epsilon(1e-7));
      CHECK(orlicz_norm(pair, f + g) <=
            (detail.value + orlicz_norm(pair, g)) * (1.0 + 1e-7));
      CHECK(holder_gap(pair, f, g) >= -1e-9);

      std::mt19937_64 rng(seed);
      CHECK(dual_sampling_bound(pair, f, 200, rng) <= detail.value * (1.0 + 1e-9));

      const auto v = norming_vector(pair, f);
      CHECK(modular(pair.psi, v) == doctest::Approx(1.0).epsilon(1e-7));
      Complex paired = 0.0;
      for (const auto& [e, a] : f) paired += a * v.at(e);
      CHECK(paired.real() == doctest::Approx(detail.value).epsilon(1e-7));
      CHECK(std::fabs(paired.imag()) <= 1e-9 * detail.value);
    }
  }
}

TEST_CASE("routes disagreeing is impossible without psi derivative") {
  const auto pair = catalog_pair("cosh");
  ComplementaryPair bare{pair.phi, pair.psi.without_derivative(), pair.mode};
  const auto f = sample(3);
  const auto detail = orlicz_norm_detailed(bare, f);
  CHECK_FALSE(detail.cross_checked);
  CHECK(detail.value == doctest::Approx(orlicz_norm(pair, f)).epsilon(1e-6));
  CHECK_THROWS_AS(norming_vector(bare, f), norm_error);
}

TEST_CASE("weighted norms") {
  const auto z2 = Group::free_abelian(2);
  const auto pair = catalog_pair("pnorm:2");
  const auto d = OrliczVector::delta(z2->element({2, 1}));
  CHECK(weighted_norm(pair, Weight::polynomial(z2, 1.0), d) ==
        doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-8));
  CHECK(weighted_norm(pair, Weight::polynomial(z2, 1.0), d, NormKind::luxemburg) ==
        doctest::Approx(4.0 * std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("membership diagnostic on Z^2") {
  const auto z2 = Group::free_abelian(2);
  const auto psi = catalog_pair("pnorm:2").psi;
  const std::vector<double> alphas{1.0};
  const std::vector<int> radii{8, 16, 32};
  const auto conv = membership_diagnostic(
      psi, *z2, [&](const Element& s) { return std::pow(1.0 + z2->word_length(s), -2.0); },
      alphas, radii);
  CHECK(conv[0].verdict == "converging");
  CHECK(conv[0].partial_sums.size() == 3);
  CHECK(conv[0].partial_sums[0] < conv[0].partial_sums[2]);
  const auto div = membership_diagnostic(
      psi, *z2, [&](const Element& s) { return std::pow(1.0 + z2->word_length(s), -0.4); },
      alphas, radii);
  CHECK(div[0].verdict == "diverging");
}
