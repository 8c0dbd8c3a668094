#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <queue>

#include "orlicz/group.hpp"
#include "orlicz/weight.hpp"

using namespace orlicz;

namespace {

using H = std::array<long, 3>;

H h_mul(const H& x, const H& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
}

// Oracle: plain breadth-first search on H3 with its own group law.
std::map<H, int> h_bfs(int radius) {
  const std::array<H, 4> gens{H{1, 0, 0}, H{-1, 0, 0}, H{0, 1, 0}, H{0, -1, 0}};
  std::map<H, int> dist{{H{0, 0, 0}, 0}};
  std::queue<H> q;
  q.push(H{0, 0, 0});
  while (!q.empty()) {
    const H x = q.front();
    q.pop();
    if (dist[x] == radius) continue;
    for (const H& g : gens) {
      const H y = h_mul(x, g);
      if (dist.emplace(y, dist[x] + 1).second) q.push(y);
    }
  }
  return dist;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Z^d arithmetic and word length") {
  const auto z3 = Group::free_abelian(3);
  const Element a = z3->element({1, -2, 3});
  const Element b = z3->element({4, 0, -1});
  CHECK(z3->multiply(a, b) == z3->element({5, -2, 2}));
  CHECK(z3->invert(a) == z3->element({-1, 2, -3}));
  CHECK(z3->word_length(a) == 6);
  CHECK(z3->word_length_bfs(a) == 6);
  CHECK(z3->word_length(z3->identity()) == 0);
  CHECK_THROWS_AS(z3->element({1, 2}), std::invalid_argument);
}

TEST_CASE("Z^d ball sizes match the lattice count") {
  for (int d = 1; d <= 4; ++d) {
    const auto g = Group::free_abelian(d);
    const auto sizes = g->ball_sizes(6);
    for (int n = 0; n <= 6; ++n) {
      double expected = 0.0;
      for (int k = 0; k <= d; ++k) expected += std::pow(2.0, k) * binom(d, k) * binom(n, k);
      INFO("d=" << d << " n=" << n);
      CHECK(sizes[n] == static_cast<std::size_t>(expected));
    }
  }
  const auto z2 = Group::free_abelian(2);
  for (int n = 0; n <= 10; ++n) {
    CHECK(z2->ball(n).size() == static_cast<std::size_t>(2 * n * n + 2 * n + 1));
  }
}

TEST_CASE("Heisenberg law and inverse") {
  const auto h = Group::heisenberg();
  const Element x = h->element({1, 2, 3});
  const Element y = h->element({-4, 5, 6});
  CHECK(h->multiply(x, y) == h->element({-3, 7, 14}));
  CHECK(h->multiply(x, h->invert(x)) == h->identity());
  CHECK(h->multiply(h->invert(x), x) == h->identity());
  const Element a = h->element({1, 0, 0});
  const Element b = h->element({0, 1, 0});
  // Commutator of the generators is the central element.
  const Element comm = h->multiply(h->multiply(a, b), h->multiply(h->invert(a), h->invert(b)));
  CHECK(comm == h->element({0, 0, 1}));
  CHECK_FALSE(h->is_abelian());
}

TEST_CASE("Heisenberg word lengths match an independent BFS") {
  const auto h = Group::heisenberg();
  const auto oracle = h_bfs(8);
  for (const auto& [x, d] : oracle) {
    CHECK(h->word_length(h->element({x[0], x[1], x[2]})) == d);
  }
  const auto sizes = h->ball_sizes(8);
  for (int r = 0; r <= 8; ++r) {
    std::size_t count = 0;
    for (const auto& [x, d] : oracle) count += d <= r ? 1 : 0;
    CHECK(sizes[r] == count);
  }
  CHECK(h->word_length(h->element({0, 0, 1})) == 4);
  const std::vector<std::size_t> frozen{1, 5, 17, 53, 135, 299, 593, 1069, 1793};
  CHECK(sizes == frozen);
}

TEST_CASE("cyclic groups") {
  const auto c = Group::cyclic(7);
  CHECK(c->element({9}) == c->element({2}));
  CHECK(c->element({-1}) == c->element({6}));
  CHECK(c->word_length(c->element({5})) == 2);
  CHECK(c->word_length_bfs(c->element({5})) == 2);
  CHECK(c->ball(10).size() == 7);
  CHECK(c->ball(2).size() == 5);
  CHECK(c->is_finite());
  CHECK_THROWS(Group::cyclic(1));
}

TEST_CASE("custom generators use the breadth-first table") {
  // Z with generators +-2, +-3.
  const auto g = Group::with_generators(
      GroupKind::free_abelian, 1,
      {Element{2}, Element{-2}, Element{3}, Element{-3}});
  CHECK_FALSE(g->has_standard_generators());
  CHECK(g->word_length(Element{1}) == 2);
  CHECK(g->word_length(Element{6}) == 2);
  CHECK(g->word_length(Element{7}) == 3);
}

TEST_CASE("radius cap is reported") {
  const auto g = Group::with_generators(
      GroupKind::free_abelian, 3,
      {Element{1, 0, 0}, Element{-1, 0, 0}, Element{0, 1, 0}, Element{0, -1, 0},
       Element{0, 0, 1}, Element{0, 0, -1}},
      1000);
  try {
    g->ball(20);
    FAIL("expected radius_cap_error");
  } catch (const radius_cap_error& e) {
    CHECK(e.cap() == 1000);
    CHECK(e.enumerated() > 1000);
  }
}

TEST_CASE("growth order estimates") {
  for (int d = 1; d <= 3; ++d) {
    const auto est = growth_order_estimate(*Group::free_abelian(d), 20);
    CHECK(std::fabs(est.d_hat - d) <= 0.1 * d);
    CHECK(est.c1 > 0.0);
    CHECK(est.c1 <= est.c2);
  }
  const auto h = growth_order_estimate(*Group::heisenberg(), 10);
  CHECK(std::fabs(h.d_hat - 4.0) <= 0.4);
}

TEST_CASE("weight values") {
  const auto z2 = Group::free_abelian(2);
  const Element s = z2->element({2, 1});
  CHECK(Weight::polynomial(z2, 1.0)(s) == doctest::Approx(4.0));
  CHECK(Weight::polynomial(z2, 2.5)(s) == doctest::Approx(std::pow(4.0, 2.5)));
  CHECK(Weight::subexp_alpha(z2, 0.5, 1.0)(s) == doctest::Approx(std::exp(std::sqrt(3.0))));
  CHECK(Weight::subexp_log(z2, 1.0, 1.0)(s) == doctest::Approx(std::exp(3.0 / std::log(4.0))));
  CHECK(Weight::trivial(z2)(s) == 1.0);
  for (const auto& w : {Weight::polynomial(z2, 1.0), Weight::subexp_alpha(z2, 0.5, 1.0),
                        Weight::subexp_log(z2, 1.0, 2.0)}) {
    CHECK(w(z2->identity()) == 1.0);
  }
  const auto prod = Weight::product(Weight::polynomial(z2, 1.0), Weight::subexp_alpha(z2, 0.5, 1.0));
  CHECK(prod(s) == doctest::Approx(4.0 * std::exp(std::sqrt(3.0))));
  CHECK_THROWS_AS(Weight::subexp_alpha(z2, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Weight::polynomial(z2, -1.0), std::invalid_argument);
}

TEST_CASE("weight axioms on balls") {
  const auto z2 = Group::free_abelian(2);
  for (const auto& w : {Weight::polynomial(z2, 1.0), Weight::polynomial(z2, 3.0),
                        Weight::subexp_alpha(z2, 0.5, 1.0), Weight::subexp_log(z2, 1.0, 1.0)}) {
    const auto r = weight_axioms_report(w, 4);
    INFO(w.describe());
    CHECK(r.identity_ok);
    CHECK(r.inverse_bounded);
    CHECK(r.inverse_sup <= 1.0);
    CHECK(std::isfinite(r.submult_sup));
  }
  // Polynomial weights are submultiplicative.
  CHECK(weight_axioms_report(Weight::polynomial(z2, 2.0), 4).submult_sup <= 1.0 + 1e-12);
}
