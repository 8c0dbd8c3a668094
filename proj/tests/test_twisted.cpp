#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "orlicz/twisted.hpp"

using namespace orlicz;

namespace {

// Oracle: naive double loop over supports, accumulated in a std::map.
OrliczVector naive_twisted(const Cocycle& om, const OrliczVector& f, const OrliczVector& g) {
  const auto& G = *om.group();
  std::map<Element, Complex> acc;
  for (const auto& [s, a] : f) {
    for (const auto& [r, b] : g) acc[G.multiply(s, r)] += a * b * om(s, r);
  }
  std::vector<OrliczVector::Entry> out(acc.begin(), acc.end());
  return OrliczVector::from_entries(out);
}

OrliczVector naive_left(const Cocycle& om, const OrliczVector& g, const OrliczVector& h) {
  const auto& G = *om.group();
  std::map<Element, Complex> acc;
  for (const auto& [t, a] : g) {
    for (const auto& [x, b] : h) {
      const Element s = G.multiply(x, G.invert(t));
      acc[s] += a * b * om(s, t);
    }
  }
  std::vector<OrliczVector::Entry> out(acc.begin(), acc.end());
  return OrliczVector::from_entries(out);
}

struct Fixture {
  GroupPtr group;
  std::vector<Element> ball;
  std::mt19937_64 rng{11};
  explicit Fixture(GroupPtr g, int radius = 3) : group(std::move(g)), ball(group->ball(radius)) {}
  OrliczVector next() { return random_vector(ball, rng); }
};

}  // namespace

TEST_CASE("Z/2 with the sign cocycle") {
  const auto c2 = Group::cyclic(2);
  const auto om = Cocycle::custom(
      c2, [](const Element& s, const Element& t) { return s[0] == 1 && t[0] == 1 ? Complex(-1.0) : Complex(1.0); },
      "sign");
  const auto one = OrliczVector::delta(c2->element({1}));
  const auto zero = OrliczVector::delta(c2->element({0}));
  const auto sq = twisted_convolve(om, one, one);
  CHECK(sq.at(c2->element({0})) == Complex(-1.0));
  const auto left = module_action_left(om, one, zero);
  CHECK(left.size() == 1);
  CHECK(left.at(c2->element({1})) == Complex(-1.0));
  CHECK(module_action_right(om, zero, one).at(c2->element({1})) == Complex(-1.0));
}

TEST_CASE("twisted convolution matches the naive sum") {
  for (const auto& g : {Group::free_abelian(2), Group::heisenberg(), Group::cyclic(5)}) {
    Fixture fx(g);
    for (const auto& om : cocycle_catalog(g)) {
      for (int i = 0; i < 5; ++i) {
        const auto f = fx.next();
        const auto h = fx.next();
        INFO(g->name() << " " << om.describe());
        CHECK(twisted_convolve(om, f, h).max_distance(naive_twisted(om, f, h)) <= 1e-12);
        CHECK(module_action_left(om, f, h).max_distance(naive_left(om, f, h)) <= 1e-12);
      }
    }
    CHECK(convolve(*g, fx.next(), OrliczVector{}).empty());
  }
}

TEST_CASE("algebra identities on catalog cocycles") {
  for (const auto& g : {Group::free_abelian(2), Group::heisenberg()}) {
    Fixture fx(g, 2);
    for (const auto& om : cocycle_catalog(g)) {
      INFO(g->name() << " " << om.describe());
      const auto f = fx.next();
      const auto a = fx.next();
      const auto h = fx.next();
      CHECK(associativity_residual(om, f, a, h) <= 1e-10);
      CHECK(duality_residual(om, f, a, h) <= 1e-10);
      CHECK(l1_bound_gap(om, f, a) >= -1e-12);
      const auto unit = unit_check(om, 2, 10, 3);
      CHECK(unit.left_residual <= 1e-14);
      CHECK(unit.right_residual <= 1e-14);
    }
  }
}

TEST_CASE("broken cocycle loses associativity") {
  const auto z2 = Group::free_abelian(2);
  const Element a = z2->element({1, 0});
  const Element b = z2->element({0, 1});
  const auto om = Cocycle::perturbed(Cocycle::trivial(z2), a, b, 2.0);
  const auto da = OrliczVector::delta(a);
  const auto db = OrliczVector::delta(b);
  const auto dc = OrliczVector::delta(z2->element({1, 1}));
  CHECK(associativity_residual(om, da, db, dc) > 0.5);
}

TEST_CASE("lambda transform intertwines coboundary and plain convolution") {
  const auto z2 = Group::free_abelian(2);
  Fixture fx(z2);
  const auto w = Weight::polynomial(z2, 2.0);
  const auto om = Cocycle::coboundary(w);
  const auto pair = catalog_pair("xlog");
  for (int i = 0; i < 5; ++i) {
    const auto f = fx.next();
    const auto g = fx.next();
    const auto lhs = lambda_transform(w, twisted_convolve(om, f, g));
    const auto rhs = convolve(*z2, lambda_transform(w, f), lambda_transform(w, g));
    CHECK(lhs.max_distance(rhs) <= 1e-12 * std::max(1.0, lhs.sup_abs()));
    CHECK(inverse_lambda_transform(w, lambda_transform(w, f)).max_distance(f) <= 1e-14);
    CHECK(weighted_norm(pair, w, lambda_transform(w, f)) ==
          doctest::Approx(orlicz_norm(pair, f)).epsilon(1e-9));
    const auto untwisted = convolve(*z2, f, g);
    CHECK(std::abs(augmentation(untwisted) - augmentation(f) * augmentation(g)) <= 1e-12 * untwisted.l1_norm());
  }
}

TEST_CASE("splitting identity with the derived witness") {
  const auto z2 = Group::free_abelian(2);
  Fixture fx(z2, 2);
  const auto om = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const auto wit = decomposition_witness(om, 4);
  const auto factors = split_factors(om, wit.u, wit.v);
  for (int i = 0; i < 5; ++i) {
    const auto f = fx.next();
    const auto g = fx.next();
    const auto h = fx.next();
    CHECK(splitting_residual(om, factors, f, g, h) <= 1e-10);
    // zeta with L = Omega and u = v = 1/2 reproduces the twisted product.
    const Kernel kernel = [&](const Element& s, const Element& t) { return om(s, t); };
    CHECK(zeta(*z2, kernel, f, g).max_distance(twisted_convolve(om, f, g)) <= 1e-12);
    CHECK(xi(*z2, kernel, g, h).max_distance(module_action_left(om, g, h)) <= 1e-12);
  }
  const ElementFn small = [](const Element&) { return 0.1; };
  CHECK_THROWS_AS(splitting_residual(om, split_factors(om, small, small), fx.next(), fx.next(),
                                     fx.next()),
                  split_precondition_error);
}

TEST_CASE("submultiplicativity probe") {
  const auto z2 = Group::free_abelian(2);
  const auto om = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const auto pair = catalog_pair("pnorm:2");
  const SampleSpec spec{{2, 3}, 20, 42};
  const auto probe = submultiplicativity_probe(pair, om, spec);
  REQUIRE(probe.size() == 2);
  for (const auto& r : probe) {
    CHECK(std::isfinite(r.c_hat));
    CHECK(r.c_hat > 0.0);
    CHECK(r.pairs == r.ratios.size());
  }
  // Ball of radius 2 has 13 elements, so all 169 delta pairs are included.
  CHECK(probe[0].pairs == 20 + 169);
  const auto again = submultiplicativity_probe(pair, om, spec);
  CHECK(again[0].ratios == probe[0].ratios);
  const auto d = OrliczVector::delta(z2->element({1, 0}));
  CHECK(algebra_ratio(pair, om, d, d) ==
        doctest::Approx(std::abs(om(z2->element({1, 0}), z2->element({1, 0}))) / std::sqrt(2.0)));
}
