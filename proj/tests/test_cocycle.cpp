#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/cocycle.hpp"

using namespace orlicz;

namespace {

// Oracle: direct triple loop of the cocycle identity on a ball.
double naive_identity_residual(const Cocycle& om, int radius) {
  const auto& g = *om.group();
  const auto ball = g.ball(radius);
  double worst = 0.0;
  for (const auto& r : ball) {
    for (const auto& s : ball) {
      for (const auto& t : ball) {
        const Complex lhs = om(r, s) * om(g.multiply(r, s), t);
        const Complex rhs = om(s, t) * om(r, g.multiply(s, t));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("coboundary values") {
  const auto z2 = Group::free_abelian(2);
  const auto om = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const Element e1 = z2->element({1, 0});
  CHECK(om(e1, e1).real() == doctest::Approx(3.0 / 4.0));
  CHECK(om(e1, e1).imag() == 0.0);
  CHECK(om(e1, z2->invert(e1)).real() == doctest::Approx(1.0 / 4.0));
  CHECK(om(z2->identity(), e1) == Complex(1.0));
}

TEST_CASE("bilinear phase values") {
  const auto z2 = Group::free_abelian(2);
  const auto om = Cocycle::bilinear_phase(z2, {{0, 0}, {1, 0}}, 0.7);
  const Element x = z2->element({2, 3});
  const Element y = z2->element({5, -1});
  // x^T B y = x_2 y_1 = 15.
  CHECK(std::abs(om(x, y) - std::polar(1.0, 0.7 * 15.0)) <= 1e-12);
  CHECK(std::abs(om(y, x) - std::polar(1.0, 0.7 * -2.0)) <= 1e-12);
  CHECK_THROWS_AS(Cocycle::bilinear_phase(Group::heisenberg(), {{1}}, 0.7), cocycle_error);
  CHECK_THROWS_AS(Cocycle::bilinear_phase(z2, {{1}}, 0.7), cocycle_error);
  const auto c5 = Group::cyclic(5);
  CHECK_NOTHROW(Cocycle::bilinear_phase(c5, {{1}}, 2.0 * std::numbers::pi / 5.0));
  CHECK_THROWS_AS(Cocycle::bilinear_phase(c5, {{1}}, 0.7), cocycle_error);
}

TEST_CASE("catalog cocycles satisfy the identity and normalization") {
  for (const auto& g : {Group::free_abelian(1), Group::free_abelian(2), Group::heisenberg(),
                        Group::cyclic(5)}) {
    for (const auto& om : cocycle_catalog(g)) {
      INFO(g->name() << " " << om.describe());
      const double fast = cocycle_identity_residual(om, 2);
      CHECK(fast <= 1e-12);
      CHECK(fast == doctest::Approx(naive_identity_residual(om, 2)).epsilon(1e-9));
      CHECK(normalization_residual(om, 3) <= 1e-12);
    }
  }
}

TEST_CASE("perturbed cocycle breaks the identity") {
  const auto z2 = Group::free_abelian(2);
  const auto base = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const auto bad = Cocycle::perturbed(base, z2->element({1, 0}), z2->element({0, 1}), 1.5);
  CHECK(bad(z2->element({1, 0}), z2->element({0, 1})) ==
        base(z2->element({1, 0}), z2->element({0, 1})) * 1.5);
  CHECK(cocycle_identity_residual(bad, 2) > 1e-2);
  CHECK(naive_identity_residual(bad, 2) == doctest::Approx(cocycle_identity_residual(bad, 2)));
}

TEST_CASE("product of cocycles") {
  const auto z2 = Group::free_abelian(2);
  const auto a = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const auto b = Cocycle::bilinear_phase(z2, {{0, 0}, {1, 0}}, 0.7);
  const auto p = Cocycle::product(a, b);
  const Element s = z2->element({1, 2});
  const Element t = z2->element({3, -1});
  CHECK(std::abs(p(s, t) - a(s, t) * b(s, t)) <= 1e-15);
  CHECK(cocycle_identity_residual(p, 2) <= 1e-12);
}

TEST_CASE("polar decomposition") {
  const auto z2 = Group::free_abelian(2);
  const auto om = Cocycle::product(Cocycle::coboundary(Weight::polynomial(z2, 2.0)),
                                   Cocycle::bilinear_phase(z2, {{0, 0}, {1, 0}}, 0.7));
  const auto polar = polar_decompose(om);
  for (const auto& s : z2->ball(2)) {
    for (const auto& t : z2->ball(2)) {
      CHECK(std::abs(polar.modulus(s, t) * polar.phase(s, t) - om(s, t)) <= 1e-14);
      CHECK(std::abs(std::abs(polar.phase(s, t)) - 1.0) <= 1e-14);
      CHECK(polar.modulus(s, t).imag() == 0.0);
    }
  }
  CHECK(cocycle_identity_residual(polar.modulus, 2) <= 1e-12);
  CHECK(cocycle_identity_residual(polar.phase, 2) <= 1e-12);
  const auto zero = Cocycle::custom(z2, [](const Element&, const Element&) { return Complex(0.0); },
                                    "zero");
  CHECK_THROWS_AS(polar_decompose(zero).phase(z2->element({1, 0}), z2->element({1, 0})),
                  cocycle_error);
}

TEST_CASE("decomposition witnesses") {
  const auto z2 = Group::free_abelian(2);
  for (const auto& w : {Weight::trivial(z2), Weight::polynomial(z2, 1.0), Weight::polynomial(z2, 3.0),
                        Weight::subexp_alpha(z2, 0.5, 1.0), Weight::subexp_log(z2, 1.0, 1.0)}) {
    const auto om = Cocycle::coboundary(w);
    const auto wit = decomposition_witness(om, 4);
    INFO(w.describe());
    CHECK(wit.max_violation <= 0.0);
    CHECK(wit.verified_radius == 4);
    // Independent check of the bound on every pair.
    for (const auto& s : z2->ball(4)) {
      for (const auto& t : z2->ball(4)) {
        CHECK(std::abs(om(s, t)) <= wit.u(s) + wit.v(t) + 1e-12);
      }
    }
  }
  const auto om = Cocycle::coboundary(Weight::polynomial(z2, 1.0));
  const ElementFn tiny = [](const Element&) { return 0.01; };
  try {
    decomposition_witness(om, tiny, tiny, 3);
    FAIL("expected witness_error");
  } catch (const witness_error& e) {
    CHECK(e.max_violation() > 0.0);
    CHECK(std::abs(om(e.worst_s(), e.worst_t())) - 0.02 == doctest::Approx(e.max_violation()));
  }
}
