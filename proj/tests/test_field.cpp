#include <gtest/gtest.h>

#include <cmath>

#include "realdirac/field.hpp"
#include "test_util.hpp"

using namespace realdirac;

namespace {

// Central finite difference of a field at x.
Multivector numeric_partial(const FieldExpr& f, int mu, std::array<double, 4> x) {
  const double h = 1e-5;
  auto xp = x, xm = x;
  xp[static_cast<std::size_t>(mu)] += h;
  xm[static_cast<std::size_t>(mu)] -= h;
  return (f.evaluate(xp) - f.evaluate(xm)) / (2 * h);
}

FieldExpr sample_field(testutil::Rng& rng) {
  const FieldExpr t = FieldExpr::coordinate(0), x1 = FieldExpr::coordinate(1), x3 = FieldExpr::coordinate(3);
  Wavevector k;
  k.k = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return FieldExpr::constant(rng.multivector()) + (t * x1) * rng.multivector() +
         x3 * FieldExpr::plane_wave(k, rng.multivector()) + FieldExpr::plane_wave(k, rng.multivector()) * (x1 * x1);
}

}  // namespace

TEST(FieldExpr, CoordinatesAndConstants) {
  const std::array<double, 4> x{1.5, -2.0, 0.25, 3.0};
  for (int mu = 0; mu < 4; ++mu)
    EXPECT_EQ(FieldExpr::coordinate(mu).evaluate(x), Multivector(x[static_cast<std::size_t>(mu)]));
  EXPECT_EQ(FieldExpr::constant(e(2)).evaluate(x), e(2));
  EXPECT_THROW(FieldExpr::coordinate(4), std::invalid_argument);
  EXPECT_TRUE(FieldExpr().is_zero());
  EXPECT_EQ((FieldExpr::coordinate(1) - FieldExpr::coordinate(1)).size(), 0u);
}

TEST(FieldExpr, PartialsMatchFiniteDifferences) {
  testutil::Rng rng(61);
  for (int n = 0; n < 10; ++n) {
    const FieldExpr f = sample_field(rng);
    const std::array<double, 4> x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (int mu = 0; mu < 4; ++mu) EXPECT_LE(distance(f.partial(mu).evaluate(x), numeric_partial(f, mu, x)), 1e-7);
  }
}

TEST(FieldExpr, ProductIsPointwise) {
  testutil::Rng rng(62);
  const FieldExpr a = sample_field(rng), b = sample_field(rng);
  const std::array<double, 4> x{0.3, -0.7, 0.1, 0.9};
  EXPECT_LE(distance((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x)), 1e-11);
  const Multivector m = rng.multivector();
  EXPECT_LE(distance((m * a).evaluate(x), m * a.evaluate(x)), 1e-12);
  EXPECT_LE(distance((a * m).evaluate(x), a.evaluate(x) * m), 1e-12);
}

TEST(FieldExpr, LeibnizRuleExactly) {
  testutil::Rng rng(63);
  const FieldExpr a = sample_field(rng), b = sample_field(rng);
  for (int mu = 0; mu < 4; ++mu)
    EXPECT_LE(((a * b).partial(mu) - (a.partial(mu) * b + a * b.partial(mu))).max_abs(), 1e-12);
}

TEST(FieldExpr, PlaneWaveDerivativePullsDownPhase) {
  Wavevector k;
  k.k = {2.0, 0.0, -1.0, 0.0};
  const FieldExpr w = FieldExpr::plane_wave(k, e(0));
  EXPECT_EQ(w.partial(0).coefficient(k, {}), 2.0 * (pseudoscalar() * e(0)));
  EXPECT_TRUE(w.partial(1).is_zero());
  EXPECT_EQ(w.partial(0).partial(0).coefficient(k, {}), -4.0 * e(0));
}

TEST(FieldExpr, ConjugationsArePointwise) {
  testutil::Rng rng(64);
  const FieldExpr f = sample_field(rng);
  const std::array<double, 4> x{-0.2, 0.4, 0.6, -1.0};
  EXPECT_LE(distance(hermite(f).evaluate(x), hermite(f.evaluate(x))), 1e-12);
  for (int w : kLabels) EXPECT_LE(distance(k_conj(f, w).evaluate(x), k_conj(f.evaluate(x), w)), 1e-12);
}

TEST(FieldExpr, NablaAndDivergence) {
  // nabla of x^1 x^1 is 2 x^1 e^1.
  const FieldExpr x1 = FieldExpr::coordinate(1);
  const FieldExpr g = nabla(x1 * x1);
  EXPECT_EQ(g.coefficient({}, Monomial{{0, 1, 0, 0}}), 2.0 * e(1));
  const FieldExpr t = FieldExpr::coordinate(0);
  EXPECT_EQ(divergence({t, x1, FieldExpr(), FieldExpr()}).evaluate({0, 0, 0, 0}), Multivector(2.0));
}

TEST(FieldExpr, MapCoeffsProjectsGrades) {
  const FieldExpr f = FieldExpr::constant(Multivector(1.0) + e(1)) * FieldExpr::coordinate(2);
  const FieldExpr g = f.map_coeffs([](const Multivector& m) { return grade_project(m, 1); });
  EXPECT_EQ(g.coefficient({}, Monomial{{0, 0, 1, 0}}), e(1));
  EXPECT_EQ(g.size(), 1u);
}
