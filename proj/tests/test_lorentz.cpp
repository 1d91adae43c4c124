#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "realdirac/lorentz.hpp"
#include "realdirac/regular_rep.hpp"
#include "test_util.hpp"

using namespace realdirac;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Rotor, ClosedFormAndDoubleCover) {
  EXPECT_EQ(rotor(2, 0.0).S, Multivector(1.0));
  const double t = 0.7;
  EXPECT_LE(distance(rotor(2, t).S, Multivector(std::cos(t / 2)) - std::sin(t / 2) * (pseudoscalar() * sigma(2))), 1e-15);
  EXPECT_LE(distance(rotor(3, 2 * pi).S, Multivector(-1.0)), 1e-15);
  EXPECT_LE(distance(rotor(1, 4 * pi).S, Multivector(1.0)), 1e-15);
}

TEST(Boost, ClosedFormAndSandwich) {
  EXPECT_EQ(boost(1, 0.0).S, Multivector(1.0));
  const double a = std::atanh(0.6);
  EXPECT_LE(distance(boost(1, a).S, Multivector(std::cosh(a / 2)) + std::sinh(a / 2) * x_vec(1)), 1e-15);
  EXPECT_LE(distance(frame_transform(boost(1, a), e(0)), 1.25 * e(0) + 0.75 * e(1)), 1e-12);
  EXPECT_LE(distance(frame_transform(boost(1, a), e(1)), 0.75 * e(0) + 1.25 * e(1)), 1e-12);
  EXPECT_LE(distance(frame_transform(boost(1, a), e(2)), e(2)), 1e-15);
}

TEST(Boost, MatchesMatrixExponential) {
  const double a = 0.9;
  const RepMatrix L = matrix_exp(left_rep((a / 2) * x_vec(2)));
  EXPECT_LE(distance(from_vector(L.col(0)), boost(2, a).S), 1e-12);
}

TEST(FrameTransform, QuarterTurnAboutThree) {
  // Counterclockwise in the (1, 2) plane: e^1 -> e^2, e^2 -> -e^1.
  EXPECT_LE(distance(frame_transform(rotor(3, pi / 2), e(1)), e(2)), 1e-15);
  EXPECT_LE(distance(frame_transform(rotor(3, pi / 2), e(2)), -1.0 * e(1)), 1e-15);
  EXPECT_LE(distance(frame_transform(rotor(3, pi / 2), e(3)), e(3)), 1e-15);
}

TEST(FrameTransform, PseudoscalarAndE5Invariant) {
  testutil::Rng rng(31);
  for (int n = 0; n < 50; ++n) {
    const LorentzOp S = rng.lorentz();
    EXPECT_LE(distance(frame_transform(S, pseudoscalar()), pseudoscalar()), 1e-11);
    EXPECT_LE(distance(frame_transform(S, e(5)), e(5)), 1e-11);
    EXPECT_LE(distance(S.S * reverse(S.S), Multivector(1.0)), 1e-11);
  }
}

TEST(FrameTransform, VectorsStayVectors) {
  testutil::Rng rng(32);
  for (int n = 0; n < 50; ++n) {
    const LorentzOp S = rng.lorentz();
    for (int mu = 0; mu < 4; ++mu) {
      const Multivector v = frame_transform(S, e(mu));
      EXPECT_LE(distance(v, grade_project(v, 1)), 1e-11);
      EXPECT_LE(std::abs(v[Blade::of({5})]), 1e-11);
    }
  }
}

TEST(MetricPreservation, FixedAndRandom) {
  EXPECT_TRUE(metric_preservation_check(LorentzOp{}).passed);
  EXPECT_EQ(metric_preservation_check(LorentzOp{}).max_residual, 0.0);
  EXPECT_TRUE(metric_preservation_check(boost(1, 0.3) * rotor(2, 0.7)).passed);
  EXPECT_TRUE(metric_preservation_check(rotor(1, pi)).passed);
  testutil::Rng rng(33);
  for (int n = 0; n < 100; ++n) EXPECT_TRUE(metric_preservation_check(rng.lorentz()).passed);
  const auto gram = metric_preservation_check(boost(3, 1.1)).gram;
  EXPECT_NEAR(gram[0][0], 1.0, 1e-12);
  EXPECT_NEAR(gram[3][3], -1.0, 1e-12);
}

TEST(MetricPreservation, NonLorentzElementFails) {
  // A pure scalar 2 scales the metric by 4.
  const auto r = metric_preservation_check(LorentzOp(Multivector(2.0)));
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.max_residual, 15.0, 1e-12);
}

TEST(Generators, NamedBrackets) {
  EXPECT_EQ(commutator(rotation_generator(1), rotation_generator(2)), rotation_generator(3));
  EXPECT_EQ(commutator(boost_generator(1), boost_generator(2)), -1.0 * rotation_generator(3));
  EXPECT_EQ(commutator(rotation_generator(1), boost_generator(1)), Multivector());
  EXPECT_EQ(commutator(rotation_generator(1), boost_generator(2)), boost_generator(3));
  EXPECT_THROW(rotation_generator(0), std::invalid_argument);
  EXPECT_THROW(boost(4, 1.0), std::invalid_argument);
}

TEST(Generators, So31TableExact) {
  const auto t = so31_table_check();
  EXPECT_EQ(t.entries.size(), 27u);
  EXPECT_EQ(t.max_residual(), 0.0);
}

TEST(Su2Split, Brackets) {
  const auto [p1, m1] = su2_split(1);
  const auto [p2, m2] = su2_split(2);
  const auto [p3, m3] = su2_split(3);
  EXPECT_EQ(commutator(p1, p2), p3);
  EXPECT_EQ(commutator(m1, m2), m3);
  EXPECT_EQ(commutator(p1, m2), Multivector());
  EXPECT_EQ(parity_conj(p3), m3);
  EXPECT_EQ(p1 + m1, rotation_generator(1));
  const auto t = su2_table_check();
  EXPECT_EQ(t.entries.size(), 33u);
  EXPECT_EQ(t.max_residual(), 0.0);
}

TEST(LorentzExp, ComposesWithInverse) {
  testutil::Rng rng(34);
  const LorentzOp S = rng.lorentz();
  EXPECT_LE(distance((S * S.inverse()).S, Multivector(1.0)), 1e-11);
  const LorentzOp r = lorentz_exp({0, 0, 0.8}, {0, 0, 0});
  EXPECT_LE(distance(r.S, rotor(3, 0.8).S), 1e-12);
  const LorentzOp b = lorentz_exp({0, 0, 0}, {0.4, 0, 0});
  EXPECT_LE(distance(b.S, boost(1, 0.4).S), 1e-12);
}

TEST(LeviCivita, Values) {
  EXPECT_EQ(levi_civita(1, 2, 3), 1);
  EXPECT_EQ(levi_civita(3, 1, 2), 1);
  EXPECT_EQ(levi_civita(2, 1, 3), -1);
  EXPECT_EQ(levi_civita(1, 1, 3), 0);
}
