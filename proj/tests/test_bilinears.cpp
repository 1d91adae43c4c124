#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "dirac_matrices.hpp"
#include "realdirac/bilinears.hpp"
#include "test_util.hpp"

using namespace realdirac;

namespace {

const Spinor rest_up{1.0, 0.0, 0.0, 0.0};
const Spinor chi_up{0.0, 0.0, 1.0, 0.0};

// psi1^dagger e0 Gamma psi2 with hand-written matrices.
Complex matrix_bilinear(const Spinor& a, const Spinor& b, const BilinearKind& k) {
  const auto m = testutil::generator(0) * testutil::complex_matrix(k.gamma());
  return testutil::column(a).dot(m * testutil::column(b));
}

}  // namespace

TEST(Kinds, SixteenDistinctNames) {
  const auto kinds = all_bilinear_kinds();
  ASSERT_EQ(kinds.size(), 16u);
  std::set<std::string> names;
  for (const auto& k : kinds) names.insert(k.name());
  EXPECT_EQ(names.size(), 16u);
  EXPECT_EQ(BilinearKind::bivector(0, 3).name(), "B03");
  EXPECT_THROW(BilinearKind::bivector(2, 1), std::invalid_argument);
  EXPECT_THROW(BilinearKind::vector(4), std::invalid_argument);
}

TEST(Bilinear, TableFixtures) {
  EXPECT_EQ(bilinear(rest_up, rest_up, BilinearKind::scalar()).value, Complex(1.0, 0.0));
  EXPECT_EQ(bilinear(chi_up, chi_up, BilinearKind::scalar()).value, Complex(-1.0, 0.0));
  EXPECT_EQ(bilinear(rest_up, rest_up, BilinearKind::vector(0)).value, Complex(1.0, 0.0));
  EXPECT_EQ(bilinear(rest_up, rest_up, BilinearKind::pseudoscalar()).value, Complex(0.0, 0.0));
  // With e^j represented by -gamma^j, the axial e^3 e5 bilinear of spin up is -1.
  EXPECT_EQ(bilinear(rest_up, rest_up, BilinearKind::axial(3)).value, Complex(-1.0, 0.0));
  EXPECT_EQ(matrix_bilinear(rest_up, rest_up, BilinearKind::axial(3)), Complex(-1.0, 0.0));
}

TEST(Bilinear, ThreePathsAgreeOnRandomStates) {
  testutil::Rng rng(71);
  for (int n = 0; n < 100; ++n) {
    const Spinor a = rng.spinor(), b = rng.spinor();
    for (const auto& k : all_bilinear_kinds()) {
      const BilinearValue v = bilinear(a, b, k);
      EXPECT_LE(v.path_difference(), 1e-12) << k.name();
      EXPECT_LE(v.ideal_residual, 1e-12) << k.name();
      EXPECT_LE(std::abs(v.value - matrix_bilinear(a, b, k)), 1e-12) << k.name();
    }
  }
}

TEST(Bilinear, RawProductLiesInPairSpan) {
  const Multivector P = reference_idempotent();
  EXPECT_EQ(extract_pair(P), Complex(1.0, 0.0));
  EXPECT_EQ(extract_pair(pseudoscalar() * P), Complex(0.0, 1.0));
  EXPECT_EQ(ideal_pair_residual(P), 0.0);
  EXPECT_GT(ideal_pair_residual(e(1)), 0.1);
}

TEST(Bilinear, HermitianKindsAreRealOnDiagonal) {
  testutil::Rng rng(72);
  const Spinor psi = rng.spinor();
  for (const auto& k : all_bilinear_kinds()) {
    const Complex d = bilinear(psi, psi, k).value;
    // Every Gamma here satisfies e0 Gamma^dagger e0 = +-Gamma, so the diagonal value is real or imaginary.
    EXPECT_TRUE(std::abs(d.real()) < 1e-12 || std::abs(d.imag()) < 1e-12) << k.name();
  }
}

TEST(Bilinear, MismatchIsReported) {
  testutil::Rng rng(73);
  const Spinor a = rng.spinor(), b = rng.spinor();
  EXPECT_THROW(bilinear(a, b, BilinearKind::vector(1), -1.0), BilinearMismatch);
  try {
    bilinear(a, b, BilinearKind::vector(1), -1.0);
  } catch (const BilinearMismatch& m) {
    EXPECT_NE(std::string(m.what()).find("V1"), std::string::npos);
    EXPECT_LE(m.value().path_difference(), 1e-12);
  }
}

TEST(DiracConjugate, FunctionalForm) {
  testutil::Rng rng(74);
  const Spinor a = rng.spinor(), b = rng.spinor();
  EXPECT_EQ(dirac_conj(a)(b), bilinear_direct(a, b, BilinearKind::scalar()).value);
  EXPECT_LE(std::abs(dirac_conj(a)(b) - std::conj(dirac_conj(b)(a))), 1e-12);
}

TEST(Current, RestStateAndVelocity) {
  const auto j = current(rest_up);
  EXPECT_EQ(j, (std::array<double, 4>{1.0, 0.0, 0.0, 0.0}));

  // Covariant p_3 = 3 means physical momentum p^3 = -3, velocity -3/5.
  const OnShellState s = OnShellState::make(4, {0, 0, 3});
  const auto js = current(normalize(free_solution(s)));
  EXPECT_NEAR(js[3] / js[0], s.p_upper(3) / s.E, 1e-15);
  EXPECT_NEAR(js[3] / js[0], -0.6, 1e-15);
}

TEST(Current, TimelikeAndPositiveDensity) {
  testutil::Rng rng(75);
  for (int n = 0; n < 200; ++n) {
    const Spinor psi = rng.spinor();
    const auto j = current(psi);
    EXPECT_GE(j[0], 0.0);
    EXPECT_NEAR(j[0], psi.norm2(), 1e-12);
    // j.j = S^2 + P^2 with P the (imaginary) pseudoscalar bilinear.
    const double S = bilinear(psi, psi, BilinearKind::scalar()).value.real();
    const Complex P = bilinear(psi, psi, BilinearKind::pseudoscalar()).value;
    EXPECT_NEAR(minkowski_square(j), S * S + std::norm(P), 1e-11);
  }
}

TEST(Current, VelocityOfFreeSolutions) {
  testutil::Rng rng(76);
  for (int n = 0; n < 50; ++n) {
    const OnShellState s = rng.state(EnergySign::positive);
    const auto j = current(free_solution(s));
    for (int k = 1; k <= 3; ++k) EXPECT_NEAR(j[static_cast<std::size_t>(k)] / j[0], s.p_upper(k) / s.E, 1e-12);
  }
}

TEST(Current, TransformsAsAVector) {
  testutil::Rng rng(77);
  for (int n = 0; n < 20; ++n) {
    const Spinor psi = rng.spinor();
    const LorentzOp S = rng.lorentz();
    const auto j = current(psi);
    const auto jp = current(act(S.S, psi));
    Multivector v, vp;
    for (int mu = 0; mu < 4; ++mu) {
      v += j[static_cast<std::size_t>(mu)] * lower(mu);
      vp += jp[static_cast<std::size_t>(mu)] * lower(mu);
    }
    EXPECT_LE(distance(frame_transform(S, v), vp), 1e-10 * (1.0 + v.max_abs()));
    EXPECT_NEAR(bilinear(psi, psi, BilinearKind::scalar()).value.real(),
                bilinear(act(S.S, psi), act(S.S, psi), BilinearKind::scalar()).value.real(), 1e-10 * (1.0 + j[0]));
  }
}

TEST(Conservation, PlaneWavesAndSuperpositions) {
  const OnShellState a = OnShellState::make(4, {0, 0, 3});
  const OnShellState b = OnShellState::make(4, {3, 0, 0});
  EXPECT_EQ(conservation_check(plane_wave_field(a)).max_coefficient, 0.0);
  const FieldExpr psi = superpose({{1.0, a}, {Complex(0.5, -0.25), b}});
  EXPECT_LE(conservation_check(psi).max_coefficient, 1e-14);
  testutil::Rng rng(78);
  std::vector<std::pair<Complex, OnShellState>> terms;
  // All waves share one mass; mixing masses would not solve a single equation.
  for (int n = 0; n < 4; ++n) {
    const EnergySign sign = n % 2 ? EnergySign::negative : EnergySign::positive;
    const Spin spin = n < 2 ? Spin::up : Spin::down;
    const OnShellState s = OnShellState::make(1.5, {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}, spin, sign);
    terms.push_back({Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), s});
  }
  EXPECT_LE(conservation_check(superpose(terms)).max_coefficient, 1e-12);
}

TEST(Conservation, OffShellControlFails) {
  const OnShellState a = OnShellState::make(4, {0, 0, 3});
  OnShellState off = OnShellState::make(4, {3, 0, 0});
  off.E += 0.1;
  const FieldExpr psi = superpose({{1.0, a}, {1.0, off}});
  EXPECT_GT(conservation_check(psi).max_coefficient, 1e-3);
}

TEST(Conservation, AxialCurrentForMasslessWaves) {
  // d_mu j5^mu = 2 I m psi-bar e5 psi vanishes when m = 0.
  const OnShellState a = OnShellState::make(0, {0, 0, 2});
  const OnShellState b = OnShellState::make(0, {1, 0, 0});
  EXPECT_LE(conservation_check(superpose({{1.0, a}, {1.0, b}}), true).max_coefficient, 1e-14);
  const OnShellState c = OnShellState::make(4, {0, 0, 3});
  const OnShellState d = OnShellState::make(4, {3, 0, 0});
  EXPECT_GT(conservation_check(superpose({{1.0, c}, {1.0, d}}), true).max_coefficient, 1e-3);
}
