#include <gtest/gtest.h>

#include <cmath>

#include "dirac_matrices.hpp"
#include "realdirac/dirac.hpp"
#include "test_util.hpp"

using namespace realdirac;

namespace {

testutil::C4 slashed(const OnShellState& s) {
  testutil::C4 m = s.E * testutil::generator(0);
  for (int j = 1; j <= 3; ++j) m += s.p[static_cast<std::size_t>(j - 1)] * testutil::generator(j);
  return m - s.m * testutil::C4::Identity();
}

}  // namespace

TEST(MomentumVector, Fixtures) {
  EXPECT_EQ(momentum_vector(OnShellState::make(4, {0, 0, 0})), 4.0 * e(0));
  const OnShellState s = OnShellState::make(4, {0, 0, 3});
  EXPECT_EQ(s.E, 5.0);
  EXPECT_EQ(momentum_vector(s), 5.0 * e(0) + 3.0 * e(3));
  EXPECT_EQ(sym_part(momentum_vector(s), momentum_vector(s)), Multivector(16.0));
  EXPECT_EQ(momentum_vector(OnShellState::make(1, {0, 0, 0})), e(0));
  EXPECT_EQ(s.p_upper(3), -3.0);
}

TEST(OnShellState, Validation) {
  EXPECT_THROW(OnShellState::checked(-1, 1, {0, 0, 0}), std::domain_error);
  EXPECT_THROW(OnShellState::checked(4, 4.5, {0, 0, 3}), std::domain_error);
  EXPECT_THROW(OnShellState::checked(0, 0, {0, 0, 0}), std::domain_error);
  EXPECT_NO_THROW(OnShellState::checked(0, 3, {0, 3, 0}));
  EXPECT_EQ(OnShellState::checked(4, -5, {0, 0, 3}).energy_sign, EnergySign::negative);
  EXPECT_THROW(HBar(0.0), std::invalid_argument);
}

TEST(FreeSolution, Fixtures) {
  const double third = 1.0 / 3.0;
  EXPECT_EQ(free_solution(OnShellState::make(4, {0, 0, 3})), (Spinor{1.0, 0.0, third, 0.0}));
  const Spinor px = free_solution(OnShellState::make(4, {3, 0, 0}));
  EXPECT_EQ(px, (Spinor{1.0, 0.0, 0.0, third}));
  EXPECT_EQ(px.chi_d().imag(), 0.0);
  EXPECT_EQ(free_solution(OnShellState::make(2, {0, 0, 0})), (Spinor{1.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(free_solution(OnShellState::make(1, {0, 0, 0}, Spin::down)), (Spinor{0.0, 1.0, 0.0, 0.0}));
  // Negative energy: chi fixed, phi = p chi / (E - m).
  const Spinor v = free_solution(OnShellState::make(4, {3, 0, 0}, Spin::down, EnergySign::negative));
  EXPECT_EQ(v, (Spinor{-third, 0.0, 0.0, 1.0}));
}

TEST(FreeSolution, InKernelOfHandBuiltOperator) {
  testutil::Rng rng(51);
  for (int n = 0; n < 100; ++n) {
    const OnShellState s = rng.state(n % 2 ? EnergySign::negative : EnergySign::positive);
    const Spinor psi = free_solution(s);
    EXPECT_LE((slashed(s) * testutil::column(psi)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE(dirac_residual(s, psi).max_abs(), 1e-12);
    // The kernel is two dimensional.
    Eigen::ComplexEigenSolver<testutil::C4> es(slashed(s));
    int zeros = 0;
    for (int k = 0; k < 4; ++k) zeros += std::abs(es.eigenvalues()(k)) < 1e-9 ? 1 : 0;
    EXPECT_EQ(zeros, 2);
  }
}

TEST(FreeSolution, SpinStatesAreIndependent) {
  testutil::Rng rng(52);
  const OnShellState s = rng.state(EnergySign::positive);
  OnShellState d = s;
  d.spin = Spin::down;
  const auto u = testutil::column(free_solution(s));
  const auto w = testutil::column(free_solution(d));
  Eigen::Matrix<std::complex<double>, 4, 2> both;
  both << u, w;
  EXPECT_EQ(Eigen::FullPivLU<decltype(both)>(both).rank(), 2);
}

TEST(FreeSolution, SatisfiesSquaredEquation) {
  testutil::Rng rng(53);
  for (int n = 0; n < 20; ++n) {
    const OnShellState s = rng.state(EnergySign::positive);
    const Multivector p = momentum_vector(s);
    EXPECT_LE(distance(p * p, Multivector(s.m * s.m)), 1e-12 * s.E * s.E);
  }
}

TEST(RestFrame, Checks) {
  const auto ok = rest_frame_check(Spinor{1.0, 0.0, 0.0, 0.0});
  EXPECT_TRUE(ok.solves_rest_frame);
  EXPECT_EQ(ok.residual.max_abs(), 0.0);
  const Spinor chi{0.0, 0.0, 1.0, 0.0};
  const auto odd = rest_frame_check(chi);
  EXPECT_EQ(odd.residual, -2.0 * chi);
  EXPECT_FALSE(odd.solves_rest_frame);
  EXPECT_EQ(odd.projector_error, 0.0);
  const auto mixed = rest_frame_check(Spinor{1.0, 0.0, 1.0, 0.0});
  EXPECT_FALSE(mixed.solves_rest_frame);
  EXPECT_EQ(mixed.chi_norm, 1.0);
}

TEST(CoupledEquations, Residuals) {
  const OnShellState s = OnShellState::make(4, {0, 0, 3});
  const auto r = coupled_residuals(s, free_solution(s));
  EXPECT_LE(r.r1.max_abs(), 1e-15);
  EXPECT_LE(r.r2.max_abs(), 1e-15);
  const auto bad = coupled_residuals(s, Spinor{1.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(bad.r1, (Spinor{1.0, 0.0, 0.0, 0.0}));
  const OnShellState v = OnShellState::make(2, {0.5, -1, 1.5}, Spin::up, EnergySign::negative);
  const auto rv = coupled_residuals(v, free_solution(v));
  EXPECT_LE(rv.r1.max_abs(), 1e-14);
  EXPECT_LE(rv.r2.max_abs(), 1e-14);
}

TEST(PlaneWave, PhaseConvention) {
  const OnShellState s = OnShellState::make(4, {0, 0, 3});
  EXPECT_LE(distance(plane_wave(s, {0, 0, 0, 0}), free_solution(s)), 1e-15);
  const OnShellState rest = OnShellState::make(2, {0, 0, 0});
  const double t = 0.3;
  const Complex phase = std::exp(Complex(0.0, -2.0 * t));
  EXPECT_LE(distance(plane_wave(rest, {t, 0, 0, 0}), phase * Spinor{1.0, 0.0, 0.0, 0.0}), 1e-14);
  const HBar h(0.5);
  EXPECT_LE(distance(plane_wave(rest, {t, 0, 0, 0}, h), std::exp(Complex(0.0, -4.0 * t)) * Spinor{1.0, 0.0, 0.0, 0.0}),
            1e-14);
}

TEST(PlaneWave, FieldSolvesDiracEquation) {
  testutil::Rng rng(54);
  for (int n = 0; n < 10; ++n) {
    const OnShellState s = rng.state(n % 2 ? EnergySign::negative : EnergySign::positive);
    const HBar h(0.7);
    const FieldExpr psi = plane_wave_field(s, h);
    // hbar I nabla psi = p psi for the phase exp(-I p.x / hbar).
    const FieldExpr lhs = (h.value * pseudoscalar()) * nabla(psi);
    EXPECT_LE((lhs - s.m * psi).max_abs(), 1e-12 * std::abs(s.E));
    const std::array<double, 4> x{0.2, -0.4, 1.1, 0.3};
    EXPECT_LE(distance(project(psi.evaluate(x)), plane_wave(s, x, h)), 1e-12);
  }
}

TEST(Normalize, UnitNormAndZero) {
  const Spinor n = normalize(Spinor{3.0, 0.0, Complex(0.0, 4.0), 0.0});
  EXPECT_NEAR(n.norm2(), 1.0, 1e-15);
  EXPECT_THROW(normalize(Spinor{}), std::domain_error);
}

TEST(Massless, StatesSolveTheEquation) {
  const OnShellState s = OnShellState::make(0, {0, 0, 2});
  EXPECT_EQ(s.E, 2.0);
  EXPECT_LE(dirac_residual(s, free_solution(s)).max_abs(), 1e-15);
}
