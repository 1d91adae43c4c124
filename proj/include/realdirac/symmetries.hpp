#pragma once

// Discrete symmetries as maps on the spinor ideal:
//
//   P:   psi -> e0 psi
//   T_j: psi -> sigma_j K_j(psi)
//   C_j: psi -> K_j(e^j psi) = e^{05} sigma_j K_j(psi)
//   CPT: psi -> e5 psi
//
// K_j flips every blade containing label j, including the trailing
// idempotent. For j = 1, 2 the idempotent is K-invariant. For j = 3 it becomes
// (1 + e0)(1 - sigma_3)/4, and a right factor sigma_1 carries the result back
// to the reference ideal. This transport factor is the only convention added
// on top of the symbol-level definitions.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "realdirac/bilinears.hpp"
#include "realdirac/clifford.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/em_pauli.hpp"
#include "realdirac/field.hpp"
#include "realdirac/lorentz.hpp"
#include "realdirac/spinor.hpp"

namespace realdirac {

/// Right factor restoring the reference idempotent after K_j.
inline Multivector ideal_transport(int j) {
  check_axis(j);
  const Multivector P = reference_idempotent();
  return k_conj(P, j) == P ? Multivector(1.0) : sigma(1);
}

inline Spinor apply_P(const Spinor& psi) { return act(e(0), psi); }

/// sigma_j K_j(psi) R_j as a full multivector, before projection.
inline Multivector time_reversal_mv(const Spinor& psi, int j) {
  return sigma(j) * k_conj(embed(psi), j) * ideal_transport(j);
}

inline Spinor apply_T(const Spinor& psi, int j) { return project(time_reversal_mv(psi, j)); }

struct ChargeConjugation {
  Spinor psi;          // first form, K_j(e^j psi)
  Spinor alternative;  // second form, e^{05} sigma_j K_j(psi)
  double difference = 0.0;
};

inline ChargeConjugation charge_conjugation_forms(const Spinor& psi, int j) {
  check_axis(j);
  const Multivector R = ideal_transport(j);
  const Multivector m = embed(psi);
  ChargeConjugation c;
  c.psi = project(k_conj(e(j) * m, j) * R);
  c.alternative = project(word({0, 5}) * sigma(j) * k_conj(m, j) * R);
  c.difference = distance(c.psi, c.alternative);
  return c;
}

/// Throws if the two forms disagree beyond tol.
inline Spinor apply_C(const Spinor& psi, int j, double tol = 1e-12) {
  const ChargeConjugation c = charge_conjugation_forms(psi, j);
  if (c.difference > tol * std::max(1.0, psi.max_abs()))
    throw std::runtime_error("charge conjugation forms disagree by " + std::to_string(c.difference));
  return c.psi;
}

inline Spinor apply_CPT(const Spinor& psi) { return act(e(5), psi); }

/// Field-level charge conjugation K_j(e^j psi(x)) R_j. Phases are conjugated.
inline FieldExpr apply_C(const FieldExpr& psi, int j) { return k_conj(e(j) * psi, j) * ideal_transport(j); }

/// Expected components of T_j from its action on the four slots:
///   j = 1: (-phi_d*, phi_u*, -chi_d*, chi_u*)
///   j = 2: I (-phi_d*, phi_u*, -chi_d*, chi_u*)
///   j = 3: (phi_d*, -phi_u*, chi_d*, -chi_u*)
inline Spinor time_reversal_table(const Spinor& psi, int j) {
  check_axis(j);
  const Complex u = std::conj(psi.phi_u()), d = std::conj(psi.phi_d());
  const Complex cu = std::conj(psi.chi_u()), cd = std::conj(psi.chi_d());
  if (j == 3) return {d, -u, cd, -cu};
  const Spinor base{-d, u, -cd, cu};
  return j == 1 ? base : Complex{0.0, 1.0} * base;
}

struct SpinSwapCheck {
  int axis = 0;
  double table_residual = 0.0;  // multivector distance to the embedded table row
  double swap_residual = 0.0;   // sigma_3 eigenvalue must flip
};

/// Verifies T_j against its component table on the four unit slots and the
/// given sample, comparing full multivectors rather than projected spinors.
inline SpinSwapCheck spin_swap_check(int j, const Spinor& sample) {
  SpinSwapCheck r;
  r.axis = j;
  std::array<Spinor, 5> states{Spinor{1.0, 0.0, 0.0, 0.0}, Spinor{0.0, 1.0, 0.0, 0.0}, Spinor{0.0, 0.0, 1.0, 0.0},
                               Spinor{0.0, 0.0, 0.0, 1.0}, sample};
  for (const Spinor& s : states) {
    r.table_residual = std::max(r.table_residual, distance(time_reversal_mv(s, j), embed(time_reversal_table(s, j))));
    // sigma_3 T psi = -T sigma_3 psi on each parity sector.
    const Spinor lhs = act(sigma(3), apply_T(s, j));
    const Spinor rhs = -1.0 * apply_T(act(sigma(3), s), j);
    r.swap_residual = std::max(r.swap_residual, distance(lhs, rhs));
  }
  return r;
}

/// T_j applied twice; the sign s with T^2 = s.
inline double time_reversal_square_sign(int j) {
  const Spinor probe{Complex{0.5, 0.25}, Complex{-0.75, 1.0}, Complex{0.125, -0.5}, Complex{1.0, 0.375}};
  const Spinor twice = apply_T(apply_T(probe, j), j);
  return distance(twice, probe) < 1e-12 ? 1.0 : (distance(twice, -probe) < 1e-12 ? -1.0 : 0.0);
}

/// Global phase lambda in C P T (psi) = lambda CPT(psi), or NaN if the maps
/// are not proportional.
inline Complex cpt_composition_phase(int j, const Spinor& probe) {
  const Spinor composed = apply_C(apply_P(apply_T(probe, j)), j);
  const Spinor direct = apply_CPT(probe);
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(direct.c[i]) > std::abs(direct.c[best])) best = i;
  const Complex lambda = composed.c[best] / direct.c[best];
  if (distance(composed, lambda * direct) > 1e-10 * std::max(1.0, probe.max_abs()))
    return {std::nan(""), std::nan("")};
  return lambda;
}

// Lagrangian density L = psi-bar (p - m) psi in momentum space.

inline Complex lagrangian(const Spinor& psi, const Multivector& p, double m) {
  return dirac_conj(psi)(p - Multivector(m), psi);
}

inline Complex lagrangian(const Spinor& psi, const OnShellState& s) { return lagrangian(psi, momentum_vector(s), s.m); }

/// The same density written in CPT-reflected variables,
/// psi-bar e5 (-p - m) psi_CPT with psi_CPT = e5 psi.
inline Complex lagrangian_cpt(const Spinor& psi, const Multivector& p, double m) {
  return extract_pair(dirac_bar(psi) * e(5) * (-1.0 * p - Multivector(m)) * embed(apply_CPT(psi)));
}

/// Density in a Lorentz-transformed frame: psi' = S psi, p' = S p S~, with the
/// conjugate recomputed from psi' itself.
inline Complex lagrangian_transformed(const Spinor& psi, const Multivector& p, double m, const LorentzOp& op) {
  return lagrangian(act(op.S, psi), frame_transform(op, p), m);
}

/// Field density psi-bar (P - m) psi as a raw ideal product.
inline FieldExpr lagrangian_field(const FieldExpr& psi, const EMPotential& a, double m, HBar hbar = {}) {
  return (hermite(psi) * e(0)) * (dirac_apply(a, psi, hbar) - m * psi);
}

/// Plane wave of momentum s in a constant potential: exp(-I (p - eA).x) u(p)
/// solves (P - m) psi = 0 because the kinetic momentum is p itself.
inline FieldExpr plane_wave_in_constant_potential(const OnShellState& s, const std::array<double, 4>& A_upper,
                                                  double charge, HBar hbar = {}) {
  Wavevector k = wavevector(s, hbar);
  for (int mu = 0; mu < 4; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    k.k[i] += charge * eta(mu) * A_upper[i] / hbar.value;
  }
  return FieldExpr::plane_wave(k, embed(free_solution(s)));
}

inline EMPotential constant_potential(const std::array<double, 4>& A_upper, double charge) {
  EMPotential a = EMPotential::zero(charge);
  for (std::size_t mu = 0; mu < 4; ++mu) a.upper[mu] = FieldExpr::constant(A_upper[mu]);
  return a;
}

}  // namespace realdirac
