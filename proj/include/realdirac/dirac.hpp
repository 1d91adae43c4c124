#pragma once

// Momentum-space Dirac equation (p - m) psi = 0 with p = e^mu p_mu, and the
// free-particle solution family.
//
// Conventions: c = 1. The 3-momentum components p1, p2, p3 stored in an
// OnShellState are the covariant components p_j, i.e. the coefficients of the
// frame vectors in p = E e0 + p_j e^j. The contravariant (physical) momentum is
// p^j = -p_j. Plane waves carry the phase exp(-I p.x / hbar) with
// p.x = p_mu x^mu = E t + p_j x^j.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "realdirac/clifford.hpp"
#include "realdirac/field.hpp"
#include "realdirac/spinor.hpp"

namespace realdirac {

struct HBar {
  double value = 1.0;

  HBar() = default;
  explicit HBar(double v) : value(v) {
    if (!(v > 0.0)) throw std::invalid_argument("hbar must be positive");
  }
};

enum class Spin { up, down };
enum class EnergySign { positive, negative };

inline constexpr double kOnShellTolerance = 1e-12;

struct OnShellState {
  double m = 1.0;
  double E = 1.0;
  std::array<double, 3> p{};  // covariant p_j
  EnergySign energy_sign = EnergySign::positive;
  Spin spin = Spin::up;

  /// Energy derived from the mass shell, E = ±sqrt(m^2 + |p|^2).
  static OnShellState make(double m, std::array<double, 3> p, Spin spin = Spin::up,
                           EnergySign sign = EnergySign::positive) {
    const double e_abs = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return checked(m, sign == EnergySign::positive ? e_abs : -e_abs, p, spin);
  }

  /// Validating constructor for an explicitly given energy.
  static OnShellState checked(double m, double E, std::array<double, 3> p, Spin spin = Spin::up) {
    if (!(m >= 0.0)) throw std::domain_error("rest mass must be non-negative");
    if (E == 0.0) throw std::domain_error("energy must be non-zero");
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    const double shell = E * E - m * m - p2;
    if (std::abs(shell) > kOnShellTolerance * std::max(1.0, E * E))
      throw std::domain_error("state is off shell: E^2 - m^2 - p^2 = " + std::to_string(shell));
    OnShellState s;
    s.m = m;
    s.E = E;
    s.p = p;
    s.energy_sign = E > 0.0 ? EnergySign::positive : EnergySign::negative;
    s.spin = spin;
    return s;
  }

  /// Contravariant component p^j = -p_j.
  double p_upper(int j) const { return -p.at(static_cast<std::size_t>(j - 1)); }
};

/// p = E e0 + p_j e^j.
inline Multivector momentum_vector(const OnShellState& s) {
  return s.E * e(0) + s.p[0] * e(1) + s.p[1] * e(2) + s.p[2] * e(3);
}

/// Spatial momentum as a polar 3-vector, p_j x_j.
inline Multivector spatial_momentum(const OnShellState& s) {
  return s.p[0] * x_vec(1) + s.p[1] * x_vec(2) + s.p[2] * x_vec(3);
}

/// p_mu x^mu for coordinates x^mu = (t, x1, x2, x3).
inline double minkowski_phase(const OnShellState& s, const std::array<double, 4>& x) {
  return s.E * x[0] + s.p[0] * x[1] + s.p[1] * x[2] + s.p[2] * x[3];
}

/// Un-normalized constant spinor u(p, s) (E > 0) or v(p, s) (E < 0).
///
/// Positive energy fixes the phi sector (phi_u = 1 for spin up, phi_d = 1 for
/// spin down) and solves chi = p phi / (E + m). Negative energy fixes the chi
/// sector, labelled by its sigma_3 eigenvalue, and solves phi = p chi / (E - m).
inline Spinor free_solution(const OnShellState& s) {
  const double p1 = s.p[0], p2 = s.p[1], p3 = s.p[2];
  const Complex minus{p1, -p2};  // p1 - I p2
  const Complex plus{p1, p2};    // p1 + I p2
  const Complex one = 1.0;
  const bool up = s.spin == Spin::up;
  if (s.E > 0.0) {
    const double denom = s.E + s.m;
    if (denom == 0.0) throw std::domain_error("E + m vanishes");
    const Complex fu = up ? one : 0.0;
    const Complex fd = up ? 0.0 : one;
    return {fu, fd, (p3 * fu + minus * fd) / denom, (-p3 * fd + plus * fu) / denom};
  }
  const double denom = -s.E + s.m;
  if (denom == 0.0) throw std::domain_error("-E + m vanishes");
  const Complex cu = up ? one : 0.0;
  const Complex cd = up ? 0.0 : one;
  return {(-p3 * cu - minus * cd) / denom, (p3 * cd - plus * cu) / denom, cu, cd};
}

/// (p - m) psi.
inline Spinor dirac_residual(const OnShellState& s, const Spinor& psi) {
  return act(momentum_vector(s) - Multivector(s.m), psi);
}

/// psi / sqrt(psi^dagger psi).
inline Spinor normalize(const Spinor& psi) {
  const double n = std::sqrt(psi.norm2());
  if (n == 0.0) throw std::domain_error("cannot normalize the zero spinor");
  return (1.0 / n) * psi;
}

struct CoupledResiduals {
  Spinor r1;  // (E - m) phi - p chi
  Spinor r2;  // (E + m) chi - p phi
};

/// The Dirac equation split into its parity sectors.
inline CoupledResiduals coupled_residuals(const OnShellState& s, const Spinor& psi) {
  const auto [phi, chi] = parity_split(psi);
  const Multivector pvec = spatial_momentum(s);
  return {(s.E - s.m) * phi - act(pvec, chi), (s.E + s.m) * chi - act(pvec, phi)};
}

struct RestFrameReport {
  Spinor residual;              // (e0 - 1) psi
  double chi_norm = 0.0;        // size of the parity-odd sector
  double projector_error = 0.0; // |(e0 - 1) chi + 2 chi|
  bool solves_rest_frame = false;
};

/// In the rest frame (e0 - 1) psi = 0, which holds exactly when chi = 0
/// because (e0 - 1) chi = -2 chi.
inline RestFrameReport rest_frame_check(const Spinor& psi, double tol = 1e-12) {
  RestFrameReport r;
  const Multivector op = e(0) - Multivector(1.0);
  r.residual = act(op, psi);
  const auto [phi, chi] = parity_split(psi);
  r.chi_norm = chi.max_abs();
  r.projector_error = (act(op, chi) + 2.0 * chi).max_abs();
  r.solves_rest_frame = r.residual.max_abs() <= tol;
  return r;
}

/// exp(-I p.x / hbar) u at the spacetime point x = (t, x1, x2, x3).
inline Spinor plane_wave(const OnShellState& s, const std::array<double, 4>& x, HBar hbar = {}) {
  const double theta = -minkowski_phase(s, x) / hbar.value;
  return act(exp_mv(theta * pseudoscalar()), free_solution(s));
}

/// Covariant wavevector of the phase, k_mu = -p_mu / hbar.
inline Wavevector wavevector(const OnShellState& s, HBar hbar = {}) {
  Wavevector k;
  k.k = {-s.E / hbar.value, -s.p[0] / hbar.value, -s.p[1] / hbar.value, -s.p[2] / hbar.value};
  return k;
}

/// The plane wave as an exactly differentiable field.
inline FieldExpr plane_wave_field(const OnShellState& s, HBar hbar = {}) {
  return FieldExpr::plane_wave(wavevector(s, hbar), embed(free_solution(s)));
}

}  // namespace realdirac
