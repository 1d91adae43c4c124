#pragma once

// Minimally coupled Dirac operator P = e^mu (hbar I d_mu + e A_mu), its square,
// the Faraday bivector, the Pauli reduction, and the [x, p] commutator identity.
//
// Conventions: the potential is stored by its contravariant components
// A^mu = (phi, A^1, A^2, A^3); the frame expansion uses A_mu = eta_{mu mu} A^mu.
// Faraday returns the physical fields E = -grad phi - dA/dt and B = curl A.
// As a bivector F = grad ^ A = E_j x_j + I sigma_l B^l, where E_j = -E^j is the
// covariant electric component.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "realdirac/clifford.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/field.hpp"
#include "realdirac/lorentz.hpp"
#include "realdirac/spinor.hpp"

namespace realdirac {

struct EMPotential {
  std::array<FieldExpr, 4> upper{};  // A^mu, scalar-valued
  double charge = 1.0;

  /// Covariant component A_mu.
  FieldExpr lower(int mu) const { return eta(mu) * upper.at(static_cast<std::size_t>(mu)); }

  /// A = e^mu A_mu.
  FieldExpr vector() const {
    FieldExpr a;
    for (int mu = 0; mu < 4; ++mu) a += e(mu) * lower(mu);
    return a;
  }

  static EMPotential zero(double charge = 1.0) {
    EMPotential a;
    a.charge = charge;
    return a;
  }

  /// Uniform magnetic field in the symmetric gauge A = ½ B x r.
  static EMPotential uniform_magnetic(const std::array<double, 3>& B, double charge = 1.0) {
    EMPotential a = zero(charge);
    auto x = [](int j) { return FieldExpr::coordinate(j); };
    a.upper[1] = 0.5 * (B[1] * x(3) - B[2] * x(2));
    a.upper[2] = 0.5 * (B[2] * x(1) - B[0] * x(3));
    a.upper[3] = 0.5 * (B[0] * x(2) - B[1] * x(1));
    return a;
  }

  /// Uniform electric field, phi = -E.r.
  static EMPotential uniform_electric(const std::array<double, 3>& E, double charge = 1.0) {
    EMPotential a = zero(charge);
    for (int j = 1; j <= 3; ++j) a.upper[0] -= E[static_cast<std::size_t>(j - 1)] * FieldExpr::coordinate(j);
    return a;
  }

  /// A^mu = polarization^mu cos(k_nu x^nu).
  static EMPotential plane_wave(const Wavevector& k, const std::array<double, 4>& polarization, double charge = 1.0) {
    EMPotential a = zero(charge);
    const FieldExpr cosine =
        0.5 * (FieldExpr::plane_wave(k, 1.0) + FieldExpr::plane_wave(-k, 1.0));
    for (std::size_t mu = 0; mu < 4; ++mu) a.upper[mu] = polarization[mu] * cosine;
    return a;
  }
};

/// Gauge transform A_mu -> A_mu + d_mu lambda.
inline EMPotential gauge_transform(const EMPotential& a, const FieldExpr& lambda) {
  EMPotential out = a;
  for (int mu = 0; mu < 4; ++mu) out.upper[static_cast<std::size_t>(mu)] += eta(mu) * lambda.partial(mu);
  return out;
}

struct Faraday {
  std::array<FieldExpr, 3> E{};
  std::array<FieldExpr, 3> B{};

  /// F = E_j x_j + I sigma_l B^l with E_j = -E^j.
  FieldExpr bivector() const {
    const Multivector I = pseudoscalar();
    FieldExpr f;
    for (int j = 1; j <= 3; ++j) {
      const auto i = static_cast<std::size_t>(j - 1);
      f -= x_vec(j) * E[i];
      f += (I * sigma(j)) * B[i];
    }
    return f;
  }
};

inline Faraday faraday(const EMPotential& a) {
  Faraday f;
  const auto& A = a.upper;
  for (int j = 1; j <= 3; ++j) f.E[static_cast<std::size_t>(j - 1)] = -A[0].partial(j) - A[static_cast<std::size_t>(j)].partial(0);
  f.B[0] = A[3].partial(2) - A[2].partial(3);
  f.B[1] = A[1].partial(3) - A[3].partial(1);
  f.B[2] = A[2].partial(1) - A[1].partial(2);
  return f;
}

/// grad ^ A assembled directly from frame-vector wedges.
inline FieldExpr wedge_gradient(const EMPotential& a) {
  FieldExpr f;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) f += antisym_part(e(mu), e(nu)) * a.lower(nu).partial(mu);
  return f;
}

/// Kinetic component P_mu psi = hbar I d_mu psi + e A_mu psi.
inline FieldExpr kinetic(const EMPotential& a, int mu, const FieldExpr& psi, HBar hbar = {}) {
  return (hbar.value * pseudoscalar()) * psi.partial(mu) + a.charge * (a.lower(mu) * psi);
}

/// P psi = e^mu P_mu psi.
inline FieldExpr dirac_apply(const EMPotential& a, const FieldExpr& psi, HBar hbar = {}) {
  FieldExpr r;
  for (int mu = 0; mu < 4; ++mu) r += e(mu) * kinetic(a, mu, psi, hbar);
  return r;
}

/// eta^{mu nu} P_mu P_nu psi.
inline FieldExpr klein_gordon_part(const EMPotential& a, const FieldExpr& psi, HBar hbar = {}) {
  FieldExpr r;
  for (int mu = 0; mu < 4; ++mu) r += eta(mu) * kinetic(a, mu, kinetic(a, mu, psi, hbar), hbar);
  return r;
}

/// P P psi - [KG + e hbar I F] psi; identically zero. The mass terms of the
/// squared equation cancel and are omitted.
inline FieldExpr squared_residual(const EMPotential& a, const FieldExpr& psi, HBar hbar = {}) {
  const FieldExpr pp = dirac_apply(a, dirac_apply(a, psi, hbar), hbar);
  const FieldExpr spin = (a.charge * hbar.value) * (pseudoscalar() * (faraday(a).bivector() * psi));
  return pp - klein_gordon_part(a, psi, hbar) - spin;
}

/// Nonrelativistic Pauli operator on the parity-even sector,
///
///   H_P = P.P / 2m - e A_0 + (hbar e / 2m)(sigma, B),
///
/// with P_j = hbar I d_j + e A_j and P = P_j x_j. Valid only when
/// |(hbar I d_t + e A_0) chi| << 2m |chi|; that regime is the caller's
/// responsibility.
struct PauliOperator {
  EMPotential potential;
  double mass = 1.0;
  HBar hbar{};

  /// P.P phi = sum_j P_j P_j phi.
  FieldExpr momentum_square(const FieldExpr& phi) const {
    FieldExpr r;
    for (int j = 1; j <= 3; ++j) r += kinetic(potential, j, kinetic(potential, j, phi, hbar), hbar);
    return r;
  }

  /// Polar vector operator P phi = x_j P_j phi.
  FieldExpr polar_momentum(const FieldExpr& phi) const {
    FieldExpr r;
    for (int j = 1; j <= 3; ++j) r += x_vec(j) * kinetic(potential, j, phi, hbar);
    return r;
  }

  /// (hbar e / 2m)(sigma, B) phi.
  FieldExpr spin_term(const FieldExpr& phi) const {
    const Faraday f = faraday(potential);
    FieldExpr sb;
    for (int l = 1; l <= 3; ++l) sb += sigma(l) * f.B[static_cast<std::size_t>(l - 1)];
    return (hbar.value * potential.charge / (2.0 * mass)) * (sb * phi);
  }

  FieldExpr apply(const FieldExpr& phi) const {
    return (1.0 / (2.0 * mass)) * momentum_square(phi) - potential.charge * (potential.lower(0) * phi) + spin_term(phi);
  }

  /// Lowest-order small component chi_P = P phi / 2m.
  FieldExpr reduced_chi(const FieldExpr& phi) const { return (1.0 / (2.0 * mass)) * polar_momentum(phi); }

  /// Upper coupled equation (hbar I d_t + e A_0) phi - P chi.
  FieldExpr upper_equation(const FieldExpr& phi, const FieldExpr& chi) const {
    return (hbar.value * pseudoscalar()) * phi.partial(0) + potential.charge * (potential.lower(0) * phi) -
           polar_momentum(chi);
  }

  /// Upper equation with chi_P substituted, minus (hbar I d_t phi - H_P phi).
  /// Identically zero.
  FieldExpr reduction_residual(const FieldExpr& phi) const {
    const FieldExpr lhs = upper_equation(phi, reduced_chi(phi));
    const FieldExpr rhs = (hbar.value * pseudoscalar()) * phi.partial(0) - apply(phi);
    return lhs - rhs;
  }

  /// P P phi - P.P phi - hbar e (sigma, B) phi. Identically zero.
  FieldExpr product_identity_residual(const FieldExpr& phi) const {
    return polar_momentum(polar_momentum(phi)) - momentum_square(phi) - 2.0 * mass * spin_term(phi);
  }
};

inline PauliOperator pauli_hamiltonian(const EMPotential& a, double mass, HBar hbar = {}) {
  return PauliOperator{a, mass, hbar};
}

struct ZeemanResult {
  double energy_up = 0.0;
  double energy_down = 0.0;
  double splitting = 0.0;
  double expected = 0.0;    // hbar e B / m
  double g_factor = 0.0;
  double eigen_residual = 0.0;  // spin term minus energy times phi, both spins
};

/// Spin energy of constant spin-up and spin-down Pauli spinors in a uniform
/// field B along e^3. The energies come from the reduction path
/// (P P - P.P) / 2m, not from the (sigma, B) term directly.
inline ZeemanResult zeeman_splitting(double B, double charge = 1.0, double mass = 1.0, HBar hbar = {}) {
  const PauliOperator H = pauli_hamiltonian(EMPotential::uniform_magnetic({0.0, 0.0, B}, charge), mass, hbar);
  auto spin_energy = [&](const Spinor& s, double& residual) {
    const FieldExpr phi = FieldExpr::constant(embed(s));
    const FieldExpr shift =
        (1.0 / (2.0 * mass)) * (H.polar_momentum(H.polar_momentum(phi)) - H.momentum_square(phi));
    const Spinor at_origin = project(shift.coefficient({}, {}));
    const double energy = (at_origin.c[0] + at_origin.c[1]).real();
    residual = std::max(residual, (shift - energy * phi).max_abs());
    return energy;
  };
  ZeemanResult r;
  r.energy_up = spin_energy(Spinor{1.0, 0.0, 0.0, 0.0}, r.eigen_residual);
  r.energy_down = spin_energy(Spinor{0.0, 1.0, 0.0, 0.0}, r.eigen_residual);
  r.splitting = r.energy_up - r.energy_down;
  r.expected = hbar.value * charge * B / mass;
  r.g_factor = r.splitting / (hbar.value * charge * B / (2.0 * mass));
  return r;
}

struct CommutatorIdentity {
  FieldExpr direct;     // (x nabla - nabla x) f
  FieldExpr wedge_form; // (-4 + 2 x ^ nabla) f
  FieldExpr killing;    // 4 [-1 + K_j (x_j d_t + t d_{x_j}) - eps_jkl J_l (x_j d_{x_k} - x_k d_{x_j})] f
  double max_residual() const {
    return std::max((direct - wedge_form).max_abs(), (direct - killing).max_abs());
  }
};

/// Position vector x = x_mu e^mu (lower coordinates x_mu = eta x^mu).
inline FieldExpr position_field() {
  FieldExpr x;
  for (int mu = 0; mu < 4; ++mu) x += (eta(mu) * e(mu)) * FieldExpr::coordinate(mu);
  return x;
}

/// The [x, p] commutator (without the I hbar prefactor) on a scalar field.
/// The Killing expansion uses lower coordinates: x_j = -x^j and
/// d_{x_j} = -d/dx^j; each rotation plane (j < k) appears once.
inline CommutatorIdentity xp_commutator_check(const FieldExpr& f) {
  CommutatorIdentity out;
  const FieldExpr x = position_field();
  out.direct = x * nabla(f) - nabla(x * f);

  FieldExpr wedge;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      wedge += antisym_part(e(mu), e(nu)) * (eta(mu) * (FieldExpr::coordinate(mu) * f.partial(nu)));
    }
  out.wedge_form = -4.0 * f + 2.0 * wedge;

  auto x_low = [](int j) { return -1.0 * FieldExpr::coordinate(j); };
  auto d_low = [&f](int j) { return -1.0 * f.partial(j); };
  const FieldExpr t = FieldExpr::coordinate(0);
  FieldExpr bracket = -1.0 * f;
  for (int j = 1; j <= 3; ++j) bracket += boost_generator(j) * (x_low(j) * f.partial(0) + t * d_low(j));
  for (int j = 1; j <= 3; ++j)
    for (int k = j + 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const int eps = levi_civita(j, k, l);
        if (eps == 0) continue;
        bracket -= (eps * rotation_generator(l)) * (x_low(j) * d_low(k) - x_low(k) * d_low(j));
      }
  out.killing = 4.0 * bracket;
  return out;
}

/// All monomials in (t, x1, x2, x3) of total degree <= max_degree.
inline std::vector<Monomial> monomials_up_to(int max_degree) {
  std::vector<Monomial> out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c)
        for (int d = 0; a + b + c + d <= max_degree; ++d) {
          Monomial m;
          m.pow = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                   static_cast<std::uint8_t>(d)};
          out.push_back(m);
        }
  return out;
}

}  // namespace realdirac
