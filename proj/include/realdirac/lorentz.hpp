#pragma once

// Rotors, boosts and the Lorentz generators J_l = -I sigma_l / 2 (rotations)
// and K_j = x_j / 2 (boosts). A LorentzOp S acts on frame vectors two-sided,
// v -> S v reverse(S), and on spinors one-sided, psi -> S psi.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdirac/clifford.hpp"

namespace realdirac {

inline void check_axis(int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("spatial axis must be 1, 2 or 3, got " + std::to_string(j));
}

/// Levi-Civita symbol on {1,2,3}.
constexpr int levi_civita(int j, int k, int l) noexcept {
  if (j == k || k == l || j == l) return 0;
  const bool even = (j == 1 && k == 2 && l == 3) || (j == 2 && k == 3 && l == 1) || (j == 3 && k == 1 && l == 2);
  return even ? 1 : -1;
}

/// Rotation generator J_l.
inline Multivector rotation_generator(int l) {
  check_axis(l);
  return -0.5 * (pseudoscalar() * sigma(l));
}

/// Boost generator K_j.
inline Multivector boost_generator(int j) {
  check_axis(j);
  return 0.5 * x_vec(j);
}

struct LorentzOp {
  Multivector S = 1.0;

  LorentzOp() = default;
  explicit LorentzOp(Multivector s) : S(std::move(s)) {}

  friend LorentzOp operator*(const LorentzOp& a, const LorentzOp& b) { return LorentzOp(a.S * b.S); }

  LorentzOp inverse() const { return LorentzOp(reverse(S)); }
};

/// cos(theta/2) - I sigma_j sin(theta/2).
inline LorentzOp rotor(int j, double theta) {
  check_axis(j);
  return LorentzOp(Multivector(std::cos(0.5 * theta)) - std::sin(0.5 * theta) * (pseudoscalar() * sigma(j)));
}

/// cosh(alpha/2) + x_j sinh(alpha/2).
inline LorentzOp boost(int j, double rapidity) {
  check_axis(j);
  return LorentzOp(Multivector(std::cosh(0.5 * rapidity)) + std::sinh(0.5 * rapidity) * x_vec(j));
}

/// Group element exp(J_k theta_k + K_k alpha_k) via the series exponential.
inline LorentzOp lorentz_exp(const std::array<double, 3>& angles, const std::array<double, 3>& rapidities) {
  Multivector gen;
  for (int k = 1; k <= 3; ++k) {
    gen += angles[static_cast<std::size_t>(k - 1)] * rotation_generator(k);
    gen += rapidities[static_cast<std::size_t>(k - 1)] * boost_generator(k);
  }
  return LorentzOp(exp_mv(gen));
}

/// S v reverse(S).
inline Multivector frame_transform(const LorentzOp& op, const Multivector& v) { return op.S * v * reverse(op.S); }

struct MetricCheck {
  bool passed = true;
  double max_residual = 0.0;
  std::array<std::array<double, 4>, 4> gram{};
};

/// Gram matrix of the transformed frame, sym_part(S e^mu S~, S e^nu S~),
/// compared with eta.
inline MetricCheck metric_preservation_check(const LorentzOp& op, double tol = 1e-12) {
  MetricCheck out;
  std::array<Multivector, 4> frame;
  for (int mu = 0; mu < 4; ++mu) frame[static_cast<std::size_t>(mu)] = frame_transform(op, e(mu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector g = sym_part(frame[static_cast<std::size_t>(mu)], frame[static_cast<std::size_t>(nu)]);
      const Multivector expected = mu == nu ? Multivector(eta(mu)) : Multivector();
      out.gram[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = scalar_part(g);
      out.max_residual = std::max(out.max_residual, distance(g, expected));
    }
  out.passed = out.max_residual <= tol;
  return out;
}

/// The two commuting su(2) blocks S_{+j}, S_{-j} = ½ J_j (1 ± e5).
inline std::pair<Multivector, Multivector> su2_split(int j) {
  const Multivector J = rotation_generator(j);
  const Multivector e5 = e(5);
  return {0.5 * (J * (Multivector(1.0) + e5)), 0.5 * (J * (Multivector(1.0) - e5))};
}

struct CommutatorEntry {
  std::string relation;
  double residual = 0.0;
};

struct CommutatorTable {
  std::vector<CommutatorEntry> entries;
  double max_residual() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.residual);
    return m;
  }
};

/// All 27 brackets of so(3,1):
///   [J_j, J_k] = eps J_l,  [J_j, K_k] = eps K_l,  [K_j, K_k] = -eps J_l.
inline CommutatorTable so31_table_check() {
  CommutatorTable t;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      Multivector jj, jk, kk;
      for (int l = 1; l <= 3; ++l) {
        const double eps = levi_civita(j, k, l);
        jj += eps * rotation_generator(l);
        jk += eps * boost_generator(l);
        kk -= eps * rotation_generator(l);
      }
      t.entries.push_back({"[J" + std::to_string(j) + ",J" + std::to_string(k) + "]",
                           distance(commutator(rotation_generator(j), rotation_generator(k)), jj)});
      t.entries.push_back({"[J" + std::to_string(j) + ",K" + std::to_string(k) + "]",
                           distance(commutator(rotation_generator(j), boost_generator(k)), jk)});
      t.entries.push_back({"[K" + std::to_string(j) + ",K" + std::to_string(k) + "]",
                           distance(commutator(boost_generator(j), boost_generator(k)), kk)});
    }
  return t;
}

/// su(2) + su(2): [S+j,S+k] = eps S+l, [S-j,S-k] = eps S-l, [S+j,S-k] = 0,
/// plus the parity swap e0 S±j e0 = S∓j.
inline CommutatorTable su2_table_check() {
  CommutatorTable t;
  for (int j = 1; j <= 3; ++j) {
    const auto [pj, mj] = su2_split(j);
    for (int k = 1; k <= 3; ++k) {
      const auto [pk, mk] = su2_split(k);
      Multivector pp, mm;
      for (int l = 1; l <= 3; ++l) {
        const auto [pl, ml] = su2_split(l);
        pp += levi_civita(j, k, l) * pl;
        mm += levi_civita(j, k, l) * ml;
      }
      const auto jk = std::to_string(j) + "," + std::to_string(k);
      t.entries.push_back({"[S+" + jk + "]", distance(commutator(pj, pk), pp)});
      t.entries.push_back({"[S-" + jk + "]", distance(commutator(mj, mk), mm)});
      t.entries.push_back({"[S+,S- " + jk + "]", commutator(pj, mk).max_abs()});
    }
    t.entries.push_back({"P(S+" + std::to_string(j) + ")=S-", distance(parity_conj(pj), mj)});
    t.entries.push_back({"P(S-" + std::to_string(j) + ")=S+", distance(parity_conj(mj), pj)});
  }
  return t;
}

}  // namespace realdirac
