#pragma once

// Dirac conjugate psi-bar = psi^dagger e0 and the sixteen bilinears
// psi1-bar Gamma psi2, each computed twice: as a multivector product inside the
// ideal and from explicit two-component formulas. The two paths share no code
// beyond the Spinor type.

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "realdirac/clifford.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/field.hpp"
#include "realdirac/lorentz.hpp"
#include "realdirac/spinor.hpp"

namespace realdirac {

struct BilinearKind {
  enum class Tag { scalar, vector, bivector, axial, pseudoscalar };
  Tag tag = Tag::scalar;
  int mu = 0;
  int nu = 0;

  static BilinearKind scalar() { return {Tag::scalar, 0, 0}; }
  static BilinearKind vector(int mu) { return {Tag::vector, check(mu), 0}; }
  static BilinearKind axial(int mu) { return {Tag::axial, check(mu), 0}; }
  static BilinearKind pseudoscalar() { return {Tag::pseudoscalar, 0, 0}; }
  static BilinearKind bivector(int mu, int nu) {
    check(mu);
    check(nu);
    if (mu >= nu) throw std::invalid_argument("bivector indices must satisfy mu < nu");
    return {Tag::bivector, mu, nu};
  }

  /// Matrix-free Gamma: 1, e^mu, e^mu ^ e^nu, e^mu e5, e5.
  Multivector gamma() const {
    switch (tag) {
      case Tag::scalar: return 1.0;
      case Tag::vector: return e(mu);
      case Tag::bivector: return antisym_part(e(mu), e(nu));
      case Tag::axial: return e(mu) * e(5);
      case Tag::pseudoscalar: return e(5);
    }
    return {};
  }

  std::string name() const {
    switch (tag) {
      case Tag::scalar: return "S";
      case Tag::vector: return "V" + std::to_string(mu);
      case Tag::bivector: return "B" + std::to_string(mu) + std::to_string(nu);
      case Tag::axial: return "A" + std::to_string(mu);
      case Tag::pseudoscalar: return "P";
    }
    return "?";
  }

  friend bool operator==(const BilinearKind&, const BilinearKind&) = default;

 private:
  static int check(int mu) {
    if (mu < 0 || mu > 3) throw std::invalid_argument("spacetime index must be 0..3, got " + std::to_string(mu));
    return mu;
  }
};

/// S, V0..V3, B01..B23, A0..A3, P.
inline std::vector<BilinearKind> all_bilinear_kinds() {
  std::vector<BilinearKind> out{BilinearKind::scalar()};
  for (int mu = 0; mu < 4; ++mu) out.push_back(BilinearKind::vector(mu));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) out.push_back(BilinearKind::bivector(mu, nu));
  for (int mu = 0; mu < 4; ++mu) out.push_back(BilinearKind::axial(mu));
  out.push_back(BilinearKind::pseudoscalar());
  return out;
}

struct BilinearValue {
  Complex value;         // (scalar part, I part)
  Multivector raw;       // product before extraction, a P + b I P
  Complex expanded;      // component-formula path
  double ideal_residual = 0.0;  // distance of raw from span{P, I P}

  double path_difference() const { return std::abs(value - expanded); }
};

/// Thrown when the two bilinear paths disagree.
class BilinearMismatch : public std::runtime_error {
 public:
  BilinearMismatch(const std::string& what, BilinearValue v) : std::runtime_error(what), value_(v) {}
  const BilinearValue& value() const noexcept { return value_; }

 private:
  BilinearValue value_;
};

/// Reads a P + b I P as (a, b); the factor 4 undoes scalar_part(P) = 1/4.
inline Complex extract_pair(const Multivector& raw) {
  return {4.0 * scalar_part(raw), -4.0 * scalar_part(pseudoscalar() * raw)};
}

inline double ideal_pair_residual(const Multivector& raw) {
  const Complex v = extract_pair(raw);
  const Multivector P = reference_idempotent();
  return distance(raw, v.real() * P + v.imag() * (pseudoscalar() * P));
}

/// psi-bar as a multivector: hermite(embed psi) e0.
inline Multivector dirac_bar(const Spinor& psi) { return hermite(embed(psi)) * e(0); }

/// The functional chi -> psi-bar Gamma chi.
struct DiracConjugate {
  Multivector bar;

  explicit DiracConjugate(const Spinor& psi) : bar(dirac_bar(psi)) {}

  Multivector raw(const Multivector& gamma, const Spinor& chi) const { return bar * gamma * embed(chi); }
  Complex operator()(const Multivector& gamma, const Spinor& chi) const { return extract_pair(raw(gamma, chi)); }
  Complex operator()(const Spinor& chi) const { return (*this)(Multivector(1.0), chi); }
};

inline DiracConjugate dirac_conj(const Spinor& psi) { return DiracConjugate(psi); }

namespace detail {

using Pauli2 = std::array<Complex, 2>;

// f^dagger sigma_l g with the standard Pauli matrices; l = 0 is the identity.
inline Complex pauli_form(const Pauli2& f, int l, const Pauli2& g) {
  const Complex i{0.0, 1.0};
  const Complex a = std::conj(f[0]), b = std::conj(f[1]);
  switch (l) {
    case 0: return a * g[0] + b * g[1];
    case 1: return a * g[1] + b * g[0];
    case 2: return -i * a * g[1] + i * b * g[0];
    case 3: return a * g[0] - b * g[1];
    default: throw std::invalid_argument("Pauli index out of range");
  }
}

inline Complex expanded_bilinear(const Spinor& p1, const Spinor& p2, const BilinearKind& k) {
  const Pauli2 f{p1.phi_u(), p1.phi_d()}, c{p1.chi_u(), p1.chi_d()};
  const Pauli2 f2{p2.phi_u(), p2.phi_d()}, c2{p2.chi_u(), p2.chi_d()};
  const Complex i{0.0, 1.0};
  using Tag = BilinearKind::Tag;
  switch (k.tag) {
    case Tag::scalar: return pauli_form(f, 0, f2) - pauli_form(c, 0, c2);
    case Tag::pseudoscalar: return pauli_form(f, 0, c2) - pauli_form(c, 0, f2);
    case Tag::vector:
      if (k.mu == 0) return pauli_form(f, 0, f2) + pauli_form(c, 0, c2);
      return -(pauli_form(f, k.mu, c2) + pauli_form(c, k.mu, f2));
    case Tag::axial:
      if (k.mu == 0) return pauli_form(f, 0, c2) + pauli_form(c, 0, f2);
      return -(pauli_form(f, k.mu, f2) + pauli_form(c, k.mu, c2));
    case Tag::bivector: {
      if (k.mu == 0) return -(pauli_form(f, k.nu, c2) - pauli_form(c, k.nu, f2));
      int l = 6 - k.mu - k.nu;
      const double eps = levi_civita(k.mu, k.nu, l);
      return -eps * i * (pauli_form(f, l, f2) - pauli_form(c, l, c2));
    }
  }
  return {};
}

}  // namespace detail

inline constexpr double kBilinearTolerance = 1e-11;

/// Multivector-product path only.
inline BilinearValue bilinear_direct(const Spinor& psi1, const Spinor& psi2, const BilinearKind& k) {
  BilinearValue v;
  v.raw = dirac_conj(psi1).raw(k.gamma(), psi2);
  v.value = extract_pair(v.raw);
  v.ideal_residual = ideal_pair_residual(v.raw);
  return v;
}

/// Component-formula path only.
inline Complex bilinear_expanded(const Spinor& psi1, const Spinor& psi2, const BilinearKind& k) {
  return detail::expanded_bilinear(psi1, psi2, k);
}

/// Both paths; throws BilinearMismatch if they differ by more than tol.
inline BilinearValue bilinear(const Spinor& psi1, const Spinor& psi2, const BilinearKind& k,
                              double tol = kBilinearTolerance) {
  BilinearValue v = bilinear_direct(psi1, psi2, k);
  v.expanded = bilinear_expanded(psi1, psi2, k);
  const double scale = std::max(1.0, std::sqrt(psi1.norm2() * psi2.norm2()));
  if (v.path_difference() > tol * scale || v.ideal_residual > tol * scale) {
    std::ostringstream os;
    os << "bilinear " << k.name() << " paths disagree: direct " << v.value << ", expanded " << v.expanded;
    throw BilinearMismatch(os.str(), v);
  }
  return v;
}

/// Probability current j^mu = psi-bar e^mu psi (contravariant, real).
inline std::array<double, 4> current(const Spinor& psi) {
  std::array<double, 4> j{};
  for (int mu = 0; mu < 4; ++mu) j[static_cast<std::size_t>(mu)] = bilinear(psi, psi, BilinearKind::vector(mu)).value.real();
  return j;
}

/// eta_{mu nu} j^mu j^nu.
inline double minkowski_square(const std::array<double, 4>& j) {
  return j[0] * j[0] - j[1] * j[1] - j[2] * j[2] - j[3] * j[3];
}

// Field-level currents. Each component is the raw ideal product as a FieldExpr;
// the physical value is 4 times its scalar part.

inline std::array<FieldExpr, 4> current_field(const FieldExpr& psi, bool axial = false) {
  const FieldExpr bar = hermite(psi) * e(0);
  std::array<FieldExpr, 4> j;
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector gamma = axial ? e(mu) * e(5) : e(mu);
    j[static_cast<std::size_t>(mu)] = bar * (gamma * psi);
  }
  return j;
}

struct ConservationReport {
  FieldExpr divergence;
  double max_coefficient = 0.0;
  std::size_t atoms = 0;
  bool conserved(double tol) const { return max_coefficient <= tol; }
};

inline ConservationReport conservation_check(const FieldExpr& psi, bool axial = false) {
  ConservationReport r;
  r.divergence = divergence(current_field(psi, axial));
  r.max_coefficient = r.divergence.max_abs();
  r.atoms = r.divergence.size();
  return r;
}

/// Superposition of plane waves a_i exp(-I p_i.x / hbar) u(p_i).
inline FieldExpr superpose(const std::vector<std::pair<Complex, OnShellState>>& terms, HBar hbar = {}) {
  FieldExpr psi;
  for (const auto& [amp, s] : terms) psi += FieldExpr::plane_wave(wavevector(s, hbar), embed(amp * free_solution(s)));
  return psi;
}

}  // namespace realdirac
