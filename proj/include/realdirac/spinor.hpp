#pragma once

// Dirac spinors as elements of the minimal left ideal Cl(2,3) P with the
// reference idempotent P = ¼(1 + e0)(1 + sigma_3).
//
// A spinor has four components (phi_u, phi_d, chi_u, chi_d), each a + bI with
// I the pseudoscalar, and embeds as
//
//   psi = (phi_u + sigma_1 phi_d + e5 chi_u + x_1 chi_d) P.
//
// In C++ the components are std::complex<double>; the imaginary unit stands
// for I, which is central, so the placement of the factor does not matter.

#include <Eigen/Dense>

#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "realdirac/clifford.hpp"
#include "realdirac/regular_rep.hpp"

namespace realdirac {

using Complex = std::complex<double>;

struct Spinor {
  std::array<Complex, 4> c{};

  Spinor() = default;
  Spinor(Complex phi_u, Complex phi_d, Complex chi_u, Complex chi_d) : c{phi_u, phi_d, chi_u, chi_d} {}

  Complex& phi_u() { return c[0]; }
  Complex& phi_d() { return c[1]; }
  Complex& chi_u() { return c[2]; }
  Complex& chi_d() { return c[3]; }
  const Complex& phi_u() const { return c[0]; }
  const Complex& phi_d() const { return c[1]; }
  const Complex& chi_u() const { return c[2]; }
  const Complex& chi_d() const { return c[3]; }

  Spinor& operator+=(const Spinor& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  Spinor& operator*=(Complex s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator-(Spinor a) { return a *= -1.0; }
  friend Spinor operator*(Complex s, Spinor a) { return a *= s; }
  friend Spinor operator*(Spinor a, Complex s) { return a *= s; }
  friend bool operator==(const Spinor&, const Spinor&) = default;

  /// |phi_u|^2 + |phi_d|^2 + |chi_u|^2 + |chi_d|^2.
  double norm2() const {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x);
    return s;
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return m;
  }
};

inline double distance(const Spinor& a, const Spinor& b) { return (a - b).max_abs(); }

using SpinorCoords = Eigen::Matrix<double, 8, 1>;
using ActionMatrix = Eigen::Matrix<double, 8, 8>;

/// Real coordinates (Re phi_u, Im phi_u, Re phi_d, ..., Im chi_d).
inline SpinorCoords to_coords(const Spinor& s) {
  SpinorCoords v;
  for (int i = 0; i < 4; ++i) {
    v(2 * i) = s.c[static_cast<std::size_t>(i)].real();
    v(2 * i + 1) = s.c[static_cast<std::size_t>(i)].imag();
  }
  return v;
}

inline Spinor from_coords(const SpinorCoords& v) {
  Spinor s;
  for (int i = 0; i < 4; ++i) s.c[static_cast<std::size_t>(i)] = {v(2 * i), v(2 * i + 1)};
  return s;
}

/// ¼(1 + e0)(1 + sigma_3).
inline Multivector reference_idempotent() {
  return 0.25 * ((Multivector(1.0) + e(0)) * (Multivector(1.0) + sigma(3)));
}

/// Carrier factors {1, sigma_1, e5, x_1} of the four components.
inline std::array<Multivector, 4> carrier_factors() { return {Multivector(1.0), sigma(1), e(5), x_vec(1)}; }

/// Basis of the ideal matching the real coordinates: each carrier factor
/// times 1 and times I, right-multiplied by P.
inline const std::array<Multivector, 8>& ideal_basis() {
  static const std::array<Multivector, 8> basis = [] {
    std::array<Multivector, 8> b;
    const Multivector P = reference_idempotent();
    const Multivector I = pseudoscalar();
    const auto f = carrier_factors();
    for (std::size_t i = 0; i < 4; ++i) {
      b[2 * i] = f[i] * P;
      b[2 * i + 1] = I * f[i] * P;
    }
    return b;
  }();
  return basis;
}

/// Thrown when a multivector does not lie in the left ideal.
class IdealError : public std::runtime_error {
 public:
  IdealError(const std::string& what, double distance) : std::runtime_error(what), distance_(distance) {}
  double distance_to_ideal() const noexcept { return distance_; }

 private:
  double distance_;
};

namespace detail {

using CarrierMatrix = Eigen::Matrix<double, kBlades, 8>;

inline const CarrierMatrix& carrier_matrix() {
  static const CarrierMatrix m = [] {
    CarrierMatrix c;
    const auto& b = ideal_basis();
    for (int i = 0; i < 8; ++i) c.col(i) = to_vector(b[static_cast<std::size_t>(i)]);
    return c;
  }();
  return m;
}

struct CarrierSolve {
  SpinorCoords coords;
  double residual;
};

inline CarrierSolve solve_carrier(const RepVector& v) {
  static const Eigen::ColPivHouseholderQR<CarrierMatrix> qr(carrier_matrix());
  CarrierSolve out{qr.solve(v), 0.0};
  out.residual = (carrier_matrix() * out.coords - v).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace detail

inline constexpr double kIdealTolerance = 1e-10;

inline Multivector embed(const Spinor& s) { return from_vector(detail::carrier_matrix() * to_coords(s)); }

/// Inverse of embed on the ideal; throws IdealError otherwise.
inline Spinor project(const Multivector& m) {
  const auto sol = detail::solve_carrier(to_vector(m));
  if (sol.residual >= kIdealTolerance) {
    std::ostringstream os;
    os << "multivector is not in the spinor ideal (distance " << sol.residual << ")";
    throw IdealError(os.str(), sol.residual);
  }
  return from_coords(sol.coords);
}

/// Per-blade 8x8 matrices of left multiplication on spinor coordinates.
struct ActionTable {
  std::array<ActionMatrix, kBlades> of;
  const ActionMatrix& operator[](Blade b) const { return of[b.index()]; }
};

/// Reduce blade * carrier through the regular representation and solve back
/// into carrier coordinates. Entries are integers in {0, ±1}; anything else
/// means the idempotent and carriers are inconsistent.
inline ActionTable build_action_table() {
  ActionTable t;
  const auto& carriers = detail::carrier_matrix();
  for (std::uint8_t bi = 0; bi < kBlades; ++bi) {
    const RepMatrix L = left_rep(Multivector::blade(Blade(bi)));
    ActionMatrix a;
    for (int col = 0; col < 8; ++col) {
      const auto sol = detail::solve_carrier(L * carriers.col(col));
      if (sol.residual >= kIdealTolerance)
        throw IdealError("blade " + Blade(bi).name() + " maps a carrier outside the ideal", sol.residual);
      for (int row = 0; row < 8; ++row) {
        const double x = sol.coords(row);
        const double r = std::round(x);
        if (std::abs(x - r) > 1e-12 || std::abs(r) > 1.0)
          throw IdealError("non-integer action entry for blade " + Blade(bi).name(), std::abs(x - r));
        a(row, col) = r;
      }
    }
    t.of[bi] = a;
  }
  return t;
}

inline const ActionTable& action_table() {
  static const ActionTable t = build_action_table();
  return t;
}

/// Matrix of left multiplication by a on spinor coordinates.
inline ActionMatrix action_matrix(const Multivector& a) {
  const auto& t = action_table();
  ActionMatrix m = ActionMatrix::Zero();
  for (std::size_t i = 0; i < kBlades; ++i) {
    const double c = a.coeff(i);
    if (c != 0.0) m += c * t.of[i];
  }
  return m;
}

/// Left action a psi.
inline Spinor act(const Multivector& a, const Spinor& psi) { return from_coords(action_matrix(a) * to_coords(psi)); }

/// ½(1 ± e0) psi: parity-even phi and parity-odd chi sectors.
inline std::pair<Spinor, Spinor> parity_split(const Spinor& psi) {
  const Spinor p = act(e(0), psi);
  return {0.5 * (psi + p), 0.5 * (psi - p)};
}

/// ½(1 ± sigma_3) psi. Meant for a single parity sector.
inline std::pair<Spinor, Spinor> spin_split(const Spinor& psi) {
  const Spinor s = act(sigma(3), psi);
  return {0.5 * (psi + s), 0.5 * (psi - s)};
}

/// rho R_theta acting on spin-up, R_theta = cos(theta/2) - I sigma_2 sin(theta/2).
inline Spinor sp_decoupled(double rho, double theta) {
  const Multivector R = Multivector(std::cos(0.5 * theta)) - std::sin(0.5 * theta) * (pseudoscalar() * sigma(2));
  return act(rho * R, Spinor{1.0, 0.0, 0.0, 0.0});
}

// Literal form "(re,im);(re,im);(re,im);(re,im)"; pairs may also be separated
// by commas.

class SpinorParseError : public std::invalid_argument {
 public:
  SpinorParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

inline Spinor parse_spinor(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) throw SpinorParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '+') ++pos;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) throw SpinorParseError("expected a number", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  };
  Spinor s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) {
      skip_ws();
      if (pos < text.size() && (text[pos] == ';' || text[pos] == ',')) {
        ++pos;
      } else {
        throw SpinorParseError("expected ';' between components", pos);
      }
    }
    expect('(');
    const double re = number();
    expect(',');
    const double im = number();
    expect(')');
    s.c[i] = {re, im};
  }
  skip_ws();
  if (pos != text.size()) throw SpinorParseError("trailing characters", pos);
  return s;
}

inline std::string to_string(const Spinor& s) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += ';';
    out += '(';
    detail::append_double(out, s.c[i].real());
    out += ',';
    detail::append_double(out, s.c[i].imag());
    out += ')';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Spinor& s) { return os << to_string(s); }

}  // namespace realdirac
