#pragma once

// Position-dependent multivector fields with exact partial derivatives.
//
// A FieldExpr is a finite sum of atoms
//
//   t^a x1^b x2^c x3^d * exp(I k_mu x^mu) * M
//
// with M a constant multivector and I the pseudoscalar. The phase factor is
// central, so atoms multiply by adding exponents and wavevectors and taking
// the geometric product of their coefficients in order. Derivatives act on
// the polynomial and pull down I k_mu from the phase.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "realdirac/clifford.hpp"

namespace realdirac {

/// Exponents of (t, x1, x2, x3) = (x^0, x^1, x^2, x^3).
struct Monomial {
  std::array<std::uint8_t, 4> pow{};

  int degree() const { return pow[0] + pow[1] + pow[2] + pow[3]; }
  double evaluate(const std::array<double, 4>& x) const {
    double v = 1.0;
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (int n = 0; n < pow[mu]; ++n) v *= x[mu];
    return v;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t mu = 0; mu < 4; ++mu) a.pow[mu] = static_cast<std::uint8_t>(a.pow[mu] + b.pow[mu]);
    return a;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Covariant wavevector k_mu of the phase exp(I k_mu x^mu).
struct Wavevector {
  std::array<double, 4> k{};

  bool is_zero() const { return k[0] == 0.0 && k[1] == 0.0 && k[2] == 0.0 && k[3] == 0.0; }
  double phase(const std::array<double, 4>& x) const { return k[0] * x[0] + k[1] * x[1] + k[2] * x[2] + k[3] * x[3]; }
  friend Wavevector operator+(Wavevector a, const Wavevector& b) {
    for (std::size_t mu = 0; mu < 4; ++mu) a.k[mu] += b.k[mu];
    return a;
  }
  friend Wavevector operator-(Wavevector a) {
    for (double& v : a.k) v = -v;
    return a;
  }
};

class FieldExpr {
 public:
  struct Key {
    Wavevector wave;
    Monomial mono;
  };

  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      for (std::size_t mu = 0; mu < 4; ++mu) {
        if (a.wave.k[mu] < b.wave.k[mu]) return true;
        if (b.wave.k[mu] < a.wave.k[mu]) return false;
      }
      return a.mono < b.mono;
    }
  };

  using Terms = std::map<Key, Multivector, KeyLess>;

  FieldExpr() = default;

  static FieldExpr constant(const Multivector& m) { return atom({}, {}, m); }

  /// The coordinate x^mu.
  static FieldExpr coordinate(int mu) {
    check_index(mu);
    Monomial mono;
    mono.pow[static_cast<std::size_t>(mu)] = 1;
    return atom({}, mono, 1.0);
  }

  static FieldExpr plane_wave(const Wavevector& k, const Multivector& amplitude) { return atom(k, {}, amplitude); }

  static FieldExpr atom(const Wavevector& k, const Monomial& mono, const Multivector& coeff) {
    FieldExpr f;
    f.add(Key{k, mono}, coeff);
    return f;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  FieldExpr& operator+=(const FieldExpr& o) {
    for (const auto& [key, c] : o.terms_) add(key, c);
    return *this;
  }
  FieldExpr& operator-=(const FieldExpr& o) {
    for (const auto& [key, c] : o.terms_) add(key, -c);
    return *this;
  }
  FieldExpr& operator*=(double s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
  friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
  friend FieldExpr operator-(FieldExpr a) { return a *= -1.0; }
  friend FieldExpr operator*(double s, FieldExpr a) { return a *= s; }
  friend FieldExpr operator*(FieldExpr a, double s) { return a *= s; }

  /// Constant multivector on the left: m f.
  friend FieldExpr operator*(const Multivector& m, const FieldExpr& f) {
    FieldExpr r;
    for (const auto& [key, c] : f.terms_) r.add(key, m * c);
    return r;
  }
  /// Constant multivector on the right: f m.
  friend FieldExpr operator*(const FieldExpr& f, const Multivector& m) {
    FieldExpr r;
    for (const auto& [key, c] : f.terms_) r.add(key, c * m);
    return r;
  }
  /// Pointwise geometric product.
  friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
    FieldExpr r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(Key{ka.wave + kb.wave, ka.mono * kb.mono}, ca * cb);
    return r;
  }

  /// Partial derivative with respect to x^mu.
  FieldExpr partial(int mu) const {
    check_index(mu);
    const auto m = static_cast<std::size_t>(mu);
    const Multivector I = pseudoscalar();
    FieldExpr r;
    for (const auto& [key, c] : terms_) {
      if (key.mono.pow[m] > 0) {
        Key dk = key;
        dk.mono.pow[m] = static_cast<std::uint8_t>(dk.mono.pow[m] - 1);
        r.add(dk, static_cast<double>(key.mono.pow[m]) * c);
      }
      const double km = key.wave.k[m];
      if (km != 0.0) r.add(key, km * (I * c));
    }
    return r;
  }

  /// Termwise map of coefficients, e.g. grade projection.
  template <typename Fn>
  FieldExpr map_coeffs(Fn fn) const {
    FieldExpr r;
    for (const auto& [key, c] : terms_) r.add(key, fn(c));
    return r;
  }

  Multivector evaluate(const std::array<double, 4>& x) const {
    const Multivector I = pseudoscalar();
    Multivector sum;
    for (const auto& [key, c] : terms_) {
      const double poly = key.mono.evaluate(x);
      if (key.wave.is_zero()) {
        sum += poly * c;
      } else {
        const double th = key.wave.phase(x);
        sum += poly * ((Multivector(std::cos(th)) + std::sin(th) * I) * c);
      }
    }
    return sum;
  }

  /// Largest coefficient magnitude over all atoms.
  double max_abs() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, c.max_abs());
    return m;
  }
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  /// Coefficient of the atom with the given phase and monomial (zero if absent).
  Multivector coefficient(const Wavevector& k, const Monomial& mono) const {
    auto it = terms_.find(Key{k, mono});
    return it == terms_.end() ? Multivector() : it->second;
  }

 private:
  static void check_index(int mu) {
    if (mu < 0 || mu > 3) throw std::invalid_argument("spacetime index must be 0..3, got " + std::to_string(mu));
  }

  void add(const Key& key, const Multivector& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Hermite conjugate of a field: conjugates coefficients and phases.
inline FieldExpr hermite(const FieldExpr& f) {
  FieldExpr r;
  for (const auto& [key, c] : f.terms()) r += FieldExpr::atom(-key.wave, key.mono, hermite(c));
  return r;
}

/// K_omega conjugation of a field. K flips I, so phases are conjugated too;
/// coordinates are untouched.
inline FieldExpr k_conj(const FieldExpr& f, int omega) {
  FieldExpr r;
  for (const auto& [key, c] : f.terms()) r += FieldExpr::atom(-key.wave, key.mono, k_conj(c, omega));
  return r;
}

/// Vector derivative e^mu d_mu f (frame vectors on the left).
inline FieldExpr nabla(const FieldExpr& f) {
  FieldExpr r;
  for (int mu = 0; mu < 4; ++mu) r += e(mu) * f.partial(mu);
  return r;
}

/// Divergence d_mu V^mu of four component fields.
inline FieldExpr divergence(const std::array<FieldExpr, 4>& v) {
  FieldExpr r;
  for (int mu = 0; mu < 4; ++mu) r += v[static_cast<std::size_t>(mu)].partial(mu);
  return r;
}

}  // namespace realdirac
