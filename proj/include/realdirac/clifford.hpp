#pragma once

// Dense multivectors over the real Clifford algebra Cl(2,3) generated by the
// frame vectors e0, e1, e2, e3 (spacetime) and e5 (reflection).

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace realdirac {

inline constexpr int kGenerators = 5;
inline constexpr int kBlades = 32;

/// Generator labels in canonical order; label 5 sorts last.
inline constexpr std::array<int, kGenerators> kLabels = {0, 1, 2, 3, 5};

/// Diagonal metric zeta over the generators, signature (2,3).
inline constexpr std::array<int, kGenerators> kZeta = {+1, -1, -1, -1, +1};

/// Bit position of a generator label, or -1 for an invalid label.
constexpr int label_bit(int label) noexcept {
  switch (label) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 2;
    case 3: return 3;
    case 5: return 4;
    default: return -1;
  }
}

/// Spacetime metric eta restricted to indices 0..3, signature (1,3).
constexpr double eta(int mu) noexcept { return mu == 0 ? 1.0 : -1.0; }

/// Metric coefficient zeta^{tau tau} for a generator label.
inline int zeta(int label) {
  const int bit = label_bit(label);
  if (bit < 0) throw std::invalid_argument("invalid generator label " + std::to_string(label));
  return kZeta[static_cast<std::size_t>(bit)];
}

/// Basis blade: a 5-bit index set over {0,1,2,3,5}, stored in canonical
/// ascending order.
struct Blade {
  std::uint8_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint8_t m) : mask(static_cast<std::uint8_t>(m & 0x1f)) {}

  /// Blade from a set of distinct labels given in any order (the sign from
  /// reordering is dropped; use `reduce_word` when the sign matters).
  static Blade of(std::initializer_list<int> labels) {
    std::uint8_t m = 0;
    for (int l : labels) {
      const int bit = label_bit(l);
      if (bit < 0) throw std::invalid_argument("invalid generator label " + std::to_string(l));
      m = static_cast<std::uint8_t>(m | (1u << bit));
    }
    return Blade(m);
  }

  constexpr int grade() const noexcept { return std::popcount(static_cast<unsigned>(mask)); }
  constexpr bool contains(int label) const noexcept {
    const int bit = label_bit(label);
    return bit >= 0 && ((mask >> bit) & 1u) != 0;
  }
  constexpr std::size_t index() const noexcept { return mask; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int b = 0; b < kGenerators; ++b)
      if ((mask >> b) & 1u) out.push_back(kLabels[static_cast<std::size_t>(b)]);
    return out;
  }

  std::string name() const {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int l : labels()) s += static_cast<char>('0' + l);
    return s;
  }

  friend constexpr bool operator==(Blade, Blade) = default;
};

struct BladeProduct {
  int sign;
  Blade out;
};

/// Product of two canonical blades: transposition count to merge b into a,
/// times zeta for every generator present in both.
constexpr BladeProduct blade_mul(Blade a, Blade b) noexcept {
  int swaps = 0;
  for (int bit = 0; bit < kGenerators; ++bit) {
    if ((b.mask >> bit) & 1u) {
      // generators of a strictly above this one must be passed over
      swaps += std::popcount(static_cast<unsigned>(a.mask >> (bit + 1)));
    }
  }
  int sign = (swaps & 1) ? -1 : 1;
  const unsigned common = static_cast<unsigned>(a.mask & b.mask);
  for (int bit = 0; bit < kGenerators; ++bit)
    if ((common >> bit) & 1u) sign *= kZeta[static_cast<std::size_t>(bit)];
  return {sign, Blade(static_cast<std::uint8_t>(a.mask ^ b.mask))};
}

namespace detail {

struct CayleyTable {
  std::array<std::array<std::int8_t, kBlades>, kBlades> sign{};
  std::array<std::array<std::uint8_t, kBlades>, kBlades> out{};
};

inline const CayleyTable& cayley() {
  static const CayleyTable table = [] {
    CayleyTable t;
    for (std::size_t i = 0; i < kBlades; ++i)
      for (std::size_t j = 0; j < kBlades; ++j) {
        const auto p = blade_mul(Blade(static_cast<std::uint8_t>(i)), Blade(static_cast<std::uint8_t>(j)));
        t.sign[i][j] = static_cast<std::int8_t>(p.sign);
        t.out[i][j] = p.out.mask;
      }
    return t;
  }();
  return table;
}

inline void append_double(std::string& s, double v) {
  if (v == 0.0) v = 0.0;  // print -0 as 0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string num(buf, end);
  if (num.find_first_of(".eEn") == std::string::npos) num += ".0";
  s += num;
}

}  // namespace detail

class Multivector {
 public:
  Multivector() { coeffs_.fill(0.0); }
  /* implicit */ Multivector(double scalar) : Multivector() { coeffs_[0] = scalar; }

  static Multivector blade(Blade b, double coeff = 1.0) {
    Multivector m;
    m.coeffs_[b.index()] = coeff;
    return m;
  }
  static Multivector from_coeffs(std::span<const double, kBlades> c) {
    Multivector m;
    for (std::size_t i = 0; i < kBlades; ++i) m.coeffs_[i] = c[i];
    return m;
  }

  double operator[](Blade b) const noexcept { return coeffs_[b.index()]; }
  double& operator[](Blade b) noexcept { return coeffs_[b.index()]; }
  double coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::array<double, kBlades>& coeffs() const noexcept { return coeffs_; }

  Multivector& operator+=(const Multivector& o) noexcept {
    for (std::size_t i = 0; i < kBlades; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) noexcept {
    for (std::size_t i = 0; i < kBlades; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(double s) noexcept {
    for (double& c : coeffs_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) noexcept { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) noexcept { return a -= b; }
  friend Multivector operator-(Multivector a) noexcept { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) noexcept { return a *= s; }
  friend Multivector operator*(double s, Multivector a) noexcept { return a *= s; }
  friend Multivector operator/(Multivector a, double s) noexcept { return a *= (1.0 / s); }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) noexcept {
    const auto& t = detail::cayley();
    Multivector r;
    for (std::size_t i = 0; i < kBlades; ++i) {
      const double ai = a.coeffs_[i];
      if (ai == 0.0) continue;
      for (std::size_t j = 0; j < kBlades; ++j) {
        const double bj = b.coeffs_[j];
        if (bj == 0.0) continue;
        r.coeffs_[t.out[i][j]] += t.sign[i][j] * ai * bj;
      }
    }
    return r;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  /// Coefficient 2-norm.
  double norm() const noexcept {
    double s = 0.0;
    for (double c : coeffs_) s += c * c;
    return std::sqrt(s);
  }
  double max_abs() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }
  bool is_zero() const noexcept { return max_abs() == 0.0; }

 private:
  std::array<double, kBlades> coeffs_;
};

/// Largest absolute coefficient difference.
inline double distance(const Multivector& a, const Multivector& b) noexcept { return (a - b).max_abs(); }

/// Frame vector e^label.
inline Multivector e(int label) {
  const int bit = label_bit(label);
  if (bit < 0) throw std::invalid_argument("invalid generator label " + std::to_string(label));
  return Multivector::blade(Blade(static_cast<std::uint8_t>(1u << bit)));
}

/// Reduce an ordered word of generator labels to sign * canonical blade by
/// adjacent transpositions, contracting repeated generators with zeta.
inline BladeProduct reduce_word(std::vector<int> word) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const int a = label_bit(word[i]);
      const int b = label_bit(word[i + 1]);
      if (a < 0 || b < 0) throw std::invalid_argument("invalid generator label in word");
      if (a == b) {
        sign *= kZeta[static_cast<std::size_t>(a)];
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
      if (a > b) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  std::uint8_t m = 0;
  for (int l : word) m = static_cast<std::uint8_t>(m | (1u << label_bit(l)));
  return {sign, Blade(m)};
}

/// Product of frame vectors in the given order, e.g. word({1,0}) = e1 e0.
inline Multivector word(std::vector<int> labels) {
  const auto r = reduce_word(std::move(labels));
  return Multivector::blade(r.out, r.sign);
}

inline Multivector gp(const Multivector& a, const Multivector& b) { return a * b; }

/// ½(ab + ba); the inner product when a, b are vectors.
inline Multivector sym_part(const Multivector& a, const Multivector& b) { return 0.5 * (a * b + b * a); }
/// ½(ab − ba); the wedge product when a, b are vectors.
inline Multivector antisym_part(const Multivector& a, const Multivector& b) { return 0.5 * (a * b - b * a); }
inline Multivector commutator(const Multivector& a, const Multivector& b) { return a * b - b * a; }

inline Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > kGenerators) throw std::invalid_argument("grade out of range");
  Multivector r;
  for (std::uint8_t i = 0; i < kBlades; ++i) {
    const Blade b(i);
    if (b.grade() == k) r[b] = a[b];
  }
  return r;
}

inline double scalar_part(const Multivector& a) { return a[Blade{}]; }

namespace detail {
template <typename SignFn>
Multivector per_blade(const Multivector& a, SignFn sign) {
  Multivector r;
  for (std::uint8_t i = 0; i < kBlades; ++i) {
    const Blade b(i);
    r[b] = sign(b) * a[b];
  }
  return r;
}
}  // namespace detail

/// Reversal: grade-k blades pick up (-1)^{k(k-1)/2}.
inline Multivector reverse(const Multivector& a) {
  return detail::per_blade(a, [](Blade b) {
    const int k = b.grade();
    return ((k * (k - 1) / 2) % 2) ? -1.0 : 1.0;
  });
}

/// e0 a e0.
inline Multivector parity_conj(const Multivector& a) {
  const Multivector e0 = e(0);
  return e0 * a * e0;
}

/// Hermite conjugate: (-1)^{#e5} e0 reverse(a) e0, applied per blade.
inline Multivector hermite(const Multivector& a) {
  const Multivector flipped = detail::per_blade(a, [](Blade b) { return b.contains(5) ? -1.0 : 1.0; });
  return parity_conj(reverse(flipped));
}

/// K_omega conjugation: flip the sign of every blade containing e^omega.
inline Multivector k_conj(const Multivector& a, int omega) {
  if (label_bit(omega) < 0) throw std::invalid_argument("invalid generator label " + std::to_string(omega));
  return detail::per_blade(a, [omega](Blade b) { return b.contains(omega) ? -1.0 : 1.0; });
}

/// Raise or lower the index of a frame vector: e_tau = zeta^{tau tau} e^tau.
inline Multivector lower(int label) { return zeta(label) * e(label); }

/// Exponential by truncated power series. Terms are added until the bound
/// (32 |a|)^n / n! on the next term falls below 1e-15.
inline Multivector exp_mv(const Multivector& a) {
  const double bound_norm = 32.0 * a.norm();
  // Scale the argument down so the series terms stay O(1); square back up.
  int squarings = 0;
  double scaled_norm = bound_norm;
  while (scaled_norm > 1.0) {
    scaled_norm *= 0.5;
    ++squarings;
  }
  const Multivector x = a * std::ldexp(1.0, -squarings);
  Multivector sum = 1.0;
  Multivector term = 1.0;
  double tail = 1.0;
  for (int n = 1; n < 200; ++n) {
    term = term * x / static_cast<double>(n);
    sum += term;
    tail *= scaled_norm / static_cast<double>(n + 1);
    if (tail < 1e-15) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Named elements.

/// Geometric pseudoscalar e^{01235}; central and squares to -1.
inline Multivector pseudoscalar() { return Multivector::blade(Blade(0x1f)); }
/// Polar 3-vector x_j = e^j e^0.
inline Multivector x_vec(int j) { return word({j, 0}); }
/// Axial 3-vector sigma_j = e^j e^0 e^5.
inline Multivector sigma(int j) { return word({j, 0, 5}); }

// Text form: signed sum "+1.0 e015 -0.5 e0", blades named by ascending labels.

inline std::string to_string(const Multivector& m) {
  std::string s;
  for (std::uint8_t i = 0; i < kBlades; ++i) {
    const Blade b(i);
    const double c = m[b];
    if (c == 0.0) continue;
    if (!s.empty()) s += ' ';
    if (!std::signbit(c)) s += '+';
    detail::append_double(s, c);
    s += ' ';
    s += b.name();
  }
  return s.empty() ? "0" : s;
}

inline std::ostream& operator<<(std::ostream& os, const Multivector& m) { return os << to_string(m); }

/// Parse the text form. Blade names may list labels in any order; the
/// reordering sign is applied (so "+1.0 e10" equals "-1.0 e01").
inline Multivector parse_multivector(std::string_view text) {
  Multivector m;
  std::istringstream in{std::string(text)};
  std::string coeff_tok;
  while (in >> coeff_tok) {
    if (coeff_tok == "0") continue;
    std::string blade_tok;
    if (!(in >> blade_tok)) throw std::invalid_argument("missing blade after coefficient '" + coeff_tok + "'");
    const char* first = coeff_tok.data();
    if (*first == '+') ++first;
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(first, coeff_tok.data() + coeff_tok.size(), c);
    if (ec != std::errc{} || ptr != coeff_tok.data() + coeff_tok.size())
      throw std::invalid_argument("bad coefficient '" + coeff_tok + "'");
    if (blade_tok == "1") {
      m += Multivector(c);
      continue;
    }
    if (blade_tok.size() < 2 || blade_tok[0] != 'e') throw std::invalid_argument("bad blade '" + blade_tok + "'");
    std::vector<int> labels;
    for (std::size_t i = 1; i < blade_tok.size(); ++i) {
      const int l = blade_tok[i] - '0';
      if (label_bit(l) < 0) throw std::invalid_argument("bad blade '" + blade_tok + "'");
      for (int seen : labels)
        if (seen == l) throw std::invalid_argument("repeated label in blade '" + blade_tok + "'");
      labels.push_back(l);
    }
    m += c * word(labels);
  }
  return m;
}

}  // namespace realdirac
