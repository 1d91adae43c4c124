#pragma once

// Left-regular representation of Cl(2,3) as 32x32 real matrices. Built from
// the generator actions via `reduce_word` (bubble-sort reduction), so it shares
// no sign logic with the Cayley table behind `operator*`. Used as an oracle.

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "realdirac/clifford.hpp"

namespace realdirac {

using RepMatrix = Eigen::Matrix<double, kBlades, kBlades>;
using RepVector = Eigen::Matrix<double, kBlades, 1>;

inline RepVector to_vector(const Multivector& m) {
  RepVector v;
  for (std::size_t i = 0; i < kBlades; ++i) v(static_cast<Eigen::Index>(i)) = m.coeff(i);
  return v;
}

inline Multivector from_vector(const RepVector& v) {
  std::array<double, kBlades> c{};
  for (std::size_t i = 0; i < kBlades; ++i) c[i] = v(static_cast<Eigen::Index>(i));
  return Multivector::from_coeffs(c);
}

namespace detail {

// Matrix of left multiplication by a single generator.
inline RepMatrix generator_matrix(int label) {
  RepMatrix g = RepMatrix::Zero();
  for (std::uint8_t col = 0; col < kBlades; ++col) {
    std::vector<int> w{label};
    for (int l : Blade(col).labels()) w.push_back(l);
    const auto r = reduce_word(w);
    g(r.out.mask, col) = r.sign;
  }
  return g;
}

struct BladeMatrices {
  std::array<RepMatrix, kBlades> of;
};

inline const BladeMatrices& blade_matrices() {
  static const BladeMatrices table = [] {
    std::array<RepMatrix, kGenerators> gens;
    for (std::size_t b = 0; b < kGenerators; ++b) gens[b] = generator_matrix(kLabels[b]);
    BladeMatrices t;
    for (std::uint8_t i = 0; i < kBlades; ++i) {
      RepMatrix m = RepMatrix::Identity();
      for (int l : Blade(i).labels()) m = m * gens[static_cast<std::size_t>(label_bit(l))];
      t.of[i] = m;
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Column b holds the coefficients of a * blade_b.
inline RepMatrix left_rep(const Multivector& a) {
  const auto& bm = detail::blade_matrices();
  RepMatrix r = RepMatrix::Zero();
  for (std::size_t i = 0; i < kBlades; ++i) {
    const double c = a.coeff(i);
    if (c != 0.0) r += c * bm.of[i];
  }
  return r;
}

/// Product recovered from the first column of left_rep(a) * left_rep(b).
inline Multivector oracle_gp(const Multivector& a, const Multivector& b) {
  const RepMatrix prod = left_rep(a) * left_rep(b);
  return from_vector(prod.col(0));
}

/// Scaling-and-squaring Taylor exponential.
inline RepMatrix matrix_exp(const RepMatrix& m) {
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const RepMatrix x = m * std::ldexp(1.0, -squarings);
  RepMatrix sum = RepMatrix::Identity();
  RepMatrix term = RepMatrix::Identity();
  for (int n = 1; n <= 24; ++n) {
    term = term * x / static_cast<double>(n);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace realdirac
