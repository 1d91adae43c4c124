#pragma once

// Deterministic property suites. Each suite returns a Report of named checks
// with the measured residual and the tolerance it was held to. Randomized
// instances come from a per-suite std::mt19937_64 stream derived from the
// seed, so a suite gives the same numbers whether it runs alone or in "all".

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realdirac/bilinears.hpp"
#include "realdirac/clifford.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/em_pauli.hpp"
#include "realdirac/field.hpp"
#include "realdirac/lorentz.hpp"
#include "realdirac/regular_rep.hpp"
#include "realdirac/spinor.hpp"
#include "realdirac/symmetries.hpp"

namespace realdirac {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20250101;

struct Tolerances {
  double exact = 0.0;
  double algebra = 1e-12;
  double series = 1e-10;
  double random = 1e-11;
  double ideal = 1e-10;

  /// --tol replaces every non-exact level.
  static Tolerances with_override(std::optional<double> tol) {
    Tolerances t;
    if (tol) t.algebra = t.series = t.random = t.ideal = *tol;
    return t;
  }
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  double B = 1.0;
};

struct Check {
  enum class Expect { at_most, above };  // above: negative control, residual must exceed tol

  std::string id;
  std::string description;
  double residual = 0.0;
  double tolerance = 0.0;
  Expect expect = Expect::at_most;
  int criterion = 0;  // acceptance criterion number, 0 if none

  bool passed() const {
    if (std::isnan(residual)) return false;
    return expect == Expect::at_most ? residual <= tolerance : residual > tolerance;
  }
};

struct Report {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;  // recorded values, e.g. phases

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed() ? 0 : 1;
    return n;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "lorentz", "spinor", "dirac", "bilinears", "symmetries", "pauli"};
  return names;
}

inline const std::array<std::string, 12>& criterion_titles() {
  static const std::array<std::string, 12> t{
      "signature and blade orthonormality",
      "pseudoscalar structure",
      "geometric product matches regular representation",
      "rotors, boosts and metric preservation",
      "so(3,1) and su(2)+su(2) generator algebra",
      "spinor ideal action and closure",
      "free solutions and rest frame",
      "bilinears, current and conservation",
      "squared Dirac equation identity",
      "Pauli limit and g = 2",
      "discrete symmetries and Lagrangian invariance",
      "[x, p] Killing identity",
  };
  return t;
}

namespace detail {

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, const VerifyOptions& opt, std::uint64_t stream)
      : tol(Tolerances::with_override(opt.tol)), rng(opt.seed * 0x9E3779B97F4A7C15ULL + stream) {
    report.suite = std::move(name);
    report.seed = opt.seed;
  }

  void check(std::string id, std::string desc, double residual, double tolerance, int criterion = 0) {
    report.checks.push_back({std::move(id), std::move(desc), residual, tolerance, Check::Expect::at_most, criterion});
  }
  void control(std::string id, std::string desc, double residual, double threshold, int criterion = 0) {
    report.checks.push_back({std::move(id), std::move(desc), residual, threshold, Check::Expect::above, criterion});
  }
  /// Runs fn and records its residual; an exception fails the check.
  void guarded(std::string id, std::string desc, double tolerance, int criterion, const std::function<double()>& fn) {
    double r;
    try {
      r = fn();
    } catch (const IdealError& e) {
      r = std::max(e.distance_to_ideal(), 1.0);
    } catch (const std::exception&) {
      r = std::numeric_limits<double>::quiet_NaN();
    }
    check(std::move(id), std::move(desc), r, tolerance, criterion);
  }
  void note(std::string key, std::string value) { report.notes.emplace_back(std::move(key), std::move(value)); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  Multivector random_multivector(double scale = 1.0) {
    std::array<double, kBlades> c{};
    for (double& x : c) x = uniform(-scale, scale);
    return Multivector::from_coeffs(c);
  }
  Spinor random_spinor() {
    Spinor s;
    for (auto& x : s.c) x = {uniform(-1, 1), uniform(-1, 1)};
    return s;
  }
  /// Product of a general exponential with an explicit rotor and boost.
  LorentzOp random_lorentz() {
    const double pi = std::numbers::pi;
    const LorentzOp g = lorentz_exp({uniform(-pi, pi), uniform(-pi, pi), uniform(-pi, pi)},
                                    {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)});
    const int a = static_cast<int>(uniform(1, 4)), b = static_cast<int>(uniform(1, 4));
    return g * rotor(std::min(a, 3), uniform(-pi, pi)) * boost(std::min(b, 3), uniform(-1, 1));
  }
  OnShellState random_state() {
    const double m = uniform(0.5, 3.0);
    const std::array<double, 3> p{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
    const Spin spin = uniform(0, 1) < 0.5 ? Spin::up : Spin::down;
    const EnergySign sign = uniform(0, 1) < 0.5 ? EnergySign::positive : EnergySign::negative;
    return OnShellState::make(m, p, spin, sign);
  }

  Tolerances tol;
  Report report;
  std::mt19937_64 rng;
};

inline std::string fmt(double v) {
  std::string s;
  append_double(s, v);
  return s;
}

inline std::string fmt(Complex z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

}  // namespace detail

inline Report verify_algebra(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("algebra", opt, 1);
  const auto& T = s.tol;

  double sig = 0.0;
  for (int a : kLabels)
    for (int b : kLabels) sig = std::max(sig, distance(sym_part(e(a), e(b)), Multivector(a == b ? zeta(a) : 0.0)));
  s.check("signature.generators", "sym_part(e^a, e^b) = zeta^{ab} for all 25 pairs", sig, T.exact, 1);

  double ortho = 0.0;
  for (std::uint8_t i = 0; i < kBlades; ++i)
    for (std::uint8_t j = 0; j < kBlades; ++j) {
      const double sp = scalar_part(Multivector::blade(Blade(i)) * Multivector::blade(Blade(j)));
      ortho = std::max(ortho, i == j ? std::abs(std::abs(sp) - 1.0) : std::abs(sp));
    }
  s.check("signature.orthonormal", "scalar_part(a b) = 0 for distinct blades, +-1 on the diagonal", ortho, T.exact, 1);

  {
    const auto a = blade_mul(Blade::of({1}), Blade::of({1}));
    const auto b = blade_mul(Blade::of({5}), Blade::of({5}));
    const auto c = blade_mul(Blade::of({1}), Blade::of({0}));
    const bool ok = a.sign == -1 && a.out == Blade{} && b.sign == 1 && b.out == Blade{} && c.sign == -1 &&
                    c.out == Blade::of({0, 1});
    s.check("signature.blade_mul", "e1 e1 = -1, e5 e5 = +1, e1 e0 = -e01", ok ? 0.0 : 1.0, T.exact, 1);
  }

  const Multivector I = pseudoscalar();
  s.check("pseudoscalar.square", "I^2 = -1", distance(I * I, Multivector(-1.0)), T.exact, 2);
  double central = 0.0;
  for (std::uint8_t i = 0; i < kBlades; ++i) {
    const Multivector b = Multivector::blade(Blade(i));
    central = std::max(central, distance(I * b, b * I));
  }
  s.check("pseudoscalar.central", "I commutes with all 32 blades", central, T.exact, 2);
  s.check("pseudoscalar.hermite", "hermite(I) = -I", distance(hermite(I), -1.0 * I), T.exact, 2);
  s.check("pseudoscalar.reverse", "reverse(I) = I", distance(reverse(I), I), T.exact, 2);

  double oracle = 0.0, assoc = 0.0, homo = 0.0, anti = 0.0, invol = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Multivector a = s.random_multivector(), b = s.random_multivector();
    oracle = std::max(oracle, distance(a * b, oracle_gp(a, b)));
    if (n < 200) {
      const Multivector c = s.random_multivector();
      assoc = std::max(assoc, distance((a * b) * c, a * (b * c)));
      homo = std::max(homo, (left_rep(a * b) - left_rep(a) * left_rep(b)).cwiseAbs().maxCoeff());
      anti = std::max({anti, distance(hermite(a * b), hermite(b) * hermite(a)),
                       distance(reverse(a * b), reverse(b) * reverse(a)),
                       distance(parity_conj(a * b), parity_conj(a) * parity_conj(b))});
      invol = std::max({invol, distance(hermite(hermite(a)), a), distance(reverse(reverse(a)), a),
                        distance(parity_conj(parity_conj(a)), a), distance(k_conj(k_conj(a, 2), 2), a)});
    }
  }
  s.check("oracle.gp", "gp equals the regular-representation product on 1000 random pairs", oracle, T.algebra, 3);
  s.check("oracle.homomorphism", "left_rep(ab) = left_rep(a) left_rep(b)", homo, T.algebra, 3);
  s.check("product.associative", "(ab)c = a(bc) on random triples", assoc, T.algebra);
  s.check("conjugation.anti_automorphism", "hermite, reverse reverse products; parity preserves them", anti, T.algebra);
  s.check("conjugation.involution", "hermite, reverse, parity and K are involutions", invol, T.exact);

  double faithful = 0.0;
  for (std::uint8_t i = 0; i < kBlades; ++i)
    faithful = std::max(faithful, left_rep(Multivector::blade(Blade(i))).cwiseAbs().maxCoeff() == 1.0 ? 0.0 : 1.0);
  s.check("oracle.faithful", "every basis blade has a nonzero representation", faithful, T.exact, 3);

  double pauli = 0.0;
  for (int j = 1; j <= 3; ++j) {
    pauli = std::max({pauli, distance(sigma(j) * sigma(j), Multivector(1.0)), distance(x_vec(j) * x_vec(j), Multivector(1.0))});
    for (int k = 1; k <= 3; ++k) {
      if (j == k) continue;
      Multivector rhs;
      for (int l = 1; l <= 3; ++l) rhs += levi_civita(j, k, l) * (I * sigma(l));
      pauli = std::max({pauli, distance(sigma(j) * sigma(k), rhs), distance(x_vec(j) * x_vec(k), rhs)});
    }
  }
  s.check("subalgebra.pauli", "sigma_j^2 = x_j^2 = 1 and sigma_j sigma_k = eps I sigma_l", pauli, T.exact);

  {
    const double r = std::max({distance(hermite(word({0, 5, 1})), word({0, 5, 1})), distance(hermite(sigma(2)), sigma(2)),
                               distance(hermite(x_vec(1)), x_vec(1)), distance(parity_conj(x_vec(1)), -1.0 * x_vec(1)),
                               distance(parity_conj(sigma(1)), sigma(1)), distance(k_conj(e(1), 1), -1.0 * e(1)),
                               distance(k_conj(I, 3), -1.0 * I), distance(k_conj(e(0), 1), e(0))});
    s.check("conjugation.examples", "hermite, parity and K on named elements", r, T.exact);
  }

  {
    const double pi = std::numbers::pi;
    const double alpha = std::atanh(0.6);
    const double r = std::max(
        {distance(exp_mv(Multivector()), Multivector(1.0)),
         distance(exp_mv(-(pi / 4) * (I * sigma(2))), Multivector(std::cos(pi / 4)) - std::sin(pi / 4) * (I * sigma(2))),
         distance(exp_mv((alpha / 2) * x_vec(1)), Multivector(std::cosh(alpha / 2)) + std::sinh(alpha / 2) * x_vec(1))});
    s.check("exp.closed_forms", "series exponential matches cos/sin and cosh/sinh closed forms", r, T.series);
  }
  return s.report;
}

inline Report verify_lorentz(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("lorentz", opt, 2);
  const auto& T = s.tol;
  const Multivector I = pseudoscalar();
  const double pi = std::numbers::pi;

  double series = 0.0, matrix = 0.0;
  for (int j = 1; j <= 3; ++j)
    for (double t : {0.0, 0.3, pi / 2, 1.7, pi, 2 * pi, -2.2}) {
      const Multivector r = rotor(j, t).S;
      const Multivector gen = -(t / 2) * (I * sigma(j));
      series = std::max(series, distance(r, exp_mv(gen)));
      matrix = std::max(matrix, distance(r, from_vector(matrix_exp(left_rep(gen)).col(0))));
      const double a = t / 2;  // reuse as rapidity
      const Multivector b = boost(j, a).S;
      const Multivector bgen = (a / 2) * x_vec(j);
      series = std::max(series, distance(b, exp_mv(bgen)));
      matrix = std::max(matrix, distance(b, from_vector(matrix_exp(left_rep(bgen)).col(0))));
    }
  s.check("closed_form.series", "rotor/boost closed forms equal the series exponential", series, T.series, 4);
  s.check("closed_form.matrix", "rotor/boost closed forms equal the matrix exponential", matrix, T.series, 4);
  s.check("rotor.double_cover", "rotor(3, 2 pi) = -1", distance(rotor(3, 2 * pi).S, Multivector(-1.0)), T.algebra);

  double unit = 0.0, herm = 0.0, metric = 0.0, fixI = 0.0, no_e5 = 0.0;
  for (int n = 0; n < 100; ++n) {
    const LorentzOp op = s.random_lorentz();
    unit = std::max(unit, distance(reverse(op.S) * op.S, Multivector(1.0)));
    herm = std::max(herm, distance(hermite(op.S), e(0) * reverse(op.S) * e(0)));
    metric = std::max(metric, metric_preservation_check(op, T.algebra).max_residual);
    fixI = std::max(fixI, distance(frame_transform(op, I), I));
    for (std::uint8_t i = 0; i < kBlades; ++i)
      if (Blade(i).contains(5)) no_e5 = std::max(no_e5, std::abs(op.S.coeff(i)));
  }
  s.check("group.unitary", "reverse(S) S = 1 for 100 random composed S", unit, T.algebra, 4);
  s.check("group.hermite", "hermite(S) = e0 reverse(S) e0", herm, T.algebra, 4);
  s.check("group.metric", "S e^mu S~ preserves eta for 100 random composed S", metric, T.algebra, 4);
  s.check("group.pseudoscalar_fixed", "S I S~ = I", fixI, T.algebra);
  s.check("group.no_e5", "Lorentz operators contain no e5 factor", no_e5, T.exact);

  {
    const LorentzOp b = boost(1, std::atanh(0.6));
    const Multivector v = frame_transform(b, e(0));
    const double a = std::atanh(0.6);
    const double r = std::max({distance(v, std::cosh(a) * e(0) + std::sinh(a) * e(1)),
                               std::abs(v[Blade::of({0})] - 1.25), std::abs(v[Blade::of({1})] - 0.75)});
    s.check("boost.fixture", "boost of e0 at tanh a = 3/5 gives 5/4 e0 + 3/4 e1", r, T.algebra, 4);
    const Multivector viaMatrix = from_vector(matrix_exp(left_rep((a / 2) * x_vec(1))).col(0));
    s.check("boost.fixture_matrix", "the same sandwich through the matrix exponential",
            distance(viaMatrix * e(0) * reverse(viaMatrix), 1.25 * e(0) + 0.75 * e(1)), T.series, 4);
  }
  s.check("rotor.fixture", "rotor(3, pi/2) maps e1 to e2", distance(frame_transform(rotor(3, pi / 2), e(1)), e(2)),
          T.algebra);
  s.check("boost.orthogonal_axis", "boost along 1 leaves e2 untouched",
          distance(frame_transform(boost(1, 0.7), e(2)), e(2)), T.algebra);

  const CommutatorTable so = so31_table_check();
  s.check("generators.so31", "all 27 so(3,1) commutators", so.max_residual(), T.exact, 5);
  s.check("generators.so31_count", "27 relations checked", so.entries.size() == 27 ? 0.0 : 1.0, T.exact, 5);
  const CommutatorTable su = su2_table_check();
  s.check("generators.su2", "su(2)+su(2) brackets and parity swap", su.max_residual(), T.exact, 5);
  return s.report;
}

inline Report verify_spinor(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("spinor", opt, 3);
  const auto& T = s.tol;
  const Multivector P = reference_idempotent();

  s.check("idempotent.square", "P^2 = P", distance(P * P, P), T.exact, 6);
  s.check("idempotent.absorb", "e0 P = P and sigma_3 P = P",
          std::max(distance(e(0) * P, P), distance(sigma(3) * P, P)), T.exact, 6);
  s.check("idempotent.trace", "scalar_part(P) = 1/4", std::abs(scalar_part(P) - 0.25), T.exact, 6);

  double table_err = 0.0;
  try {
    const ActionTable t = build_action_table();
    ActionMatrix e0 = ActionMatrix::Zero(), s3 = ActionMatrix::Zero();
    for (int i = 0; i < 8; ++i) {
      e0(i, i) = i < 4 ? 1.0 : -1.0;
      s3(i, i) = (i / 2) % 2 == 0 ? 1.0 : -1.0;
    }
    table_err = std::max({(t[Blade{}] - ActionMatrix::Identity()).cwiseAbs().maxCoeff(),
                          (t[Blade::of({0})] - e0).cwiseAbs().maxCoeff(), (action_matrix(sigma(3)) - s3).cwiseAbs().maxCoeff()});
  } catch (const IdealError& e) {
    table_err = std::max(1.0, e.distance_to_ideal());
  }
  s.check("table.structure", "integer action table; table(1) = 1, e0 and sigma_3 diagonal", table_err, T.exact, 6);

  double homo = 0.0;
  for (int n = 0; n < 500; ++n) {
    const Multivector a = s.random_multivector(), b = s.random_multivector();
    const Spinor psi = s.random_spinor();
    homo = std::max(homo, distance(act(a * b, psi), act(a, act(b, psi))));
  }
  s.check("table.homomorphism", "act(ab, psi) = act(a, act(b, psi)) on 500 random triples", homo, T.algebra, 6);

  double eig = 0.0, roundtrip = 0.0, direct = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Spinor psi = s.random_spinor();
    const auto [phi, chi] = parity_split(psi);
    const auto [up, down] = spin_split(phi);
    eig = std::max({eig, distance(act(e(0), phi), phi), distance(act(e(0), chi), -1.0 * chi), distance(phi + chi, psi),
                    distance(act(sigma(3), up), up), distance(act(sigma(3), down), -1.0 * down),
                    distance(act(e(0) - Multivector(1.0), chi), -2.0 * chi)});
    roundtrip = std::max(roundtrip, distance(project(embed(psi)), psi));
    const Multivector a = s.random_multivector();
    direct = std::max(direct, distance(embed(act(a, psi)), a * embed(psi)));
  }
  s.check("sectors.eigen", "e0 = +-1 on phi/chi, sigma_3 = +-1 on up/down, (e0 - 1) chi = -2 chi", eig, T.algebra, 6);
  s.check("embed.roundtrip", "project(embed(psi)) = psi", roundtrip, T.algebra);
  s.check("act.matches_product", "embed(act(a, psi)) = a embed(psi)", direct, T.algebra, 6);

  s.guarded("lorentz.closure", "S psi stays in the ideal for 100 random S", T.ideal, 6, [&] {
    double r = 0.0;
    for (int n = 0; n < 100; ++n) {
      const LorentzOp op = s.random_lorentz();
      const Spinor psi = s.random_spinor();
      const Multivector m = op.S * embed(psi);
      r = std::max(r, distance(embed(project(m)), m));
    }
    return r;
  });

  {
    double thrown = 0.0;
    try {
      project(Multivector(1.0));
    } catch (const IdealError& e) {
      thrown = e.distance_to_ideal();
    }
    s.control("project.rejects", "project(1) reports a nonzero distance to the ideal", thrown, T.ideal);
  }

  {
    const double h = std::sqrt(0.5);
    const double r = std::max({distance(sp_decoupled(1, 0), Spinor{1.0, 0.0, 0.0, 0.0}),
                               distance(sp_decoupled(1, std::numbers::pi), Spinor{0.0, 1.0, 0.0, 0.0}),
                               distance(sp_decoupled(1, std::numbers::pi / 2), Spinor{h, h, 0.0, 0.0})});
    s.check("sp.decoupled", "rho R_theta on spin up gives (rho cos, rho sin)", r, T.algebra);
  }
  {
    const Spinor psi{Complex{0.5, -0.25}, 1.0, Complex{0.0, 2.0}, -0.75};
    const Spinor expected{Complex{0.25, 0.5}, Complex{0.0, 1.0}, -2.0, Complex{0.0, -0.75}};
    s.check("act.pseudoscalar", "I acts as the complex unit", distance(act(pseudoscalar(), psi), expected), T.exact);
  }
  return s.report;
}

inline Report verify_dirac(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("dirac", opt, 4);
  const auto& T = s.tol;

  double resid = 0.0, coupled = 0.0;
  for (int n = 0; n < 200; ++n) {
    const OnShellState st = s.random_state();
    const Spinor u = free_solution(st);
    resid = std::max(resid, dirac_residual(st, u).max_abs());
    const auto cr = coupled_residuals(st, u);
    coupled = std::max({coupled, cr.r1.max_abs(), cr.r2.max_abs()});
  }
  s.check("free.residual", "(p - m) u = 0 for 200 random states of both energy signs", resid, T.random, 7);
  s.check("free.coupled", "both coupled sector equations vanish", coupled, T.random, 7);

  {
    const OnShellState st = OnShellState::checked(4, 5, {0, 0, 3}, Spin::up);
    s.check("free.fixture_p3", "m=4, E=5, p=(0,0,3), up gives (1, 0, 1/3, 0)",
            distance(free_solution(st), Spinor{1.0, 0.0, 1.0 / 3.0, 0.0}), T.algebra, 7);
    const OnShellState st1 = OnShellState::checked(4, 5, {3, 0, 0}, Spin::up);
    s.check("free.fixture_p1", "m=4, E=5, p=(3,0,0), up gives (1, 0, 0, 1/3)",
            distance(free_solution(st1), Spinor{1.0, 0.0, 0.0, 1.0 / 3.0}), T.algebra);
    s.check("momentum.square", "sym_part(p, p) = m^2",
            distance(sym_part(momentum_vector(st), momentum_vector(st)), Multivector(16.0)), T.algebra);
  }

  double boosted = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double m = s.uniform(0.5, 3.0);
    const Spin spin = n % 2 == 0 ? Spin::up : Spin::down;
    const Spinor rest = free_solution(OnShellState::make(m, {0, 0, 0}, spin));
    const LorentzOp op = s.random_lorentz();
    const Multivector p = frame_transform(op, m * e(0));
    boosted = std::max(boosted, act(p - Multivector(m), act(op.S, rest)).max_abs());
  }
  s.check("free.boosted", "S u_rest solves the equation with p = S m e0 S~", boosted, T.series, 7);

  {
    const RestFrameReport up = rest_frame_check(Spinor{1.0, 0.0, 0.0, 0.0});
    const RestFrameReport odd = rest_frame_check(Spinor{0.0, 0.0, 1.0, 0.0});
    const RestFrameReport mixed = rest_frame_check(Spinor{1.0, 0.0, 1.0, 0.0});
    const double r = std::max({up.residual.max_abs(), distance(odd.residual, Spinor{0.0, 0.0, -2.0, 0.0}),
                               up.solves_rest_frame && !odd.solves_rest_frame && !mixed.solves_rest_frame ? 0.0 : 1.0,
                               odd.projector_error});
    s.check("rest.kills_chi", "(e0 - 1) psi = 0 exactly when the chi sector vanishes", r, T.exact, 7);
    const Multivector q = e(0) - Multivector(1.0);
    s.check("rest.projector", "(e0 - 1)^2 = -2 (e0 - 1)", distance(q * q, -2.0 * q), T.exact, 7);
    double neg_rest = distance(free_solution(OnShellState::make(2, {0, 0, 0}, Spin::down, EnergySign::negative)),
                               Spinor{0.0, 0.0, 0.0, 1.0});
    s.check("rest.negative", "negative energy at rest is a pure chi state", neg_rest, T.exact);
  }

  {
    const OnShellState st = OnShellState::make(1.5, {0, 0, 0});
    const double t = 0.8;
    const Spinor pw = plane_wave(st, {t, 0.3, -0.2, 0.1});
    const Spinor expected = std::exp(Complex{0.0, -1.5 * t}) * free_solution(st);
    double norm_drift = 0.0;
    const OnShellState moving = s.random_state();
    const double n0 = plane_wave(moving, {0, 0, 0, 0}).norm2();
    for (int n = 0; n < 20; ++n) {
      const std::array<double, 4> x{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3)};
      norm_drift = std::max(norm_drift, std::abs(plane_wave(moving, x).norm2() - n0));
    }
    s.check("plane_wave.rest_phase", "rest-frame plane wave carries exp(-I m t)", distance(pw, expected), T.series);
    s.check("plane_wave.norm", "plane-wave norm is independent of x", norm_drift, T.series);
    s.check("plane_wave.origin", "plane wave at x = 0 is the constant spinor",
            distance(plane_wave(moving, {0, 0, 0, 0}), free_solution(moving)), T.series);
  }

  double ortho = 0.0;
  for (int n = 0; n < 50; ++n) {
    OnShellState st = s.random_state();
    st.spin = Spin::up;
    const Spinor u = free_solution(st);
    st.spin = Spin::down;
    const Spinor d = free_solution(st);
    ortho = std::max(ortho, std::abs(dirac_conj(u)(d)));
  }
  s.check("free.spin_orthogonal", "psi-bar pairing of spin up and down at equal momentum is 0", ortho, T.random);
  return s.report;
}

inline Report verify_bilinears(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("bilinears", opt, 5);
  const auto& T = s.tol;
  const auto kinds = all_bilinear_kinds();

  double paths = 0.0, in_ideal = 0.0, j0 = 0.0, herm = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Spinor a = s.random_spinor(), b = s.random_spinor();
    for (const auto& k : kinds) {
      const BilinearValue v = bilinear_direct(a, b, k);
      paths = std::max(paths, std::abs(v.value - bilinear_expanded(a, b, k)));
      in_ideal = std::max(in_ideal, v.ideal_residual);
    }
    j0 = std::max(j0, -bilinear_direct(a, a, BilinearKind::vector(0)).value.real());
    const Complex sab = bilinear_direct(a, b, BilinearKind::scalar()).value;
    const Complex sba = bilinear_direct(b, a, BilinearKind::scalar()).value;
    const Complex pab = bilinear_direct(a, b, BilinearKind::pseudoscalar()).value;
    const Complex pba = bilinear_direct(b, a, BilinearKind::pseudoscalar()).value;
    herm = std::max({herm, std::abs(sba - std::conj(sab)), std::abs(pba + std::conj(pab)),
                     std::abs(bilinear_direct(a, a, BilinearKind::scalar()).value.imag())});
  }
  s.check("two_path.agreement", "direct and expanded values agree for 16 kinds on 200 random pairs", paths, T.random, 8);
  s.check("two_path.ideal", "raw products lie in span{P, I P}", in_ideal, T.random, 8);
  s.check("current.density_nonnegative", "j^0 >= 0 on 200 random states", std::max(0.0, j0), T.exact, 8);
  s.check("hermiticity", "scalar pairing is Hermitian and real on the diagonal; pseudoscalar is anti-Hermitian", herm,
          T.algebra);
  s.check("kinds.count", "16 bilinear kinds", kinds.size() == 16 ? 0.0 : 1.0, T.exact, 8);

  {
    const Spinor up{1.0, 0.0, 0.0, 0.0}, chi{0.0, 0.0, 1.0, 0.0};
    const double r = std::max({std::abs(bilinear(up, up, BilinearKind::scalar()).value - 1.0),
                               std::abs(bilinear(chi, chi, BilinearKind::scalar()).value + 1.0),
                               std::abs(bilinear(up, up, BilinearKind::vector(0)).value - 1.0),
                               std::abs(bilinear(up, up, BilinearKind::pseudoscalar()).value),
                               std::abs(bilinear(up, up, BilinearKind::axial(3)).value + 1.0)});
    s.check("fixtures", "rest up: S = 1, V0 = 1, P = 0, A3 = -1; pure chi: S = -1", r, T.algebra, 8);
  }

  double scalar_inv = 0.0, pseudo_inv = 0.0, norm_inv = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Spinor psi = s.random_spinor();
    const LorentzOp op = s.random_lorentz();
    const Spinor moved = act(op.S, psi);
    const auto scale = [&](Complex a) { return std::max(1.0, std::abs(a)); };
    const Complex sc = bilinear_direct(psi, psi, BilinearKind::scalar()).value;
    const Complex ps = bilinear_direct(psi, psi, BilinearKind::pseudoscalar()).value;
    scalar_inv = std::max(scalar_inv, std::abs(bilinear_direct(moved, moved, BilinearKind::scalar()).value - sc) / scale(sc));
    pseudo_inv = std::max(pseudo_inv, std::abs(bilinear_direct(moved, moved, BilinearKind::pseudoscalar()).value - ps) / scale(ps));
    const double jj = minkowski_square(current(psi));
    norm_inv = std::max(norm_inv, std::abs(minkowski_square(current(moved)) - jj) / std::max(1.0, std::abs(jj)));
  }
  s.check("lorentz.scalar", "psi-bar psi invariant under S (relative)", scalar_inv, T.random, 8);
  s.check("lorentz.pseudoscalar", "psi-bar e5 psi invariant under S (relative)", pseudo_inv, T.random, 8);
  s.check("lorentz.current_norm", "j.j invariant under S (relative)", norm_inv, T.random, 8);

  {
    const OnShellState st = OnShellState::make(4, {0, 0, 3});
    const auto j = current(normalize(free_solution(st)));
    s.check("current.velocity", "j^3 / j^0 = p^3 / E for m=4, E=5, covariant p_3 = 3", std::abs(j[3] / j[0] - st.p_upper(3) / st.E),
            T.algebra, 8);
    const auto jr = current(Spinor{1.0, 0.0, 0.0, 0.0});
    s.check("current.rest", "rest up state has current (1, 0, 0, 0)",
            std::max({std::abs(jr[0] - 1.0), std::abs(jr[1]), std::abs(jr[2]), std::abs(jr[3])}), T.algebra, 8);
  }

  {
    const OnShellState a = OnShellState::make(4, {0, 0, 3});
    const OnShellState b = OnShellState::make(4, {3, 0, 0});
    const OnShellState c = OnShellState::make(3, {0, 0, 4}, Spin::down);
    const OnShellState d = OnShellState::make(3, {4, 0, 0}, Spin::up, EnergySign::positive);
    const OnShellState na = OnShellState::make(4, {0, 0, 3}, Spin::up, EnergySign::negative);
    const OnShellState nb = OnShellState::make(4, {3, 0, 0}, Spin::down, EnergySign::negative);
    s.check("conservation.single", "single plane wave: divergence is the zero field",
            conservation_check(superpose({{1.0, a}})).max_coefficient, T.exact, 8);
    s.check("conservation.two_wave", "p=(0,0,3) and p=(3,0,0), m=4: divergence is the zero field",
            conservation_check(superpose({{1.0, a}, {Complex{0.5, 0.5}, b}})).max_coefficient, T.exact, 8);
    s.check("conservation.two_wave_spin", "mixed spins, m=3: divergence is the zero field",
            conservation_check(superpose({{1.0, c}, {Complex{0.25, -1.0}, d}})).max_coefficient, T.exact, 8);
    s.check("conservation.negative_energy", "two negative-energy waves: divergence is the zero field",
            conservation_check(superpose({{1.0, na}, {Complex{0.0, 1.0}, nb}})).max_coefficient, T.exact, 8);
    OnShellState off = b;
    off.E += 0.1;
    s.control("conservation.off_shell_control", "energy perturbed by 0.1: divergence is nonzero",
              conservation_check(superpose({{1.0, a}, {1.0, off}})).max_coefficient, 1e-6, 8);

    const OnShellState m1 = OnShellState::make(0, {0, 0, 4});
    const OnShellState m2 = OnShellState::make(0, {4, 0, 0}, Spin::down);
    s.check("axial.massless", "m = 0: axial current divergence is the zero field",
            conservation_check(superpose({{1.0, m1}, {Complex{0.0, 1.0}, m2}}), true).max_coefficient, T.exact, 8);
    s.control("axial.massive_control", "m = 3: axial current is not conserved",
              conservation_check(superpose({{1.0, c}, {1.0, d}}), true).max_coefficient, 1e-6, 8);
  }
  return s.report;
}

inline Report verify_symmetries(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("symmetries", opt, 6);
  const auto& T = s.tol;

  double cforms = 0.0, torth = 0.0, table = 0.0, swap = 0.0, invol = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Spinor psi = s.random_spinor();
    for (int j = 1; j <= 3; ++j) {
      cforms = std::max(cforms, charge_conjugation_forms(psi, j).difference);
      torth = std::max(torth, std::abs(bilinear_direct(psi, apply_T(psi, j), BilinearKind::scalar()).value));
      table = std::max(table, distance(time_reversal_mv(psi, j), embed(time_reversal_table(psi, j))));
    }
    invol = std::max({invol, distance(apply_P(apply_P(psi)), psi), distance(apply_CPT(apply_CPT(psi)), psi)});
  }
  for (int j = 1; j <= 3; ++j) {
    const SpinSwapCheck c = spin_swap_check(j, s.random_spinor());
    swap = std::max({swap, c.table_residual, c.swap_residual});
  }
  s.check("C.two_forms", "K_j(e^j psi) = e^{05} sigma_j K_j(psi) for 100 random psi, each j", cforms, T.algebra, 11);
  s.check("T.orthogonal", "psi-bar psi_T = 0 for 100 random psi, each j", torth, T.algebra, 11);
  s.check("T.table", "sigma_j K_j(psi) R_j equals the embedded component table", table, T.algebra, 11);
  s.check("T.spin_swap", "T_j exchanges the sigma_3 = +1 and -1 subspaces", swap, T.algebra, 11);
  s.check("P_CPT.involution", "P and CPT square to the identity", invol, T.exact);

  {
    const Spinor up{1.0, 0.0, 0.0, 0.0};
    const Spinor a{Complex{0.5, 0.25}, 0.0, 0.0, 0.0};
    const double r = std::max({distance(apply_P(up), up), distance(apply_P(Spinor{0.0, 0.0, 1.0, 0.0}), Spinor{0.0, 0.0, -1.0, 0.0}),
                               distance(apply_CPT(up), Spinor{0.0, 0.0, 1.0, 0.0}),
                               distance(apply_T(a, 3), Spinor{0.0, -std::conj(a.phi_u()), 0.0, 0.0}),
                               distance(apply_T(a, 1), Spinor{0.0, std::conj(a.phi_u()), 0.0, 0.0})});
    s.check("fixtures", "P, CPT and T on unit states", r, T.exact, 11);
  }

  const Spinor probe = s.random_spinor();
  for (int j = 1; j <= 3; ++j) {
    const std::string js = std::to_string(j);
    s.note("T" + js + "^2", detail::fmt(time_reversal_square_sign(j)));
    const Spinor cc = apply_C(apply_C(probe, j), j);
    s.note("C" + js + "^2", distance(cc, probe) < 1e-12 ? "1.0" : (distance(cc, -1.0 * probe) < 1e-12 ? "-1.0" : "none"));
    const Complex phase = cpt_composition_phase(j, probe);
    s.note("C" + js + "P T" + js + " / CPT", detail::fmt(phase));
    s.check("CPT.composition_" + js, "C_j P T_j = CPT with phase 1", std::abs(phase - 1.0), T.algebra);
    s.note("ideal transport R" + js, to_string(ideal_transport(j)));
  }

  double lag0 = 0.0, lag_lorentz = 0.0, lag_cpt = 0.0;
  for (int n = 0; n < 200; ++n) {
    const OnShellState st = s.random_state();
    const Spinor u = free_solution(st);
    lag0 = std::max(lag0, std::abs(lagrangian(u, st)) / std::max(1.0, u.norm2()));
    if (n < 100) {
      const Spinor psi = s.random_spinor();
      const Multivector p = momentum_vector(st);
      const Complex L = lagrangian(psi, p, st.m);
      const double scale = std::max(1.0, std::abs(L));
      lag_lorentz = std::max(lag_lorentz, std::abs(lagrangian_transformed(psi, p, st.m, s.random_lorentz()) - L) / scale);
      lag_cpt = std::max(lag_cpt, std::abs(lagrangian_cpt(psi, p, st.m) - L) / scale);
    }
  }
  s.check("lagrangian.on_shell", "L = 0 for 200 on-shell free solutions (relative)", lag0, T.algebra, 11);
  s.check("lagrangian.lorentz", "L invariant under psi -> S psi, p -> S p S~ (relative)", lag_lorentz, T.algebra, 11);
  s.check("lagrangian.cpt", "L equals its CPT-reflected form (relative)", lag_cpt, T.algebra, 11);

  {
    const std::array<double, 4> A{0.5, 0.25, -0.5, 1.0};
    const OnShellState st = OnShellState::make(4, {0, 0, 3});
    const FieldExpr psi = plane_wave_in_constant_potential(st, A, 1.0);
    const EMPotential plus = constant_potential(A, 1.0), minus = constant_potential(A, -1.0);
    double flipped = 0.0, same = 0.0;
    for (int j = 1; j <= 3; ++j) {
      const FieldExpr c = apply_C(psi, j);
      flipped = std::max(flipped, (dirac_apply(minus, c) - st.m * c).max_abs());
      same = std::max(same, (dirac_apply(plus, c) - st.m * c).max_abs());
    }
    s.check("C.charge_flip", "psi_C solves the equation with charge -e", flipped, T.algebra, 11);
    s.control("C.charge_flip_control", "psi_C does not solve the equation with charge +e", same, 1e-6);
    s.check("lagrangian.field", "field density vanishes on a solution in a constant potential",
            lagrangian_field(psi, plus, st.m).max_abs(), T.algebra, 11);
  }
  return s.report;
}

inline Report verify_pauli(const VerifyOptions& opt = {}) {
  detail::SuiteBuilder s("pauli", opt, 7);
  const auto& T = s.tol;
  auto X = [](int mu) { return FieldExpr::coordinate(mu); };

  const EMPotential magnetic = EMPotential::uniform_magnetic({0.5, -0.25, 1.0}, 0.75);
  const EMPotential electric = EMPotential::uniform_electric({1.0, 0.5, -0.25}, -0.5);
  const EMPotential wave = EMPotential::plane_wave(Wavevector{{2.0, 1.0, 0.0, 1.0}}, {0.0, 0.5, -0.25, 0.0}, 1.0);
  EMPotential mixed = EMPotential::zero(0.5);
  mixed.upper[0] = 0.25 * X(1) * X(2) + 0.5 * X(0) * X(3);
  mixed.upper[1] = 0.5 * X(2) * X(0) - 0.125 * X(3) * X(3);
  mixed.upper[2] = 0.75 * X(1) + 0.25 * X(0) * X(0);
  mixed.upper[3] = -0.5 * X(1) * X(2);
  const EMPotential& poly = mixed;

  {
    const double B0 = 1.5, E0 = 2.0;
    EMPotential sym = EMPotential::zero();
    sym.upper[1] = -0.5 * B0 * X(2);
    sym.upper[2] = 0.5 * B0 * X(1);
    const Faraday fb = faraday(sym);
    EMPotential el = EMPotential::zero();
    el.upper[0] = -E0 * X(1);
    const Faraday fe = faraday(el);
    const double r = std::max({fb.E[0].max_abs(), fb.E[1].max_abs(), fb.E[2].max_abs(), fb.B[0].max_abs(),
                               fb.B[1].max_abs(), (fb.B[2] - FieldExpr::constant(B0)).max_abs(),
                               (fe.E[0] - FieldExpr::constant(E0)).max_abs(), fe.E[1].max_abs(), fe.E[2].max_abs(),
                               fe.B[0].max_abs(), fe.B[1].max_abs(), fe.B[2].max_abs(),
                               faraday(EMPotential::zero()).bivector().max_abs()});
    s.check("faraday.fixtures", "symmetric gauge gives B along 3; -E x1 gives E along 1", r, T.exact, 9);
  }

  double wedge = 0.0, gauge = 0.0;
  const FieldExpr lambda = 0.5 * X(0) * X(1) - 0.25 * X(2) * X(2) + 0.75 * X(3);
  for (const EMPotential* a : {&magnetic, &electric, &wave, &poly}) {
    wedge = std::max(wedge, (faraday(*a).bivector() - wedge_gradient(*a)).max_abs());
    gauge = std::max(gauge, (faraday(*a).bivector() - faraday(gauge_transform(*a, lambda)).bivector()).max_abs());
  }
  s.check("faraday.wedge", "F equals grad ^ A as a field", wedge, T.exact, 9);
  s.check("faraday.gauge", "F is unchanged by A -> A + d lambda", gauge, T.exact, 9);

  const FieldExpr poly_psi =
      FieldExpr::constant(embed(Spinor{1.0, Complex{0.0, 0.5}, 0.25, Complex{-1.0, 0.0}})) * (X(1) * X(2) + 0.5 * X(0)) +
      FieldExpr::constant(embed(Spinor{0.0, 1.0, Complex{0.5, 0.5}, 0.0})) * X(3);
  const FieldExpr wave_psi = plane_wave_field(OnShellState::make(3, {0, 4, 0})) +
                             FieldExpr::constant(embed(Spinor{0.5, 0.0, 0.0, 0.25})) * X(0);
  const std::array<std::pair<const char*, const EMPotential*>, 4> pots{
      {{"constant_B", &magnetic}, {"constant_E", &electric}, {"plane_wave", &wave}, {"polynomial", &poly}}};
  for (const auto& [name, a] : pots) {
    const double r = std::max(squared_residual(*a, poly_psi).max_abs(), squared_residual(*a, wave_psi).max_abs());
    s.check(std::string("squared.") + name, std::string("P P psi = (KG + e hbar I F) psi, ") + name + " potential", r,
            T.exact, 9);
  }
  s.check("squared.hbar", "identity holds with hbar = 0.5",
          squared_residual(magnetic, wave_psi, HBar(0.5)).max_abs(), T.exact, 9);

  {
    const FieldExpr pw = plane_wave_field(OnShellState::make(4, {0, 0, 3}));
    const OnShellState st = OnShellState::make(4, {0, 0, 3});
    const FieldExpr expected =
        FieldExpr::plane_wave(wavevector(st), embed(act(momentum_vector(st), free_solution(st))));
    s.check("dirac_apply.plane_wave", "with A = 0, P on a plane wave is left multiplication by p",
            (dirac_apply(EMPotential::zero(), pw) - expected).max_abs(), T.algebra);
  }

  const FieldExpr phi = FieldExpr::constant(embed(Spinor{1.0, Complex{0.0, 0.5}, 0.0, 0.0})) * (X(1) * X(2) + X(0) * X(3)) +
                        FieldExpr::constant(embed(Spinor{0.25, -1.0, 0.0, 0.0})) * X(1);
  double reduction = 0.0, product = 0.0;
  for (const EMPotential* a : {&magnetic, &electric, &poly}) {
    const PauliOperator H = pauli_hamiltonian(*a, 2.0, HBar(0.5));
    reduction = std::max(reduction, H.reduction_residual(phi).max_abs());
    product = std::max(product, H.product_identity_residual(phi).max_abs());
  }
  s.check("pauli.reduction", "substituting chi = P phi / 2m gives hbar I d_t phi - H_P phi", reduction, T.exact, 10);
  s.check("pauli.product", "P P = P.P + hbar e (sigma, B)", product, T.exact, 10);

  {
    const PauliOperator H0 = pauli_hamiltonian(EMPotential::zero(), 2.0);
    const FieldExpr f = FieldExpr::constant(embed(Spinor{1.0, 0.0, 0.0, 0.0})) * (X(1) * X(1) + X(2) * X(3));
    FieldExpr lap;
    for (int j = 1; j <= 3; ++j) lap += f.partial(j).partial(j);
    s.check("pauli.free", "A = 0 gives the free Schrodinger form -lap / 2m", (H0.apply(f) + 0.25 * lap).max_abs(), T.exact, 10);
  }

  const ZeemanResult z = zeeman_splitting(opt.B);
  s.check("zeeman.splitting", "spin-up minus spin-down energy equals hbar e B / m", std::abs(z.splitting - z.expected),
          T.algebra, 10);
  s.check("zeeman.g", "g = 2", std::abs(z.g_factor - 2.0), T.algebra, 10);
  s.check("zeeman.eigen", "constant spin states are eigenstates of the spin term", z.eigen_residual, T.algebra, 10);
  const ZeemanResult z2 = zeeman_splitting(0.75, -0.5, 2.5, HBar(0.5));
  s.check("zeeman.scaling", "g = 2 for other hbar, e, m", std::abs(z2.g_factor - 2.0), T.algebra, 10);
  s.note("B", detail::fmt(opt.B));
  s.note("splitting", detail::fmt(z.splitting));
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", z.g_factor);
    s.note("g", buf);
  }

  double xp = 0.0;
  const auto monos = monomials_up_to(2);
  for (const Monomial& m : monos) xp = std::max(xp, xp_commutator_check(FieldExpr::atom({}, m, 1.0)).max_residual());
  s.check("xp.identity", "(x grad - grad x) f matches both expansions on all monomials of degree <= 2", xp, T.exact, 12);
  s.check("xp.count", "15 monomials of degree <= 2", monos.size() == 15 ? 0.0 : 1.0, T.exact, 12);
  s.check("xp.constant", "f = 1 gives -4", (xp_commutator_check(FieldExpr::constant(1.0)).direct - FieldExpr::constant(-4.0)).max_abs(),
          T.exact, 12);
  return s.report;
}

/// Runs one named suite; returns nullopt for an unknown name.
inline std::optional<Report> run_suite(std::string_view name, const VerifyOptions& opt = {}) {
  if (name == "algebra") return verify_algebra(opt);
  if (name == "lorentz") return verify_lorentz(opt);
  if (name == "spinor") return verify_spinor(opt);
  if (name == "dirac") return verify_dirac(opt);
  if (name == "bilinears") return verify_bilinears(opt);
  if (name == "symmetries") return verify_symmetries(opt);
  if (name == "pauli") return verify_pauli(opt);
  return std::nullopt;
}

inline std::vector<Report> run_all(const VerifyOptions& opt = {}) {
  std::vector<Report> out;
  for (const auto& n : suite_names()) out.push_back(*run_suite(n, opt));
  return out;
}

}  // namespace realdirac
