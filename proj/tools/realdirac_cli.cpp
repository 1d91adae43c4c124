// Command-line front end: verification suites, free solutions, bilinear
// tables and the Zeeman/g-factor check.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "realdirac/bilinears.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/em_pauli.hpp"
#include "realdirac/spinor.hpp"
#include "realdirac/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace realdirac;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cnum(Complex z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Spinor& s) {
  return json{{"phi_u", to_json(s.phi_u())}, {"phi_d", to_json(s.phi_d())}, {"chi_u", to_json(s.chi_u())},
              {"chi_d", to_json(s.chi_d())}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", c.passed() ? "pass" : "fail"},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"expect", c.expect == Check::Expect::at_most ? "at_most" : "above"},
                      {"criterion", c.criterion}});
  }
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}, {"notes", notes}};
}

void print_report(const Report& r) {
  std::cout << "suite " << r.suite << "\n";
  for (const Check& c : r.checks) {
    const char* rel = c.expect == Check::Expect::at_most ? "<=" : "> ";
    std::printf("  %s  %-34s %s %s %s  %s\n", c.passed() ? "PASS" : "FAIL", c.id.c_str(), sci(c.residual).c_str(), rel,
                sci(c.tolerance).c_str(), c.description.c_str());
  }
  for (const auto& [k, v] : r.notes) std::cout << "  note  " << k << " = " << v << "\n";
}

int cmd_verify(const std::string& target, bool as_json, const VerifyOptions& opt) {
  std::vector<Report> reports;
  if (target == "all") {
    reports = run_all(opt);
  } else if (auto r = run_suite(target, opt)) {
    reports.push_back(std::move(*r));
  } else {
    std::string known = "all";
    for (const auto& n : suite_names()) known += "|" + n;
    throw UsageError("unknown verify target '" + target + "' (expected " + known + ")");
  }

  std::size_t failures = 0, total = 0;
  for (const auto& r : reports) {
    failures += r.failures();
    total += r.checks.size();
  }

  if (as_json) {
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(to_json(r));
    json doc{{"tool", "realdirac"},
             {"version", std::string(kVersion)},
             {"target", target},
             {"seed", opt.seed},
             {"tolerance_override", opt.tol ? json(*opt.tol) : json(nullptr)},
             {"B", opt.B},
             {"passed", failures == 0},
             {"total_checks", total},
             {"failed_checks", failures},
             {"suites", suites}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "realdirac " << kVersion << "  seed " << opt.seed << "\n";
    for (const auto& r : reports) print_report(r);
    std::cout << (failures == 0 ? "all " + std::to_string(total) + " checks passed"
                                : std::to_string(failures) + " of " + std::to_string(total) + " checks FAILED")
              << "\n";
  }
  return failures == 0 ? 0 : kExitFail;
}

std::array<double, 3> parse_momentum(const std::string& text) {
  std::array<double, 3> p{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) {
      if (pos >= text.size() || text[pos] != ',') throw UsageError("--p expects three comma-separated numbers");
      ++pos;
    }
    const char* first = text.data() + pos;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), p[i]);
    if (ec != std::errc{}) throw UsageError("--p expects three comma-separated numbers");
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) throw UsageError("--p expects three comma-separated numbers");
  return p;
}

int cmd_solve_free(double m, const std::string& p_text, const std::string& spin_text, const std::string& energy,
                   bool as_json) {
  if (!(m > 0.0)) throw UsageError("--m must be positive");
  const auto p = parse_momentum(p_text);
  Spin spin;
  if (spin_text == "up") spin = Spin::up;
  else if (spin_text == "down") spin = Spin::down;
  else throw UsageError("--spin must be up or down");
  EnergySign sign;
  if (energy == "+" || energy == "positive") sign = EnergySign::positive;
  else if (energy == "-" || energy == "negative") sign = EnergySign::negative;
  else throw UsageError("--energy must be + or -");

  const OnShellState s = OnShellState::make(m, p, spin, sign);
  const Spinor u = free_solution(s);
  const double residual = dirac_residual(s, u).max_abs();
  const auto cr = coupled_residuals(s, u);
  const auto j = current(u);

  if (as_json) {
    json doc{{"m", s.m},
             {"E", s.E},
             {"p", json::array({s.p[0], s.p[1], s.p[2]})},
             {"spin", spin_text},
             {"energy_sign", sign == EnergySign::positive ? "+" : "-"},
             {"components", to_json(u)},
             {"literal", to_string(u)},
             {"dirac_residual", residual},
             {"coupled_residuals", json::array({cr.r1.max_abs(), cr.r2.max_abs()})},
             {"current", json::array({j[0], j[1], j[2], j[3]})}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "m = " << num(s.m) << ", E = " << num(s.E) << ", p = (" << num(s.p[0]) << ", " << num(s.p[1]) << ", "
              << num(s.p[2]) << "), spin " << spin_text << "\n";
    std::cout << "  phi_u = " << cnum(u.phi_u()) << "\n  phi_d = " << cnum(u.phi_d()) << "\n  chi_u = " << cnum(u.chi_u())
              << "\n  chi_d = " << cnum(u.chi_d()) << "\n";
    std::cout << "  literal  " << to_string(u) << "\n";
    std::cout << "  |(p - m) u|          = " << sci(residual) << "\n";
    std::cout << "  coupled residuals    = " << sci(cr.r1.max_abs()) << ", " << sci(cr.r2.max_abs()) << "\n";
    std::cout << "  current j^mu         = (" << num(j[0]) << ", " << num(j[1]) << ", " << num(j[2]) << ", " << num(j[3])
              << ")\n";
  }
  return 0;
}

int cmd_bilinears(const std::string& literal, bool as_json) {
  Spinor psi;
  try {
    psi = parse_spinor(literal);
  } catch (const SpinorParseError& e) {
    throw UsageError(std::string("cannot parse --state: ") + e.what());
  }
  bool agree = true;
  json rows = json::array();
  if (!as_json) std::printf("%-4s  %-34s  %-34s  %s\n", "kind", "direct", "expanded", "difference");
  for (const auto& k : all_bilinear_kinds()) {
    BilinearValue v = bilinear_direct(psi, psi, k);
    v.expanded = bilinear_expanded(psi, psi, k);
    const double scale = std::max(1.0, psi.norm2());
    const bool ok = v.path_difference() <= kBilinearTolerance * scale;
    agree = agree && ok;
    if (as_json) {
      rows.push_back({{"kind", k.name()},
                      {"direct", to_json(v.value)},
                      {"expanded", to_json(v.expanded)},
                      {"difference", v.path_difference()},
                      {"agree", ok}});
    } else {
      std::printf("%-4s  %-34s  %-34s  %s%s\n", k.name().c_str(), cnum(v.value).c_str(), cnum(v.expanded).c_str(),
                  sci(v.path_difference()).c_str(), ok ? "" : "  MISMATCH");
    }
  }
  if (as_json) std::cout << json{{"state", to_string(psi)}, {"agree", agree}, {"bilinears", rows}}.dump(2) << "\n";
  return agree ? 0 : kExitFail;
}

int cmd_pauli(double B, bool as_json) {
  const ZeemanResult z = zeeman_splitting(B);
  const bool ok = std::abs(z.splitting - z.expected) <= 1e-12 * std::max(1.0, std::abs(z.expected));
  if (as_json) {
    std::cout << json{{"B", B},
                      {"energy_up", z.energy_up},
                      {"energy_down", z.energy_down},
                      {"splitting", z.splitting},
                      {"expected", z.expected},
                      {"g", z.g_factor},
                      {"passed", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "B = " << num(B) << " along e3 (hbar = e = m = 1)\n";
    std::cout << "  spin up energy    " << num(z.energy_up) << "\n";
    std::cout << "  spin down energy  " << num(z.energy_down) << "\n";
    std::cout << "  splitting         " << num(z.splitting) << "   (hbar e B / m = " << num(z.expected) << ")\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", z.g_factor);
    std::cout << "  g = " << buf << "\n";
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-free Dirac equation in the real Clifford algebra Cl(2,3)", "realdirac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string target;
  bool json_out = false;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  double B = 1.0;
  auto* verify = app.add_subcommand("verify", "run property suites: all|algebra|lorentz|spinor|dirac|bilinears|symmetries|pauli");
  verify->add_option("target", target, "suite to run")->required();
  verify->add_flag("--json", json_out, "emit one JSON document");
  verify->add_option("--seed", seed, "seed for randomized instances");
  verify->add_option("--tol", tol, "override every non-exact tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--B", B, "magnetic field for the Zeeman check");

  double m = 0.0;
  std::string p_text = "0,0,0", spin_text = "up", energy = "+";
  auto* solve = app.add_subcommand("solve-free", "free plane-wave solution for given mass and momentum");
  solve->add_option("--m", m, "rest mass")->required();
  solve->add_option("--p", p_text, "covariant momentum p1,p2,p3");
  solve->add_option("--spin", spin_text, "up or down");
  solve->add_option("--energy", energy, "energy sign, + or -");
  solve->add_flag("--json", json_out, "emit JSON");

  std::string state;
  auto* bil = app.add_subcommand("bilinears", "table of the 16 bilinears of a spinor, both computation paths");
  bil->add_option("--state", state, "spinor literal (re,im);(re,im);(re,im);(re,im)")->required();
  bil->add_flag("--json", json_out, "emit JSON");

  double pauli_B = 1.0;
  auto* pauli = app.add_subcommand("pauli-check", "Zeeman splitting and g-factor of the Pauli Hamiltonian");
  pauli->add_option("--B", pauli_B, "magnetic field along e3")->required();
  pauli->add_flag("--json", json_out, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(target, json_out, VerifyOptions{seed, tol, B});
    if (*solve) return cmd_solve_free(m, p_text, spin_text, energy, json_out);
    if (*bil) return cmd_bilinears(state, json_out);
    if (*pauli) return cmd_pauli(pauli_B, json_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
