// Runs every verification suite at default tolerances and prints one line per
// acceptance criterion, aggregating the checks tagged with that criterion.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "realdirac/verify.hpp"

int main() {
  using namespace realdirac;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Report> reports = run_all();

  struct Tally {
    int checks = 0;
    int failed = 0;
    double worst = 0.0;
    std::vector<std::string> failures;
  };
  std::array<Tally, 12> tally{};
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      if (c.criterion < 1 || c.criterion > 12) continue;
      Tally& t = tally[static_cast<std::size_t>(c.criterion - 1)];
      ++t.checks;
      if (c.expect == Check::Expect::at_most) t.worst = std::max(t.worst, c.residual);
      if (!c.passed()) {
        ++t.failed;
        t.failures.push_back(r.suite + "/" + c.id);
      }
    }

  int failed = 0;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    const Tally& t = tally[i];
    const bool ok = t.checks > 0 && t.failed == 0;
    failed += ok ? 0 : 1;
    std::printf("%s  criterion %2zu  %-50s checks %2d  max residual %.3e\n", ok ? "PASS" : "FAIL", i + 1,
                criterion_titles()[i].c_str(), t.checks, t.worst);
    for (const auto& f : t.failures) std::printf("        failed: %s\n", f.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 12 criteria passed in %.2f s (seed %llu)\n", 12 - failed, secs,
              static_cast<unsigned long long>(kDefaultSeed));
  return failed == 0 ? 0 : 1;
}
