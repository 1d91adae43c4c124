#include <gtest/gtest.h>

#include <set>

#include "realdirac/verify.hpp"

using namespace realdirac;

TEST(Verify, EverySuitePassesAtDefaults) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name);
    ASSERT_TRUE(r.has_value()) << name;
    EXPECT_FALSE(r->checks.empty()) << name;
    for (const auto& c : r->checks) EXPECT_TRUE(c.passed()) << name << "/" << c.id << " residual " << c.residual;
  }
}

TEST(Verify, UnknownSuite) { EXPECT_FALSE(run_suite("nonsense").has_value()); }

TEST(Verify, EveryCriterionIsCovered) {
  std::set<int> seen;
  for (const auto& r : run_all())
    for (const auto& c : r.checks)
      if (c.criterion > 0) seen.insert(c.criterion);
  for (int k = 1; k <= 12; ++k) EXPECT_TRUE(seen.count(k)) << "criterion " << k;
}

TEST(Verify, NegativeControlsExist) {
  int controls = 0;
  for (const auto& r : run_all())
    for (const auto& c : r.checks) controls += c.expect == Check::Expect::above ? 1 : 0;
  EXPECT_GE(controls, 3);
}

TEST(Verify, DeterministicForASeed) {
  VerifyOptions a;
  a.seed = 7;
  const Report r1 = *run_suite("bilinears", a);
  const Report r2 = *run_suite("bilinears", a);
  ASSERT_EQ(r1.checks.size(), r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) EXPECT_EQ(r1.checks[i].residual, r2.checks[i].residual);
}

TEST(Verify, ToleranceOverride) {
  const Tolerances t = Tolerances::with_override(1e-3);
  EXPECT_EQ(t.algebra, 1e-3);
  EXPECT_EQ(t.ideal, 1e-3);
  EXPECT_EQ(t.exact, 0.0);
  VerifyOptions tight;
  tight.tol = 1e-30;
  EXPECT_FALSE(run_suite("lorentz", tight)->passed());
}

TEST(Verify, CheckSemantics) {
  Check c{"x", "d", 1e-3, 1e-2, Check::Expect::at_most, 1};
  EXPECT_TRUE(c.passed());
  c.expect = Check::Expect::above;
  EXPECT_FALSE(c.passed());
  c.residual = std::nan("");
  EXPECT_FALSE(c.passed());
}

TEST(Verify, PauliNotesRecordGFactor) {
  VerifyOptions o;
  o.B = 2.5;
  const Report r = *run_suite("pauli", o);
  bool found = false;
  for (const auto& [k, v] : r.notes)
    if (k == "g") {
      found = true;
      EXPECT_EQ(v, "2.000000");
    }
  EXPECT_TRUE(found);
}
