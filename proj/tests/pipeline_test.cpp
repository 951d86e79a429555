#include <gtest/gtest.h>

#include "orbitsum/golden.hpp"
#include "orbitsum/pipeline.hpp"

using namespace orbitsum;

namespace {

VerifyOptions options() {
  VerifyOptions o;
  o.golden_dir = ORBITSUM_GOLDEN_DIR;
  return o;
}

void expect_all_checks_pass(const VerificationReport& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << r.name << ": " << c.name << " " << c.detail;
  for (const auto& d : r.discrepancies) EXPECT_TRUE(d.arbitrated) << r.name << ": " << d.item;
}

}  // namespace

TEST(Golden, Parsing) {
  auto g = GoldenFile::parse("ring = u, v\n# note\nP = u*v + 1\nn = 7\n");
  EXPECT_EQ(g.ring().size(), 2u);
  EXPECT_EQ(g.integer("n"), 7);
  EXPECT_TRUE(g.has("P"));
  EXPECT_FALSE(g.has("Q"));
  EXPECT_THROW(g.text("Q"), Error);
  EXPECT_THROW(GoldenFile::parse("P = u\n"), Error);
  EXPECT_THROW(GoldenFile::parse("ring = u\nbroken line\n"), Error);
}

TEST(Report, StatusRules) {
  VerificationReport r;
  r.check("a", true);
  EXPECT_EQ(r.status(), Status::pass);
  r.discrepancies.push_back({"x", "1", "2", "confirmed", true});
  EXPECT_EQ(r.status(), Status::discrepancy);
  r.discrepancies.push_back({"y", "1", "2", "", false});
  EXPECT_EQ(r.status(), Status::fail);
  auto j = r.to_json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["status"], "fail");
}

TEST(Report, PhaseNamedInErrors) {
  VerificationReport r;
  try {
    timed(r, "groebner", [] { throw Error(ErrorKind::budget_exceeded, "too many pairs"); });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
    EXPECT_NE(std::string(e.what()).find("phase groebner"), std::string::npos);
  }
  ASSERT_EQ(r.timings_ms.size(), 1u);
}

TEST(Pipeline, Period3) {
  auto r = verify_period(3, 'u', options());
  expect_all_checks_pass(r);
  EXPECT_EQ(r.status(), Status::pass);
  EXPECT_TRUE(r.passed("S3 closed form"));
  const auto j = r.to_json();
  EXPECT_TRUE(j["inputs"].contains("P"));
  EXPECT_TRUE(j["inputs"].contains("B"));
}

TEST(Pipeline, Period4) {
  auto r = verify_period(4, 'u', options());
  expect_all_checks_pass(r);
  EXPECT_NE(r.status(), Status::fail);
  EXPECT_TRUE(r.passed("S4 closed form"));
}

TEST(Pipeline, EliminateV) {
  for (int n = 3; n <= 5; ++n) {
    auto r = verify_period(n, 'v', options());
    expect_all_checks_pass(r);
    EXPECT_NE(r.status(), Status::fail) << n;
  }
}

TEST(Pipeline, BudgetIsReported) {
  auto o = options();
  o.groebner.max_pair_reductions = 2;
  try {
    verify_period(4, 'u', o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
    EXPECT_NE(std::string(e.what()).find("phase groebner"), std::string::npos);
  }
}

TEST(Pipeline, BadArguments) {
  EXPECT_THROW(verify_period(6, 'u', options()), Error);
  EXPECT_THROW(verify_period(3, 'w', options()), Error);
  auto o = options();
  o.golden_dir = "/nonexistent";
  EXPECT_THROW(verify_period(3, 'u', o), Error);
}
