#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + ORBITSUM_CLI + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "orbitsum_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify 7").code, 2);
  EXPECT_EQ(run("verify 3 --eliminate w").code, 2);
  EXPECT_EQ(run("roots").code, 2);
  EXPECT_EQ(run("roots --s5 abc").code, 2);
  EXPECT_EQ(run("oracle --period 5").code, 2);
  EXPECT_EQ(run("oracle --s5 0 --period 4").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, VerifyPeriod3) {
  auto r = run("verify 3");
  ASSERT_EQ(r.code, 0);
  auto j = r.doc();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["inputs"].contains("P"));
  EXPECT_TRUE(j["timings_ms"].contains("groebner"));
}

TEST(Cli, VerifyPeriod4EliminateVToFile) {
  const auto out = scratch("v4.json");
  auto r = run("verify 4 --eliminate v --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto j = json::parse(slurp(out));
  EXPECT_EQ(j["name"], "verify-4-v");
  EXPECT_NE(j["status"], "fail");
}

TEST(Cli, PairBudget) {
  auto r = run("verify 4", "ORBITSUM_PAIR_BUDGET=2");
  EXPECT_EQ(r.code, 5);
  auto j = r.doc();
  EXPECT_EQ(j["error"]["kind"], "budget_exceeded");
  EXPECT_EQ(run("verify 3", "ORBITSUM_PAIR_BUDGET=lots").code, 2);
}

TEST(Cli, RootsAtZero) {
  const auto out = scratch("roots0.json");
  auto r = run("roots --s5 0 --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(slurp(out));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["actual"]["root_count"], 15);
  EXPECT_EQ(j["actual"]["real_count"], 5);
  EXPECT_TRUE(j["actual"].contains("min_gap"));
  EXPECT_EQ(j["inputs"]["polynomial"], j["expected"]["polynomial"]);
  const std::string csv = slurp(scratch("roots0.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "re,im,residual,orbit_id,sum_re,sum_im");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 16);
}

TEST(Cli, RootsExtremeAndComplex) {
  auto big = run("roots --s5 1e9");
  ASSERT_EQ(big.code, 0);
  EXPECT_EQ(big.doc()["actual"]["root_count"], 15);
  auto z = run("roots --s5 0.5-1.25i");
  ASSERT_EQ(z.code, 0);
  EXPECT_EQ(z.doc()["inputs"]["s5"], "0.5-1.25i");
}

TEST(Cli, OracleS5) {
  const auto out = scratch("oracle.json");
  const auto csv = scratch("orbits.csv");
  auto r = run("oracle --s5 0 --period 5 --samples 3 --out '" + out.string() + "' --csv '" + csv.string() + "'");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(slurp(out));
  EXPECT_EQ(j["actual"]["distinct_orbits"], 3);
  EXPECT_LE(j["sweep"]["max_distinct_orbits"].get<int>(), 3);
  EXPECT_TRUE(j["violations"].empty());
  const std::string text = slurp(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 16);
}

TEST(Cli, OracleC) {
  auto r = run("oracle --c 0 --period 1");
  ASSERT_EQ(r.code, 0);
  auto j = r.doc();
  ASSERT_EQ(j["actual"]["orbit_count"], 2);
  auto r5 = run("oracle --c 0.25+0.3i --period 5 --samples 2");
  EXPECT_EQ(r5.code, 0);
  EXPECT_LE(r5.doc()["actual"]["orbit_count"].get<int>(), 6);
}

TEST(Cli, Groebner) {
  const auto in = scratch("ideal.txt");
  std::ofstream(in) << "x^2 + y^2 - 1\nx*y - 1\n";
  auto r = run("groebner --in '" + in.string() + "' --order grlex:x,y");
  ASSERT_EQ(r.code, 0);
  auto j = r.doc();
  EXPECT_EQ(j["actual"]["basis"].size(), 3u);
  auto lex = run("groebner --in '" + in.string() + "' --order lex:x,y --homogenize");
  ASSERT_EQ(lex.code, 0);
  EXPECT_EQ(lex.doc()["status"], "pass");
  EXPECT_EQ(run("groebner --in '" + in.string() + "' --order lex:x").code, 2);
  EXPECT_EQ(run("groebner --in /nonexistent --order lex:x,y").code, 2);
  std::ofstream(scratch("bad.txt")) << "x^^2\n";
  EXPECT_EQ(run("groebner --in '" + scratch("bad.txt").string() + "' --order lex:x,y").code, 2);
}

TEST(Cli, Deterministic) {
  auto a = run("oracle --c -0.3+0.2i --period 4").doc();
  auto b = run("oracle --c -0.3+0.2i --period 4").doc();
  EXPECT_EQ(a["actual"], b["actual"]);
}
