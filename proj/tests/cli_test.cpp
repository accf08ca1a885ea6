#include "valdim/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace valdim {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string scenario_path(const std::string& name) {
  return std::string(VALDIM_SCENARIO_DIR) + "/" + name + ".vdl";
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, EvalAnswersEveryQuery) {
  const CliRun r = run({"eval", scenario_path("meta")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "meta K_right: specified: true, ambiguous: false, consistent: true\n"
            "meta K_wrong: specified: true, ambiguous: false, consistent: false\n"
            "meta K_vague: specified: true, ambiguous: true, consistent: true\n"
            "meta K_silent: specified: false\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, CheckPrintsCanonicalFormThatRoundTrips) {
  const CliRun first = run({"check", scenario_path("fossowamba")});
  ASSERT_EQ(first.code, 0);
  const std::string canon_file = write_temp("canon.vdl", first.out);
  const CliRun second = run({"check", canon_file});
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(second.out, first.out);
}

TEST(CliTest, ScenarioTranscriptMatchesGoldenFile) {
  const CliRun r = run({"scenario", "wigner"});
  ASSERT_EQ(r.code, 0);
  const std::string golden = slurp(std::string(VALDIM_TEST_DATA_DIR) + "/wigner_transcript.golden");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(r.out, golden);
}

TEST(CliTest, DotExportIsDeterministic) {
  const CliRun r = run({"dot", scenario_path("wigner"), "BD"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "digraph \"BD\" {\n"
            "  rankdir=BT;\n"
            "  node [shape=plaintext];\n"
            "  \"BD.F0\";\n"
            "  \"BD.F01\";\n"
            "  \"BD.F1\";\n"
            "  \"BD.F01\" -> \"BD.F0\";\n"
            "  \"BD.F01\" -> \"BD.F1\";\n"
            "}\n");
}

TEST(CliTest, SelftestPasses) {
  const CliRun r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "selftest: ok\n");
}

TEST(CliTest, MalformedDocumentExitsTwo) {
  const std::string bad = write_temp("bad.vdl", "dim D = base{a,\n");
  const CliRun r = run({"check", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, EvaluationProblemsExitOne) {
  EXPECT_EQ(run({"eval", "/no/such/file.vdl"}).code, 1);
  EXPECT_EQ(run({"dot", scenario_path("wigner"), "Nope"}).code, 1);
  EXPECT_EQ(run({"scenario", "bogus"}).code, 1);
}

TEST(CliTest, UsageProblemsExitSixtyFour) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"check"}).code, 64);          // missing file argument
  EXPECT_EQ(run({"--bogus-flag", "selftest"}).code, 64);
}

TEST(CliTest, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check"), std::string::npos);
  EXPECT_NE(r.out.find("scenario"), std::string::npos);
}

TEST(CliTest, CarrierCapFlagIsHonoured) {
  const std::string doc = write_temp("cap.vdl", "dim P = power(base{a, b, c, d})\nhasse P\n");
  EXPECT_EQ(run({"eval", doc}).code, 0);
  const CliRun capped = run({"--max-carrier", "10", "eval", doc});
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.err.find("cap"), std::string::npos);
}

}  // namespace
}  // namespace valdim
