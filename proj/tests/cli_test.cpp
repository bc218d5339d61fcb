#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

namespace shortcycles::cli {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kK4 =
    "graph 4 6\n"
    "e 0 0 1\ne 1 0 2\ne 2 0 3\ne 3 1 2\ne 4 1 3\ne 5 2 3\n";
const std::string kOneSidedPentagon = "graph 5 5\ne 0 0 1\ne 1 1 2\ne 2 2 3 -1\ne 3 3 4\ne 4 4 0\n";

TEST(Cli, TwoSidedFromStdin) {
  const CliResult r = run({"twosided", "-"}, kK4);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "query: two_sided\ncandidates: C1=4 C2=3 C=7\n3: 0 1 2 0\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, NoneExitsTwo) {
  const CliResult r = run({"twosided", "-"}, kOneSidedPentagon);
  EXPECT_EQ(r.code, kExitNone);
  EXPECT_NE(r.out.find("NONE"), std::string::npos);
}

TEST(Cli, OddOnEvenGirthIsNotAnError) {
  const CliResult r = run({"odd", "-"}, "graph 4 4\ne 0 0 1\ne 1 1 2\ne 2 2 3\ne 3 3 0\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("NONE"), std::string::npos);
}

TEST(Cli, StructuredFormat) {
  const CliResult r = run({"--format", "structured", "even", "-"}, kK4);
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["cycles"].size(), 3u);
}

TEST(Cli, GirthAndGenus) {
  const CliResult g = run({"girth", "-"}, kK4);
  EXPECT_EQ(g.code, kExitOk);
  EXPECT_NE(g.out.find("girth: 3\n"), std::string::npos);

  const CliResult missing = run({"genus", "-"}, kK4);
  EXPECT_EQ(missing.code, kExitError);
  EXPECT_NE(missing.err.find("MissingRotation"), std::string::npos);

  const CliResult genus = run({"genus", "-"}, kK4 + "rot 0 0 1 2\nrot 1 3 0 4\nrot 2 5 1 3\nrot 3 4 2 5\n");
  EXPECT_EQ(genus.code, kExitOk);
  EXPECT_NE(genus.out.find("surface: sphere"), std::string::npos);
}

TEST(Cli, ContractibleRejectsPlanar) {
  const CliResult r = run({"contractible", "-"}, kK4 + "rot 0 0 1 2\nrot 1 3 0 4\nrot 2 5 1 3\nrot 3 4 2 5\n");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotProjectivePlane"), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"twosided", "-"}, "graph 2 1\ne 0 1 1\n").code, kExitError);
  EXPECT_EQ(run({"twosided", "-"}, "graph 4 2\ne 0 0 1\ne 1 2 3\n").code, kExitError);
  EXPECT_EQ(run({"twosided", "/nonexistent/instance.txt"}).code, kExitError);
  EXPECT_EQ(run({"nosuchcommand"}).code, kExitError);
  EXPECT_EQ(run({"--threads", "0", "girth", "-"}, kK4).code, kExitError);
  EXPECT_EQ(run({"--format", "xml", "girth", "-"}, kK4).code, kExitError);
  const CliResult loop = run({"twosided", "-"}, "graph 2 1\ne 0 1 1\n");
  EXPECT_NE(loop.err.find("LoopEdge"), std::string::npos);
  EXPECT_NE(loop.err.find("line 2"), std::string::npos);
}

TEST(Cli, GenIsDeterministicAndParses) {
  const CliResult a = run({"gen", "--n", "9", "--extra", "5", "--neg", "0.3", "--rot", "--seed", "11"});
  const CliResult b = run({"gen", "--n", "9", "--extra", "5", "--neg", "0.3", "--rot", "--seed", "11"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "-"}, a.out).code, kExitOk);
  EXPECT_EQ(run({"genus", "-"}, a.out).code, kExitOk);

  const CliResult p = run({"gen", "--n", "8", "--extra", "3", "--projective", "--seed", "5"});
  ASSERT_EQ(p.code, kExitOk);
  EXPECT_NE(run({"genus", "-"}, p.out).out.find("projective plane"), std::string::npos);
  EXPECT_NE(run({"contractible", "-"}, p.out).code, kExitError);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const CliResult inst = run({"gen", "--n", "12", "--extra", "8", "--neg", "0.5", "--seed", "3"});
  for (const char* cmd : {"twosided", "even", "odd", "girth", "verify"}) {
    const CliResult one = run({"--threads", "1", cmd, "-"}, inst.out);
    const CliResult many = run({"--threads", "8", cmd, "-"}, inst.out);
    EXPECT_EQ(one.code, many.code) << cmd;
    EXPECT_EQ(one.out, many.out) << cmd;
  }
}

TEST(Cli, TimingGoesToStderr) {
  const CliResult plain = run({"girth", "-"}, kK4);
  const CliResult timed = run({"--timing", "girth", "-"}, kK4);
  EXPECT_EQ(plain.out, timed.out);
  EXPECT_NE(timed.err.find("elapsed_ms: "), std::string::npos);
}

}  // namespace
}  // namespace shortcycles::cli
