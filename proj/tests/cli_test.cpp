#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphon/cli.hpp"
#include "graphon/rational.hpp"

namespace graphon {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("graphon_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--w", "half", "--x", "0.5", "--y", "0.5", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"sample", "--w", "half", "--n", "5"}).code, 2);
  const Result r = run_cli({"eval", "--x", "0.5", "--y", "0.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(Cli, EvalSpecs) {
  EXPECT_EQ(run_cli({"eval", "--w", "half", "--x", "0.9", "--y", "0.2"}).out, "1\n");
  EXPECT_EQ(run_cli({"eval", "--w", "const:1/3", "--x", "0.1", "--y", "0.2"}).out, "0.333333333333\n");
  EXPECT_EQ(run_cli({"eval", "--w", "half", "--x", "1.5", "--y", "0.2"}).code, 2);
}

TEST_F(Cli, BuildThenEvalQxQ) {
  const std::string desc = path("w0.ug");
  const Result b = run_cli({"build", "--wf", "half", "--depth", "6", "--bits", "64", "--out", desc});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("truncation_error_bound"), std::string::npos);
  const Result e = run_cli({"eval", "--w0", desc, "--x", "0.95", "--y", "0.95"});
  // 0.95 lies in R = [13/14, 1); Q = [8/14, 13/14) is tested separately.
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(run_cli({"eval", "--w0", desc, "--x", "0.6", "--y", "0.9"}).out, "1\n");
  // R x R: k/18 with k = 9.
  EXPECT_EQ(e.out, "0.5\n");
}

TEST_F(Cli, DensityCherryInduced) {
  const std::string g = write("cherry.g", "graph 3\n0 1\n1 2\n");
  const std::string w = write("const.sg", "stepgraphon 1\nparts 1\nbounds 0 1\n1/4\n");
  const Result r = run_cli({"density", "--w", w, "--graph", g, "--induced", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "9/64\n");
  const Result d = run_cli({"density", "--w", w, "--graph", g, "--induced"});
  EXPECT_EQ(d.out, "0.140625\n");
  EXPECT_EQ(run_cli({"density", "--w", w, "--graph", g}).out, "0.0625\n");
}

TEST_F(Cli, DensityDecoratedTwoPartConfiguration) {
  const std::string w =
      write("two_part.sg", "stepgraphon 1\nparts 2\nbounds 0 1/2 1\n1/2 1/3\n1/3 1\n");
  const std::string dg = write("two_part.dg",
                               "graph 4\nroot 0\nroot 1\npart 2 1\npart 3 1\n"
                               "0 1\n0 2\n0 3\n1 3\n2 3\nnonedge 1 2\n");
  const Result r = run_cli({"density", "--w", w, "--decorated", dg, "--roots", "0.1,0.3", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2/81\n");
}

TEST_F(Cli, Gamma4AndCutNorm) {
  EXPECT_EQ(run_cli({"gamma4", "--w", "const:1/2", "--exact"}).out, "1/16\n");
  const std::string f = write("pm.sf", "stepgraphon 1\nparts 2\nasymmetric\nbounds 0 1/2 1\n1 -1\n-1 1\n");
  const Result c = run_cli({"cutnorm", "--w", f});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "cut_norm 0.25");
  EXPECT_NE(c.out.find("exact true"), std::string::npos);
}

TEST_F(Cli, RegularityCertifies) {
  const Result r = run_cli({"regularity", "--w", "checker:10", "--eps", "0.25"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 15), "certified true\n");
  EXPECT_EQ(run_cli({"regularity", "--w", "checker:10", "--eps", "1e-6", "--max-iterations", "0"}).code, 1);
}

TEST_F(Cli, SampleIsDeterministic) {
  const std::vector<std::string> args{"sample", "--w", "half", "--n", "50", "--seed", "7"};
  const Result a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 9), "graph 50\n");
  EXPECT_NE(a.out, run_cli({"sample", "--w", "half", "--n", "50", "--seed", "8"}).out);
}

TEST_F(Cli, VerifyPasses) {
  const Result r = run_cli({"verify", "--wf", "half", "--depth", "8", "--bits", "64", "--grid", "4096"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find(" FAIL "), std::string::npos);
  EXPECT_NE(r.out.find("CHECK degree.A PASS"), std::string::npos);
}

TEST_F(Cli, VerifyFromStepFile) {
  const std::string w = write("steps.sg", "stepgraphon 1\nparts 2\nbounds 0 1/2 1\n1/4 3/4\n3/4 1/8\n");
  const Result r = run_cli({"verify", "--wf", w, "--depth", "6", "--bits", "2048", "--exact"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("CHECK target.exact"), std::string::npos);
}

TEST_F(Cli, BuildEncodeDecodeRoundTrip) {
  const std::string desc = path("w0.ug");
  ASSERT_EQ(run_cli({"build", "--wf", "const:3/8", "--depth", "6", "--bits", "4096", "--exact", "--out", desc}).code, 0);
  const Result d = run_cli({"encode", "--w0", desc, "--decode", "--dmax", "1"});
  ASSERT_EQ(d.code, 0) << d.err;
  std::istringstream lines(d.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::string tag, value, digits;
    unsigned dd, s, t;
    in >> tag >> dd >> s >> t >> value >> digits;
    EXPECT_EQ(tag, "delta");
    EXPECT_EQ(value, "3/8") << line;
    ++count;
  }
  EXPECT_EQ(count, 5);
  const Result e = run_cli({"encode", "--wf", "const:1/2", "--bits", "6"});
  EXPECT_EQ(e.out, "010000\n");
}

TEST_F(Cli, RenderWritesPgm) {
  const std::string out = path("half.pgm");
  ASSERT_EQ(run_cli({"render", "--w", "half", "--n", "4", "--out", out}).code, 0);
  std::ifstream in(out);
  std::string magic;
  in >> magic;
  EXPECT_EQ(magic, "P2");
}

TEST_F(Cli, ParseErrorsReportLineAndColumn) {
  const std::string bad = write("bad.sg", "stepgraphon 1\nparts 2\nbounds 0 1/2 1\n1/4 x\n3/4 1/8\n");
  const Result r = run_cli({"gamma4", "--w", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4, column 5"), std::string::npos) << r.err;
  const std::string bad_desc = write("bad.ug", "universal 1\nwf half\ndepth many\n");
  const Result d = run_cli({"eval", "--w0", bad_desc, "--x", "0.1", "--y", "0.1"});
  EXPECT_EQ(d.code, 2);
  EXPECT_NE(d.err.find("line 3"), std::string::npos) << d.err;
}

}  // namespace
}  // namespace graphon
