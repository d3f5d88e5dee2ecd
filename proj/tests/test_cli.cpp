#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "subcodes/cli.hpp"
#include "subcodes/serialize.hpp"

using namespace subcodes;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("subcodes_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VersionAndUsage) {
  EXPECT_EQ(run({"--version"}).status, 0);
  EXPECT_EQ(run({"nonsense"}).status, 2);
  EXPECT_EQ(run({"construct", "gabidulin"}).status, 2);
  EXPECT_EQ(run({"construct", "unknown-kind", "--n", "3"}).status, 2);
  EXPECT_EQ(run({"construct", "spread", "--k", "2", "--n", "5"}).status, 2);
}

TEST_F(Cli, ConstructGabidulinToStdout) {
  const auto r = run({"construct", "gabidulin", "--n", "3", "--t", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto code = rank_code_from_json(parse_json(r.out));
  EXPECT_EQ(code.size(), 64u);
  EXPECT_EQ(code.declared_distance, 2u);
}

TEST_F(Cli, ConstructWritesManifest) {
  const auto out = path("spread.json");
  const auto r = run({"--out", out, "construct", "spread", "--k", "2", "--n", "4"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto sc = subspace_code_from_json(parse_json(read_file(out)));
  EXPECT_EQ(sc.size(), 5u);
  const auto m = parse_json(read_file(out + ".manifest.json"));
  EXPECT_EQ(m.at("command"), "construct");
  EXPECT_EQ(m.at("params").at("k"), "2");
  EXPECT_EQ(m.at("seed"), 1);
  EXPECT_EQ(m.at("outputs").at(0).at("sha256"), sha256_file(out));
  EXPECT_FALSE(m.at("modulus").is_null());
}

TEST_F(Cli, SingerDifferenceSet) {
  const auto r = run({"construct", "singer-ds", "--n", "4"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j.at("v"), 15);
  EXPECT_EQ(j.at("k"), 7);
  EXPECT_EQ(j.at("lambda"), 3);
  EXPECT_EQ(run({"construct", "singer-ds", "--n", "2"}).status, 2);
}

TEST_F(Cli, DerivedCodesAndMetric) {
  const auto sp = path("spread.json"), av = path("av.json");
  ASSERT_EQ(run({"--out", sp, "construct", "spread", "--k", "2", "--n", "4"}).status, 0);
  const auto r = run({"--out", av, "construct", "all-vectors", "--from", sp, "--l", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto m = run({"--format", "csv", "metric", av, "--metric", "insdel"});
  ASSERT_EQ(m.status, 0) << m.err;
  EXPECT_EQ(m.out.substr(0, m.out.find(',')), "insdel");
  EXPECT_NE(m.out.find(",6,"), std::string::npos);
  EXPECT_EQ(run({"metric", sp, "--metric", "subset"}).status, 2);
  const auto sub = run({"metric", sp, "--metric", "subspace"});
  EXPECT_EQ(parse_json(sub.out).at("min"), 4);
}

TEST_F(Cli, MetricNeedsTwoCodewords) {
  const auto one = path("one.json");
  std::ofstream(one) << R"({"kind":"vector_code","field":{"q":2,"n":1,"modulus":[0,1]},"length":2,
                          "codewords":[[[1],[0]]]})";
  const auto r = run({"metric", one, "--metric", "hamming"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("error: TooFewCodewords"), std::string::npos) << r.err;
  EXPECT_EQ(run({"metric", path("missing.json"), "--metric", "hamming"}).status, 2);
}

TEST_F(Cli, VerifySuite) {
  const auto r = run({"verify", "--suite", "delsarte"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).status, 2);
}

TEST_F(Cli, BoundsTable) {
  const auto r = run({"--format", "csv", "bounds", "--n", "4", "--q", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("levenshtein,n=4;q=2,4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("klo,q=2,3"), std::string::npos) << r.out;
  const auto small = run({"--format", "csv", "bounds", "--n", "2", "--q", "2"});
  EXPECT_EQ(small.out.find("klo"), std::string::npos);
  const auto hs = run({"bounds", "--n", "6", "--k", "2"});
  const auto j = parse_json(hs.out);
  bool found = false;
  for (const auto& b : j.at("bounds"))
    if (b.at("bound") == "half_singleton") found = b.at("value") == 8;
  EXPECT_TRUE(found) << hs.out;
}

TEST_F(Cli, SimulateDeterministic) {
  const auto sp = path("spread.json"), av = path("av.json");
  ASSERT_EQ(run({"--out", sp, "construct", "spread", "--k", "2", "--n", "4"}).status, 0);
  ASSERT_EQ(run({"--out", av, "construct", "all-vectors", "--from", sp, "--l", "3"}).status, 0);
  const auto t1 = path("t1.csv"), t2 = path("t2.csv");
  const auto a = run({"--seed", "5", "--out", t1, "simulate", av, "--del", "2", "--trials", "200"});
  const auto b = run({"--seed", "5", "--out", t2, "simulate", av, "--del", "2", "--trials", "200"});
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(read_file(t1), read_file(t2));
  EXPECT_EQ(read_file(t1 + ".summary.json"), read_file(t2 + ".summary.json"));
  EXPECT_EQ(parse_json(a.out).at("success_rate"), 1.0);
  const auto zero = run({"simulate", av, "--trials", "0"});
  EXPECT_EQ(zero.status, 0) << zero.err;
  EXPECT_EQ(parse_json(zero.out).at("trials"), 0);
}

TEST_F(Cli, ReplayMatchesAndDetectsTampering) {
  const auto out = path("g.json");
  ASSERT_EQ(run({"--out", out, "construct", "lifted-mrd", "--n", "3", "--t", "1"}).status, 0);
  const auto ok = run({"replay", out + ".manifest.json"});
  EXPECT_EQ(ok.status, 0) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("match"), std::string::npos);
  // Replay regenerates outputs, so tamper with the manifest's recorded hash.
  auto m = parse_json(read_file(out + ".manifest.json"));
  m["outputs"][0]["sha256"] = std::string(64, '0');
  std::ofstream(path("bad.manifest.json")) << dump(m);
  const auto bad = run({"replay", path("bad.manifest.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("MISMATCH"), std::string::npos);
}

TEST_F(Cli, FoldVectorCode) {
  const auto sp = path("spread.json"), span = path("span.json");
  ASSERT_EQ(run({"--out", sp, "construct", "spread", "--k", "2", "--n", "4"}).status, 0);
  ASSERT_EQ(run({"--out", span, "construct", "span", "--from", sp, "--l", "4"}).status, 0);
  const auto r = run({"fold", span, "--s", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto fc = folded_code_from_json(parse_json(r.out));
  EXPECT_EQ(fc.block_len, 2u);
  EXPECT_EQ(fc.size(), 5u);
}
