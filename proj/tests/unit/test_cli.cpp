#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hyperlag/pattern_io.hpp"

using namespace hyperlag;
using namespace hyperlag::tools;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hyperlag_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(Cli, BuildPkWritesE2) {
  auto r = run({"pattern", "build-pk", "--k", "2", "-o", path("p2.pat")});
  EXPECT_EQ(r.code, kExitOk);
  auto p = read_pattern_file(path("p2.pat"));
  EXPECT_EQ(p.edge_count(), 18u);
  EXPECT_EQ(p, build_pk(2));
}

TEST_F(Cli, PlusSAndInfo) {
  ASSERT_EQ(run({"pattern", "build-pk", "--k", "1", "-o", path("p1.pat")}).code, 0);
  auto info = run({"pattern", "info", path("p1.pat")});
  EXPECT_EQ(info.code, 0);
  EXPECT_EQ(info.out, "r=3 m=3 edges=3\n");
  auto lifted = run({"pattern", "plus-s", "--s", "1", path("p1.pat")});
  EXPECT_EQ(lifted.code, 0);
  EXPECT_EQ(lifted.out, "4 4\n1 2 3 4\n1 3 3 4\n2 3 3 4\n");
}

TEST_F(Cli, RemoveIndexNamedAndBlowup) {
  ASSERT_EQ(run({"pattern", "named", "fano", "-o", path("fano.pat")}).code, 0);
  auto drop = run({"pattern", "remove-index", "--i", "1", path("fano.pat")});
  EXPECT_EQ(drop.code, 0);
  EXPECT_EQ(drop.out, "3 1\n");
  auto blow = run({"pattern", "blowup", path("fano.pat"), "--parts", "2,2"});
  EXPECT_EQ(blow.code, 0);
  EXPECT_EQ(blow.out.substr(0, 4), "4 3\n");
  auto capped = run({"pattern", "blowup", path("fano.pat"), "--parts", "50,50", "--edge-cap", "10"});
  EXPECT_EQ(capped.code, kExitResourceCap);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"pattern", "build-pk", "--k", "0"}).code, kExitInputError);
  EXPECT_EQ(run({"pattern", "info", path("missing.pat")}).code, kExitInputError);
  write_text_file(path("bad.pat"), "3 3\n1 2\n");
  auto bad = run({"pattern", "info", path("bad.pat")});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_TRUE(contains(bad.err, "line 2"));
  EXPECT_EQ(run({"lagrangian", path("bad.pat")}).code, kExitInputError);
  EXPECT_EQ(run({"verify-all", "--k-max", "0"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
}

TEST_F(Cli, LagrangianP1) {
  ASSERT_EQ(run({"pattern", "build-pk", "--k", "1", "-o", path("p1.pat")}).code, 0);
  auto r = run({"lagrangian", path("p1.pat"), "--json", path("p1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0.57735026"));
  EXPECT_TRUE(contains(r.out, "certified  yes"));
  EXPECT_TRUE(contains(r.out, "restarts"));
  EXPECT_TRUE(std::filesystem::exists(path("p1.json")));
}

TEST_F(Cli, LagrangianFanoAndDensity) {
  ASSERT_EQ(run({"pattern", "named", "fano", "-o", path("fano.pat")}).code, 0);
  auto r = run({"lagrangian", path("fano.pat"), "--density-n", "40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0.75"));
  EXPECT_TRUE(contains(r.out, "density"));
}

TEST_F(Cli, NonMinimalMargin) {
  ASSERT_EQ(run({"pattern", "named", "nonminimal-2graph", "-o", path("nonmin.pat")}).code, 0);
  auto r = run({"lagrangian", path("nonmin.pat"), "--minimality"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "not minimal: margin(i=3) = 0.000000"));
}

TEST_F(Cli, ConfigFileAndFlagPrecedence) {
  ASSERT_EQ(run({"pattern", "build-pk", "--k", "1", "-o", path("p1.pat")}).code, 0);
  write_text_file(path("opt.cfg"), "restarts=5\nseed=3\n");
  auto from_file = run({"lagrangian", path("p1.pat"), "--config", path("opt.cfg")});
  EXPECT_EQ(from_file.code, 0);
  EXPECT_TRUE(contains(from_file.out, "seed 3"));
  auto overridden = run({"lagrangian", path("p1.pat"), "--config", path("opt.cfg"), "--seed", "8"});
  EXPECT_TRUE(contains(overridden.out, "seed 8"));
  write_text_file(path("bad.cfg"), "restarts=x\n");
  EXPECT_EQ(run({"lagrangian", path("p1.pat"), "--config", path("bad.cfg")}).code, kExitInputError);
}

TEST_F(Cli, TowerEmitAndCertificate) {
  auto poly = run({"tower", "--k", "2", "--emit-poly"});
  EXPECT_EQ(poly.code, 0);
  EXPECT_TRUE(contains(poly.out, "3 0 -18 0 23\n"));
  auto cert = run({"tower", "--k", "5", "--json", path("t5.json")});
  EXPECT_EQ(cert.code, 0);
  EXPECT_TRUE(contains(cert.out, "valid"));
  EXPECT_TRUE(contains(cert.out, "degree          32"));
  EXPECT_TRUE(std::filesystem::exists(path("t5.json")));
  auto file = run({"tower", "--k", "3", "-o", path("p3.txt")});
  EXPECT_EQ(file.code, 0);
  std::ifstream in(path("p3.txt"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "23 0 -276 0 1170 0 -2052 0 1263");
}

TEST_F(Cli, TowerCap) {
  auto r = run({"tower", "--k", "99"});
  EXPECT_EQ(r.code, kExitResourceCap);
  EXPECT_TRUE(contains(r.err, "cap"));
}

TEST_F(Cli, VerifyAllSmall) {
  auto a = run({"verify-all", "--k-max", "1", "--instances", "10", "--seed", "7"});
  auto b = run({"verify-all", "--k-max", "1", "--instances", "10", "--seed", "7"});
  EXPECT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "PASS"));
}

TEST_F(Cli, VerifyAllJsonDeterministic) {
  ASSERT_EQ(run({"verify-all", "--k-max", "2", "--instances", "10", "--json", path("a.json")}).code, 0);
  ASSERT_EQ(run({"verify-all", "--k-max", "2", "--instances", "10", "--json", path("b.json"), "--threads", "3"}).code, 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const auto a = slurp(path("a.json"));
  EXPECT_FALSE(a.empty());
  EXPECT_FALSE(contains(a, "wall_time_s"));
  // The threads input is not echoed, so reports match byte for byte.
  EXPECT_EQ(a, slurp(path("b.json")));
}
