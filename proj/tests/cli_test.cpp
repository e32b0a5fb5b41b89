#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehcert/cli.hpp"

namespace fs = std::filesystem;
using ehcert::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ehcert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ChordalPipelineVerifies) {
  auto gen = call({"gen", "--which", "seh-chordal", "--k", "1", "--output", path("f.txt")});
  ASSERT_EQ(gen.code, 0) << gen.err;
  auto seh = call({"seh", "--class", "chordal", "--input", path("f.txt"), "--output", path("c.txt")});
  ASSERT_EQ(seh.code, 0) << seh.err;
  auto ver = call({"verify", "--input", path("f.txt"), "--cert", path("c.txt"), "--min-side", "2"});
  EXPECT_EQ(ver.code, 0) << ver.out;
  EXPECT_EQ(ver.out, "valid\n");
}

TEST_F(Cli, TamperedCertificateExitsThree) {
  write("f.txt", "I 0 0 1\nI 1 2 3\nI 2 4 5\nI 3 6 7\n");
  write("c.txt", "BICLIQUE kind=complete\nA: 0\nB: 1\n");
  auto r = call({"verify", "--input", path("f.txt"), "--cert", path("c.txt")});
  EXPECT_EQ(r.code, ehcert::cli::kExitInvalid);
  EXPECT_EQ(r.out.rfind("invalid:", 0), 0u);
  write("e.txt", "BICLIQUE kind=empty\nA: 0 1\nB: 2 3\n");
  EXPECT_EQ(call({"verify", "--input", path("f.txt"), "--cert", path("e.txt"), "--min-side", "2"}).code, 0);
  EXPECT_EQ(call({"verify", "--input", path("f.txt"), "--cert", path("e.txt"), "--min-side", "3"}).code,
            ehcert::cli::kExitInvalid);
}

TEST_F(Cli, ExpectedCountHandValue) {
  auto r = call({"exi", "--k", "4", "--n", "4", "--a", "2", "--b", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4 4 2 2 4.5\n");
}

TEST_F(Cli, InputErrorsExitTwo) {
  write("bad.txt", "I 0 3 1\n");
  auto r = call({"seh", "--class", "interval", "--input", path("bad.txt")});
  EXPECT_EQ(r.code, ehcert::cli::kExitInput);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_EQ(call({"seh", "--class", "interval", "--input", path("missing.txt")}).code, 2);
  write("iv.txt", "I 0 0 1\n");
  EXPECT_EQ(call({"seh", "--class", "chordal", "--input", path("iv.txt")}).code, 2);
  EXPECT_EQ(call({"ceh", "--class", "cograph", "--input", write("ct.txt", "(U 0 1)\n")}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"seh", "--class", "planar", "--input", "x"}).code, 2);
  EXPECT_EQ(call({"seh", "--class", "interval"}).code, 2);
  EXPECT_EQ(call({"exi", "--k", "4"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(Cli, DeterministicOutput) {
  std::vector<std::string> gen{"gen", "--which", "lower-bound", "--k", "4", "--n", "10", "--seed", "7"};
  auto first = call(gen);
  auto second = call(gen);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("seed 7"), std::string::npos);
  write("lb.txt", first.out);
  std::vector<std::string> tk{"ceh", "--class", "tk", "--input", path("lb.txt"), "--allow-unbalanced", "--emit-trace"};
  auto a = call(tk);
  auto b = call(tk);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, NormalizeKeepsMemberIds) {
  write("t.txt", "T 5\nE 0 1\nE 0 2\nE 0 3\nE 0 4\nS 1 : 0 1\nS 2 : 2\nS 3 : 0 3 4\n");
  auto r = call({"normalize", "--class", "subtree", "--input", path("t.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* id : {"S 1 ", "S 2 ", "S 3 "}) EXPECT_NE(r.out.find(id), std::string::npos) << id;
  write("i.txt", "I 0 0 1\nI 1 1 2\n");
  EXPECT_EQ(call({"normalize", "--class", "interval", "--input", path("i.txt")}).code, 0);
  EXPECT_EQ(call({"normalize", "--class", "interval", "--input", path("t.txt")}).code, 2);
}

TEST_F(Cli, CrossingPipelines) {
  for (const char* which : {"ceh-interval", "ceh-cograph"}) {
    std::string cls = std::string(which).substr(4);
    ASSERT_EQ(call({"gen", "--which", which, "--k", "2", "--output", path("f.txt")}).code, 0);
    auto c = call({"ceh", "--class", cls, "--input", path("f.txt"), "--output", path("c.txt")});
    ASSERT_EQ(c.code, 0) << which << c.err;
    auto v = call({"verify", "--input", path("f.txt"), "--cert", path("c.txt"), "--partition", "--min-side", "1"});
    EXPECT_EQ(v.code, 0) << which << v.out;
  }
}

TEST_F(Cli, OracleOnGraphFile) {
  write("g.txt", "G 4\nE 0 2\nE 0 3\nE 1 2\nE 1 3\n");
  auto r = call({"oracle", "--input", path("g.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 2), "4 ");
  EXPECT_EQ(call({"oracle", "--input", path("g.txt"), "--partition"}).code, 2);
  write("gp.txt", "G 4\nE 0 2\nE 0 3\nE 1 2\nE 1 3\nP 0 1\nP 1 1\nP 2 2\nP 3 2\n");
  auto p = call({"oracle", "--input", path("gp.txt"), "--partition"});
  EXPECT_EQ(p.out, "4 complete 0,1 2,3\n");
}

TEST_F(Cli, CographRecognizeAndConform) {
  write("p4.txt", "G 4\nE 0 1\nE 1 2\nE 2 3\n");
  auto p4 = call({"cograph", "recognize", "--input", path("p4.txt")});
  EXPECT_EQ(p4.code, 0);
  EXPECT_EQ(p4.out.rfind("P4 ", 0), 0u);
  write("c4.txt", "G 4\nE 0 1\nE 1 2\nE 2 3\nE 3 0\n");
  auto c4 = call({"cograph", "recognize", "--input", path("c4.txt")});
  EXPECT_EQ(c4.code, 0);
  EXPECT_EQ(c4.out.front(), '(');
  write("ct.txt", "(U (C (U 0 1)) (C (U 2 3)))\n");
  auto w = call({"cograph", "conform", "--input", path("ct.txt"), "--set", "0,2", "--emit-trace"});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_NE(w.out.find("W:"), std::string::npos);
  EXPECT_EQ(call({"cograph", "conform", "--input", path("ct.txt"), "--set", "0,x"}).code, 2);
}
