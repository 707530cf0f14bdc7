/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/cli.hpp"
#include "eacqc/concat.hpp"
#include "eacqc/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace eacqc;
namespace fs = std::filesystem;

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
    dir_ = fs::temp_directory_path() /
           ("eacqc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string &name, const std::string &text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char *hamming_h = "q 2\n"
                        "# [7,4] Hamming parity check\n"
                        "1 1 1 0 1 0 0\n"
                        "0 1 1 1 0 1 0\n"
                        "1 1 0 1 0 0 1\n";

} // namespace

TEST_F(Cli, CssRepetition) {
  const auto rep = file("rep.txt", "q 2\n1 1\n");
  const auto r = run({"--quiet", "css", "--c1", rep, "--c2", rep});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[2,0,>=2;0]]_2 net=0 hbar_e=0 class=EAQMDS\n");
}

TEST_F(Cli, CssHammingPrintsRankOracleC) {
  const auto h = file("h.txt", hamming_h);
  const auto r = run({"css", "--quiet", "--c1", h, "--c2", h});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = read_matrix_file(h);
  const auto c = oracle::rank(m * m.transpose());
  EXPECT_EQ(r.out.rfind("[[7," + std::to_string(1 + c) + ",>=3;" + std::to_string(c) +
                            "]]_2",
                        0),
            0u)
      << r.out;
}

TEST_F(Cli, CssLengthMismatch) {
  const auto h = file("h.txt", hamming_h);
  const auto rep = file("rep.txt", "q 2\n1 1\n");
  const auto r = run({"css", "--c1", h, "--c2", rep});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("LengthMismatch"), std::string::npos) << r.err;
}

TEST_F(Cli, Hermitian) {
  const auto h = file("h.txt", "q 4\n1 1 2\n");
  auto r = run({"--quiet", "hermitian", "--code", h, "--base", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[3,2,>=2;1]]_2 net=1 hbar_e=0 class=EAQMDS maximal\n");
  const auto rep = file("rep.txt", "q 4\n1 1\n");
  r = run({"--quiet", "hermitian", "--code", rep, "--base", "2", "--kind", "G"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(";0]]_2"), std::string::npos) << r.out;
  r = run({"hermitian", "--code", h, "--base", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("FieldMismatch"), std::string::npos);
}

TEST_F(Cli, Concat) {
  auto r = run({"--quiet", "concat", "--inner", "4,2,2,0,2", "--outer", "25,13,12,12,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("[[100,26,>=24;24]]_2 net=2", 0), 0u) << r.out;
  r = run({"--quiet", "concat", "--inner", "3,2,2,1,2", "--outer", "2,1,2,1,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("[[6,2,>=4;4]]_2", 0), 0u);
  EXPECT_NE(r.out.find(" maximal"), std::string::npos);
  r = run({"concat", "--inner", "4,2,2,0,2", "--outer", "25,13,12,12,8"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("AlphabetMismatch"), std::string::npos);
  r = run({"concat", "--inner", "4,2,2,0", "--outer", "25,13,12,12,4"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, ExtendAndExpurgate) {
  auto r = run({"--quiet", "extend", "--code", "100,26,24,24,2", "--t", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("[[107,26,>=24;24]]_2 net=2", 0), 0u) << r.out;
  r = run({"--quiet", "expurgate", "--inner", "4,2,2,0,2", "--outer", "23,12,11,11,4", "--t",
           "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("[[91,24,>=22;23]]_2 net=1", 0), 0u) << r.out;
  r = run({"expurgate", "--inner", "3,2,2,1,2", "--outer", "23,12,11,11,4", "--t", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("ProvenanceMismatch"), std::string::npos);
}

TEST_F(Cli, JsonRecordsRoundTripThroughTupleParser) {
  const std::vector<std::vector<std::string>> cmds = {
      {"--json", "concat", "--inner", "4,2,2,0,2", "--outer", "25,13,12,12,4"},
      {"--json", "concat", "--inner", "3,2,2,1,2", "--outer", "2,1,2,1,4"},
      {"--json", "extend", "--code", "46,2,36,44,2", "--t", "3"},
      {"--json", "expurgate", "--inner", "4,2,2,0,2", "--outer", "33,13,13,8,4", "--t", "2"}};
  for (const auto &cmd : cmds) {
    const auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto t = parse_tuple(j["tuple"].get<std::string>());
    EXPECT_EQ(t.n, j["n"].get<std::int64_t>());
    EXPECT_EQ(t.k, j["k"].get<std::int64_t>());
    EXPECT_EQ(t.d, j["d"].get<std::int64_t>());
    EXPECT_EQ(*t.c, j["c"].get<std::int64_t>());
    EXPECT_EQ(t.q, j["q"].get<std::uint64_t>());
    EXPECT_EQ(t.to_string(), j["tuple"].get<std::string>());
  }
}

TEST_F(Cli, AuditShippedFile) {
  const std::string tables = EACQC_DATA_DIR "/tables.txt";
  const auto r = run({"--quiet", "audit", "--tables", tables, "--allow-known"});
  EXPECT_NE(r.out.find("rows="), std::string::npos);
  EXPECT_NE(r.out.find("known_issues=1"), std::string::npos) << r.out;
  const auto strict = run({"--quiet", "audit", "--tables", tables});
  EXPECT_EQ(strict.code, 1);
  const auto js = run({"--json", "audit", "--tables", tables, "--allow-known"});
  std::istringstream lines(js.out);
  std::string line, last;
  while (std::getline(lines, line)) {
    ASSERT_TRUE(nlohmann::json::accept(line)) << line;
    last = line;
  }
  EXPECT_TRUE(nlohmann::json::parse(last).contains("summary"));
}

TEST_F(Cli, AuditCorruptedAndEmpty) {
  const auto bad = file("bad.txt", "I|4,2,2,0,2|23,1,11,-,4,1|base|92,2,22,-,2,1|\n"
                                   "I|4,2,2,0,2|23,1,11,-,4,1|base|92,2,21,-,2,1|\n");
  auto r = run({"--quiet", "audit", "--tables", bad, "--allow-known"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("I:2"), std::string::npos) << r.out;
  const auto empty = file("empty.txt", "");
  r = run({"--quiet", "audit", "--tables", empty});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rows=0"), std::string::npos);
  const auto garbage = file("garbage.txt", "not a table row\n");
  r = run({"audit", "--tables", garbage});
  EXPECT_EQ(r.code, 2);
  r = run({"audit", "--tables", path("missing.txt")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, Bounds) {
  auto r = run({"bounds", "--family", "C7", "--m-range", "4..12", "--delta-step", "0.001"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("delta,C7[m=4],C7[m=6],C7[m=8],C7[m=10],C7[m=12],C7[envelope],", 0),
            0u)
      << r.out.substr(0, 200);
  r = run({"bounds", "--family", "GV", "--ce", "0", "--delta-step", "0.01"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n0,1,,\n"), std::string::npos);
  r = run({"bounds", "--family", "C5", "--m", "4", "--delta-step", "0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("DomainError"), std::string::npos);
  r = run({"bounds", "--family", "C5", "--m", "3", "--delta-step", "0.01"});
  EXPECT_EQ(r.code, 3);
  r = run({"bounds", "--family", "C9", "--m", "4"});
  EXPECT_EQ(r.code, 2);
  const auto out = path("curve.csv");
  r = run({"--quiet", "bounds", "--family", "C5", "--m", "4", "--delta-step", "0.01", "--out",
           out});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "delta,C5[m=4],ext_quantum_zyablov,ext_prior_maximal_ea");
}

TEST_F(Cli, Gv) {
  auto r = run({"--quiet", "gv", "--spec", "10,9,0,8,4,4", "--delta", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x0="), std::string::npos);
  EXPECT_NE(r.out.find("tau="), std::string::npos);
  EXPECT_NE(r.out.find("log2_bound="), std::string::npos);
  r = run({"gv", "--spec", "10,9,0,8,4,4", "--delta", "0.6"});
  EXPECT_EQ(r.code, 3);
  r = run({"gv", "--spec", "10,9,0", "--delta", "0.1"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, Mindist) {
  const auto h = file("h.txt", hamming_h);
  auto r = run({"--quiet", "mindist", "--code", h});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "d=3 exact\n");
  r = run({"--quiet", "mindist", "--code", h, "--budget", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "d=unknown (budget exceeded)\n");
  r = run({"mindist", "--code", h, "--budget", "0"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, MatrixFileErrors) {
  for (const char *bad : {"", "q 6\n1 0\n", "q 4\n1 4\n", "q 2\n1 0\n1\n", "x 2\n1\n",
                          "q 4 poly 1,0,1\n1 1\n", "q 2\n", "q 2\n1 a\n"}) {
    const auto f = file("bad.txt", bad);
    const auto r = run({"mindist", "--code", f});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  }
  const auto ok = file("ok.txt", "q 8 poly 1,0,1,1  # custom modulus\n\n1 7 3\n");
  const auto m = read_matrix_file(ok);
  EXPECT_EQ(m.field()->modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(m.cols(), 3u);
}

TEST_F(Cli, Ensemble) {
  const auto r = run({"--quiet", "ensemble", "--field", "4", "--n", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("identities: PASS"), std::string::npos);
}

TEST_F(Cli, BannerAndDeterminism) {
  const std::vector<std::string> cmd = {"concat", "--inner", "4,2,2,0,2", "--outer",
                                        "25,13,12,12,4"};
  const auto a = run(cmd), b = run(cmd);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("eacqc " + std::string(version) + "\n", 0), 0u);
  auto quiet = cmd;
  quiet.insert(quiet.begin(), "--quiet");
  EXPECT_EQ(a.out, "eacqc " + std::string(version) + "\n" + run(quiet).out);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"concat", "--inner", "4,2,2,0,2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ExecutableExitCodes) {
  const std::string exe = EACQC_CLI_PATH;
  auto status = [&](const std::string &args) {
    const int s = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("concat --inner 4,2,2,0,2 --outer 25,13,12,12,4"), 0);
  EXPECT_EQ(status("concat --inner 4,2,2,0,2 --outer 25,13,12,12,8"), 3);
  EXPECT_EQ(status("mindist --code " + path("nope.txt")), 2);
}
