/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  std::string out;
  int code = -1;
};

Result run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + LINKRANK_CLI_PATH + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(LINKRANK_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, RankText) {
  const Result r = run_cli("rank 10 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('1'), std::string::npos);
}

TEST(Cli, RankCsv) {
  const Result r = run_cli("rank 6 3 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m,p,rank,brunnian_rank,infinite\n6,3 3,4,2,true\n");
}

TEST(Cli, BrunnianJson) {
  const Result r = run_cli("rank 6 3 3 3 --brunnian --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"rank\": 1"), std::string::npos);
}

TEST(Cli, GoldenFiles) {
  EXPECT_EQ(run_cli("rank 6 3 3 --format json --details").out, golden("rank_6_3_3.json"));
  EXPECT_EQ(run_cli("framed 8 5:3 5:3 --format json").out, golden("framed_8_5-3_5-3.json"));
  EXPECT_EQ(run_cli("tables table2 --format csv").out, golden("table2.csv"));
  EXPECT_EQ(run_cli("tables table3 --format csv").out, golden("table3.csv"));
}

TEST(Cli, Scalars) {
  EXPECT_EQ(run_cli("witt 2 3 2 --format csv").out, "t,s,r,value\n2,3,2,3\n");
  EXPECT_EQ(run_cli("witt 5/2 3 2 --format csv").out, "t,s,r,value\n5/2,3,2,0\n");
  EXPECT_EQ(run_cli("stiefel 3 4 2 --format csv").out, "p,q,l,rank\n3,4,2,2\n");
}

TEST(Cli, Fcs) {
  const Result r = run_cli("fcs even even --xmax 3 --ymax 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x,y\n1,1\n2,2\n3,3\n");
  EXPECT_EQ(run_cli("fcs 0 0 --xmax 3 --ymax 3 --format csv").out, r.out);
}

TEST(Cli, Oracle) {
  const Result dim = run_cli("oracle dim --weights 1,1 --multidegree 2,1 --format csv");
  EXPECT_EQ(dim.code, 0);
  EXPECT_EQ(dim.out, "weights,multidegree,formula,dim\n1 1,2 1,1,1\n");
  const Result verify = run_cli("oracle verify --max-r 2 --max-degree 2 --max-letters 4 --threads 2");
  EXPECT_EQ(verify.code, 0);
  EXPECT_NE(verify.out.find("pass"), std::string::npos);
}

TEST(Cli, Applications) {
  const Result h = run_cli("handlebody 9 6 6 --format json");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("\"handlebody_set\": \"finite\""), std::string::npos);
  EXPECT_NE(run_cli("mcg 8 5 5 5").out.find("infinite_index"), std::string::npos);
  EXPECT_NE(run_cli("mcg 4 2 2").out.find("inconclusive"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("rank 6 4").code, 2);
  EXPECT_EQ(run_cli("rank 10 7 --brunnian").code, 2);
  EXPECT_EQ(run_cli("framed 8 5:9").code, 2);
  EXPECT_EQ(run_cli("stiefel 3 4 5").code, 2);
  EXPECT_EQ(run_cli("bogus").code, 2);
  EXPECT_EQ(run_cli("rank six 3").code, 2);
  EXPECT_EQ(run_cli("oracle dim --weights 1,1 --multidegree 5,5").code, 3);
  EXPECT_EQ(run_cli("oracle dim --weights 1,1 --multidegree 2,2", "LINKRANK_ORACLE_BUDGET=2").code, 3);
  EXPECT_EQ(run_cli("oracle dim --weights 1,1 --multidegree 2,2", "LINKRANK_ORACLE_BUDGET=junk").code, 2);
}
