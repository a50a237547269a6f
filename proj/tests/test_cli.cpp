/* Copyright 2026 The cycloblock Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "gtest/gtest.h"

namespace cycloblock::cli {
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

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cycloblock_test_" + name);
}

TEST(CliTest, Phi) {
  EXPECT_EQ(run({"phi", "15"}).out, "1 - x + x^3 - x^4 + x^5 - x^7 + x^8\n");
  EXPECT_EQ(run({"phi", "1"}).out, "-1 + x\n");
  EXPECT_EQ(run({"phi", "15", "--format", "sparse"}).out, "0 1\n1 -1\n3 1\n4 -1\n5 1\n7 -1\n8 1\n");
  EXPECT_EQ(run({"phi", "0"}).code, kUsage);
  EXPECT_EQ(run({"phi", "abc"}).code, kUsage);
  EXPECT_EQ(run({"phi"}).code, kUsage);
}

TEST(CliTest, Psi) {
  EXPECT_EQ(run({"psi", "15", "--format", "dense"}).out, "-1 -1 -1 0 0 1 1 1\n");
  EXPECT_EQ(run({"psi", "15", "--format", "bogus"}).code, kUsage);
}

TEST(CliTest, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
}

TEST(CliTest, Blocks) {
  const auto r = run({"blocks", "15", "53", "--i", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1 1 1 0 0 -1 -1 -1 0 0 0 0 0 0 0\n");
  EXPECT_EQ(run({"blocks", "15", "53", "--i", "8"}).code, kUsage);

  const auto bad = run({"blocks", "15", "3"});
  EXPECT_EQ(bad.code, kInvalidInstance);
  EXPECT_NE(bad.err.find("p divides m"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());

  const auto all = run({"blocks", "3", "5", "--all", "--check"});
  EXPECT_EQ(all.code, kOk);
  EXPECT_EQ(all.out, "i=0 j=0: 1 -1 0\ni=0 j=1: 1 -1\ni=1 j=0: 1 0 -1\ni=1 j=1: 1 0\n");

  const auto listing = run({"blocks", "15", "53"});
  EXPECT_NE(listing.out.find("i=7: 1 0 0 0 0 0 0 0 -1 -1 -1 0 0 1 1\n"), std::string::npos);
}

TEST(CliTest, Coeff) {
  EXPECT_EQ(run({"coeff", "15", "53", "0"}).out, "1\n");
  EXPECT_EQ(run({"coeff", "15", "53", "416"}).out, "1\n");
  EXPECT_EQ(run({"coeff", "15", "53", "417"}).out, "0\n");
  EXPECT_EQ(run({"coeff", "3", "5", "7"}).out, "-1\n");
  EXPECT_EQ(run({"coeff", "9", "5", "1"}).code, kInvalidInstance);
}

TEST(CliTest, AssembleVerify) {
  const auto r = run({"assemble", "15", "53", "--verify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "OK degree=416\n");
  EXPECT_EQ(run({"assemble", "15", "3", "--verify"}).code, kInvalidInstance);
}

TEST(CliTest, AssembleJsonRoundTrip) {
  const auto r = run({"assemble", "15", "53", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto parsed = parse_json_poly(r.out);
  EXPECT_EQ(parsed.n, 795);
  EXPECT_EQ(parsed.poly, phi_mp_oracle(15, 53));
}

TEST(CliTest, AssembleToFile) {
  const auto path = temp_file("assemble.txt");
  const auto r = run({"assemble", "3", "5", "--out", path.string(), "--verify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "OK degree=8\n");
  EXPECT_EQ(slurp(path), "1 -1 0 1 -1 1 0 -1 1\n");
  std::filesystem::remove(path);
}

TEST(CliTest, VerifyRelatedPairs) {
  const auto inv = run({"verify", "15", "53", "--ptilde", "83"});
  EXPECT_EQ(inv.code, kOk);
  EXPECT_NE(inv.out.find(R"("p_tilde":83,"check":"invariance","pass":true)"), std::string::npos);
  const auto semi = run({"verify", "15", "53", "--ptilde", "37"});
  EXPECT_EQ(semi.code, kOk);
  EXPECT_NE(semi.out.find(R"("p_tilde":37,"check":"semi_invariance","pass":true)"), std::string::npos);
}

TEST(CliTest, VerifyErrors) {
  EXPECT_EQ(run({"verify", "15", "53", "--ptilde", "59"}).code, kInvalidInstance);
  EXPECT_EQ(run({"verify", "15", "3"}).code, kInvalidInstance);
  EXPECT_EQ(run({"verify", "15", "53", "--checks", "nonsense"}).code, kUsage);
  const auto some = run({"verify", "15", "53", "--checks", "cancel,lemma_g", "--format", "csv"});
  EXPECT_EQ(some.out, "m,p,p_tilde,check,pass,detail\n15,53,,cancel,true,\n15,53,,lemma_g,true,\n");
}

TEST(CliTest, SweepReport) {
  const auto path = temp_file("sweep.jsonl");
  const auto r = run({"sweep", "--m", "3,5,15", "--p-max", "60", "--report", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("failures=0"), std::string::npos);
  std::ifstream f(path);
  std::size_t n = 0;
  for (std::string line; std::getline(f, line); ++n) EXPECT_TRUE(report_from_json(line).pass) << line;
  EXPECT_GT(n, 0u);
  std::filesystem::remove(path);
}

TEST(CliTest, SweepSkipsAndUsage) {
  const auto r = run({"sweep", "--m", "9", "--p-max", "50"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("skipped m=9"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--m", "3,x", "--p-max", "50"}).code, kUsage);
  EXPECT_EQ(run({"sweep", "--p-max", "50"}).code, kUsage);
}

TEST(CliTest, Bench) {
  const auto r = run({"bench", "15", "53"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("equality OK"), std::string::npos);
  EXPECT_NE(r.out.find("footprint=417"), std::string::npos);
  EXPECT_NE(r.out.find("footprint=120"), std::string::npos);
  EXPECT_EQ(run({"bench", "15", "3"}).code, kInvalidInstance);
}

TEST(CliTest, Plot) {
  const auto ascii = run({"plot", "15", "53", "--format", "ascii", "--range", "0:53"});
  EXPECT_EQ(ascii.code, kOk);
  EXPECT_EQ(ascii.out.rfind("# m=15 p=53 r=8 range=0:53", 0), 0u);
  const auto svg = run({"plot", "3", "5", "--format", "svg"});
  EXPECT_EQ(svg.code, kOk);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
  EXPECT_EQ(run({"plot", "15", "53", "--range", "9:3"}).code, kUsage);
  EXPECT_EQ(run({"plot", "15", "53", "--range", "nope"}).code, kUsage);
  EXPECT_EQ(run({"plot", "15", "3"}).code, kInvalidInstance);
}

}  // namespace
}  // namespace cycloblock::cli
