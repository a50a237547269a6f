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
#include <set>

#include "cycloblock/verify.hpp"
#include "gtest/gtest.h"

namespace cycloblock {
namespace {

void expect_pass(const CheckReport& r) {
  EXPECT_TRUE(r.pass) << to_string(r.check) << " m=" << r.m << " p=" << r.p << " detail=" << r.detail.value_or("");
  EXPECT_FALSE(r.detail.has_value());
}

void expect_fail(const CheckReport& r) {
  EXPECT_FALSE(r.pass) << to_string(r.check);
  ASSERT_TRUE(r.detail.has_value());
  EXPECT_NE(r.detail->find("exponent="), std::string::npos) << *r.detail;
}

TEST(VerifyTest, IntraChecksPassOnExamples) {
  for (auto [m, p] : {std::pair{15, 53}, {3, 5}, {5, 7}, {105, 53}, {15, 11}}) {
    expect_pass(check_repetition(m, p));
    expect_pass(check_truncation(m, p));
    expect_pass(check_symmetry(m, p));
    expect_pass(check_cancel(m, p));
    expect_pass(check_lemma_g(m, p));
    expect_pass(check_lemma_fg(m, p));
    expect_pass(check_assembly(m, p));
    expect_pass(check_vanish_tail(m, p));
  }
}

TEST(VerifyTest, InterChecksPassOnExamples) {
  expect_pass(check_invariance(15, 53, 83));
  expect_pass(check_invariance(15, 53, 53));
  expect_pass(check_invariance(3, 5, 11));
  expect_pass(check_semi_invariance(15, 53, 37));
  expect_pass(check_semi_invariance(3, 5, 7));
  expect_pass(check_semi_invariance(5, 7, 13));
  // Mixed widths: p < m on one side.
  expect_pass(check_invariance(105, 53, 263));
  expect_pass(check_semi_invariance(105, 53, 157));
}

TEST(VerifyTest, InterChecksRejectUnrelatedPrimes) {
  EXPECT_THROW(check_invariance(15, 53, 37), InvalidInstance);
  EXPECT_THROW(check_semi_invariance(15, 53, 83), InvalidInstance);
  EXPECT_THROW(check_invariance(15, 53, 3), InvalidInstance);
}

TEST(VerifyTest, ReportShape) {
  const auto r = check_invariance(15, 53, 83);
  EXPECT_EQ(r.m, 15);
  EXPECT_EQ(r.p, 53);
  EXPECT_EQ(r.p_tilde, 83);
  EXPECT_EQ(r.check, CheckKind::invariance);
  EXPECT_EQ(check_repetition(15, 53).p_tilde, std::nullopt);
}

TEST(VerifyTest, InvalidInstancesThrow) {
  EXPECT_THROW(check_repetition(15, 3), InvalidInstance);
  EXPECT_THROW(check_cancel(9, 5), InvalidInstance);
}

// ---------------------------------------------------------------------------
// Mutation sensitivity: one corrupted coefficient must be caught.

TEST(MutationTest, Repetition) {
  auto part = partition_from_oracle(15, 53);
  part.at(2, 1)[4] += 1;
  expect_fail(check_repetition(part));
  EXPECT_EQ(*check_repetition(part).detail, "i=2, j=1, exponent=4");
}

TEST(MutationTest, Truncation) {
  auto part = partition_from_oracle(15, 53);
  part.at(5, 3)[0] -= 1;
  expect_fail(check_truncation(part));
}

TEST(MutationTest, Symmetry) {
  const auto ctx = make_context(15, 53);
  auto part = partition_from_oracle(15, 53);
  part.at(6, 0)[9] += 1;
  expect_fail(check_symmetry(part, ctx));
}

TEST(MutationTest, SymmetryOnNarrowWindow) {
  // q = 0: only T_r of each base block is visible in the oracle.
  const auto ctx = make_context(105, 53);
  auto part = partition_from_oracle(105, 53);
  part.at(10, 0)[3] += 1;
  expect_fail(check_symmetry(part, ctx));
}

TEST(MutationTest, Invariance) {
  const auto a = make_context(15, 53), b = make_context(15, 83);
  const auto pa = partition_from_oracle(15, 53);
  auto pb = partition_from_oracle(15, 83);
  pb.at(4, 0)[7] += 2;
  expect_fail(check_invariance(pa, a, pb, b));
}

TEST(MutationTest, SemiInvariance) {
  const auto a = make_context(15, 53), b = make_context(15, 37);
  auto pa = partition_from_oracle(15, 53);
  const auto pb = partition_from_oracle(15, 37);
  pa.at(1, 0)[12] -= 1;
  expect_fail(check_semi_invariance(pa, a, pb, b));
}

TEST(MutationTest, Cancel) {
  auto ctx = make_context(15, 53);
  ctx.Phi_m = ctx.Phi_m + IntPoly{1};
  const auto r = check_cancel(ctx);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.detail.has_value());
}

TEST(MutationTest, LemmaG) {
  const auto ctx = make_context(15, 53);
  auto windows = g_windows(ctx);
  windows[3][2][5] += 1;
  expect_fail(check_lemma_g(ctx, windows));
}

TEST(MutationTest, LemmaFg) {
  auto ctx = make_context(15, 53);
  const auto part = partition_from_oracle(15, 53);
  std::vector<BigInt> a(ctx.Phi_m.coeffs().begin(), ctx.Phi_m.coeffs().end());
  a[1] = -a[1];
  ctx.Phi_m = IntPoly(std::move(a));
  expect_fail(check_lemma_fg(ctx, part));
}

TEST(MutationTest, Assembly) {
  auto table = build_table(make_context(15, 53));
  table.base[4][11] += 1;
  expect_fail(check_assembly(table, phi_mp_oracle(15, 53)));
}

TEST(MutationTest, VanishTail) {
  auto ctx = make_context(15, 53);
  ctx.Psi_m = ctx.Psi_m + IntPoly{0, 1};
  EXPECT_FALSE(check_vanish_tail(ctx).pass);
}

// ---------------------------------------------------------------------------
// Sweep.

TEST(SweepTest, SingleM) {
  const auto res = sweep({15}, 100);
  EXPECT_EQ(res.failures(), 0u);
  EXPECT_TRUE(res.skipped.empty());
  // primes 11..97 except 3, 5: 11,13,17,...,97 -> 21 primes, 8 checks each
  std::set<std::int64_t> primes;
  for (const auto& r : res.reports)
    if (!r.p_tilde) primes.insert(r.p);
  EXPECT_EQ(primes.size(), 21u);
  EXPECT_TRUE(std::any_of(res.reports.begin(), res.reports.end(),
                          [](const auto& r) { return r.check == CheckKind::invariance && r.p == 53 && r.p_tilde == 83; }));
  EXPECT_TRUE(std::any_of(res.reports.begin(), res.reports.end(), [](const auto& r) {
    return r.check == CheckKind::semi_invariance && r.p == 37 && r.p_tilde == 53;
  }));
}

TEST(SweepTest, ManyM) {
  const auto res = sweep({3, 5, 7, 15, 21, 33, 35, 105}, 60);
  EXPECT_EQ(res.failures(), 0u);
  EXPECT_FALSE(res.reports.empty());
}

TEST(SweepTest, NonSquarefreeSkipped) {
  const auto res = sweep({9}, 200);
  EXPECT_TRUE(res.reports.empty());
  ASSERT_EQ(res.skipped.size(), 1u);
  EXPECT_EQ(res.skipped[0].m, 9);
}

TEST(SweepTest, DeterministicOrder) {
  const auto a = sweep({21, 5}, 50);
  const auto b = sweep({5, 21}, 50);
  EXPECT_EQ(a.reports, b.reports);
  EXPECT_TRUE(std::is_sorted(a.reports.begin(), a.reports.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.m, x.p, x.p_tilde.has_value(), x.p_tilde.value_or(0), to_string(x.check)) <
           std::make_tuple(y.m, y.p, y.p_tilde.has_value(), y.p_tilde.value_or(0), to_string(y.check));
  }));
}

// ---------------------------------------------------------------------------
// Serialization.

TEST(SerializationTest, JsonLine) {
  const auto r = check_repetition(15, 53);
  EXPECT_EQ(to_json_line(r), R"({"m":15,"p":53,"p_tilde":null,"check":"repetition","pass":true,"detail":null})");
  EXPECT_EQ(report_from_json(to_json_line(r)), r);
}

TEST(SerializationTest, JsonRoundTripOfFailure) {
  auto part = partition_from_oracle(15, 53);
  part.at(2, 1)[4] += 1;
  auto r = check_repetition(part);
  r.p_tilde = 83;
  EXPECT_EQ(report_from_json(to_json_line(r)), r);
}

TEST(SerializationTest, Csv) {
  EXPECT_EQ(csv_header(), "m,p,p_tilde,check,pass,detail");
  EXPECT_EQ(to_csv_line(check_invariance(15, 53, 83)), "15,53,83,invariance,true,");
  auto part = partition_from_oracle(15, 53);
  part.at(2, 1)[4] += 1;
  EXPECT_EQ(to_csv_line(check_repetition(part)), R"(15,53,,repetition,false,"i=2, j=1, exponent=4")");
}

}  // namespace
}  // namespace cycloblock
