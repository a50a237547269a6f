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
#ifndef CYCLOBLOCK_BENCH_HPP
#define CYCLOBLOCK_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <random>

#include "cycloblock/blocks.hpp"
#include "cycloblock/cyclotomic.hpp"

namespace cycloblock {

struct BenchResult {
  double oracle_seconds = 0;
  double assemble_seconds = 0;    // build_table + assemble_phi_mp
  double random_access_seconds = 0;  // build_table + `lookups` coeff_at calls
  std::size_t oracle_footprint = 0;  // coefficients in the dense polynomial
  std::size_t table_footprint = 0;   // coefficients held by the block table
  std::size_t lookups = 0;
  bool equal = false;            // assembled == oracle
  bool lookups_agree = false;    // every coeff_at matched the oracle
  std::size_t degree = 0;
};

/// Times the dense oracle against the block route. Correctness is part of
/// the result; timings are only reported.
inline BenchResult run_bench(std::int64_t m, std::int64_t p, std::size_t lookups = 1000, std::uint64_t seed = 1) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

  BenchResult res;
  res.lookups = lookups;
  const auto ctx = make_context(m, p);

  auto t0 = clock::now();
  const IntPoly oracle = phi_mp_oracle(m, p);
  auto t1 = clock::now();
  res.oracle_seconds = seconds(t0, t1);
  res.oracle_footprint = oracle.size();
  res.degree = oracle.degree().value();

  t0 = clock::now();
  const IntPoly assembled = assemble_phi_mp(build_table(ctx));
  t1 = clock::now();
  res.assemble_seconds = seconds(t0, t1);
  res.equal = assembled == oracle;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, oracle.size() - 1);
  std::vector<std::uint64_t> ks(lookups);
  for (auto& k : ks) k = pick(rng);
  std::vector<BigInt> got;
  got.reserve(lookups);
  t0 = clock::now();
  const BlockTable table = build_table(ctx);
  for (auto k : ks) got.push_back(coeff_at(table, k));
  t1 = clock::now();
  res.random_access_seconds = seconds(t0, t1);
  res.table_footprint = table.stored_coefficients();
  res.lookups_agree = true;
  for (std::size_t n = 0; n < ks.size(); ++n)
    if (got[n] != oracle[static_cast<std::size_t>(ks[n])]) res.lookups_agree = false;
  return res;
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_BENCH_HPP
