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
#ifndef CYCLOBLOCK_VERIFY_HPP
#define CYCLOBLOCK_VERIFY_HPP

// Executable checks of the block identities against oracle data.
//
// Each check comes in two forms: one over explicit inputs (partitions,
// contexts, tables), which is what the mutation tests feed corrupted data to,
// and a convenience (m, p) form that builds the inputs from the oracles.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cycloblock/blocks.hpp"
#include "cycloblock/cyclotomic.hpp"
#include "cycloblock/numtheory.hpp"
#include "cycloblock/polyring.hpp"
#include "json.hpp"

namespace cycloblock {

enum class CheckKind {
  repetition,
  truncation,
  symmetry,
  invariance,
  semi_invariance,
  cancel,
  lemma_g,
  lemma_fg,
  assembly,
  vanish_tail,
};

inline std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::repetition: return "repetition";
    case CheckKind::truncation: return "truncation";
    case CheckKind::symmetry: return "symmetry";
    case CheckKind::invariance: return "invariance";
    case CheckKind::semi_invariance: return "semi_invariance";
    case CheckKind::cancel: return "cancel";
    case CheckKind::lemma_g: return "lemma_g";
    case CheckKind::lemma_fg: return "lemma_fg";
    case CheckKind::assembly: return "assembly";
    case CheckKind::vanish_tail: return "vanish_tail";
  }
  return "unknown";
}

inline std::optional<CheckKind> check_kind_from_string(std::string_view s) {
  for (auto k : {CheckKind::repetition, CheckKind::truncation, CheckKind::symmetry, CheckKind::invariance,
                 CheckKind::semi_invariance, CheckKind::cancel, CheckKind::lemma_g, CheckKind::lemma_fg,
                 CheckKind::assembly, CheckKind::vanish_tail})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Outcome of one identity on one instance. detail is set iff pass is false
/// and names the first counterexample.
struct CheckReport {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::optional<std::int64_t> p_tilde;
  CheckKind check = CheckKind::repetition;
  bool pass = true;
  std::optional<std::string> detail;

  bool operator==(const CheckReport&) const = default;
};

namespace detail {

inline CheckReport make_report(std::int64_t m, std::int64_t p, std::optional<std::int64_t> pt, CheckKind k,
                               std::optional<std::string> failure) {
  CheckReport rep{m, p, pt, k, !failure.has_value(), std::move(failure)};
  return rep;
}

inline std::string location(std::int64_t i, std::optional<std::int64_t> j, std::size_t exponent) {
  std::ostringstream os;
  os << "i=" << i;
  if (j) os << ", j=" << *j;
  os << ", exponent=" << exponent;
  return os.str();
}

// First position in [0, len) where the two blocks differ.
inline std::optional<std::size_t> first_diff(const Block& a, const Block& b, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    const BigInt av = t < a.width() ? a[t] : BigInt(0);
    const BigInt bv = t < b.width() ? b[t] : BigInt(0);
    if (av != bv) return t;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> first_diff(const Block& a, const Block& b) {
  return first_diff(a, b, std::max(a.width(), b.width()));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Base blocks as seen by the oracle.

/// f(i, 0) for every i, read from an oracle partition.
///
/// With q >= 1 these are plain slices. With q = 0 (p < m) a p-window is
/// narrower than m and only T_r f(i, 0) is visible; the full block is then
/// taken from the explicit formula, after confirming its visible prefix
/// agrees with the oracle slice. A disagreement is returned as `mismatch`.
struct ObservedBase {
  std::vector<Block> base;
  std::optional<std::string> mismatch;
};

inline ObservedBase observe_base(const Partition& part, const BlockContext& ctx) {
  ObservedBase out;
  for (std::int64_t i = 0; i < part.phi_m; ++i) {
    if (part.q >= 1) {
      out.base.push_back(part.at(i, 0));
      continue;
    }
    Block lifted = block_formula(ctx, i);
    if (auto t = detail::first_diff(part.at(i, 0), lifted, static_cast<std::size_t>(part.r)); t && !out.mismatch)
      out.mismatch = detail::location(i, 0, *t) + " (visible prefix of a q=0 window)";
    out.base.push_back(std::move(lifted));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intra-structure.

/// f(i, 0) = ... = f(i, q-1) on the oracle slices.
inline CheckReport check_repetition(const Partition& part) {
  for (std::int64_t i = 0; i < part.phi_m; ++i)
    for (std::int64_t j = 1; j < part.q; ++j)
      if (auto t = detail::first_diff(part.at(i, j), part.at(i, 0)))
        return detail::make_report(part.m, part.p, std::nullopt, CheckKind::repetition, detail::location(i, j, *t));
  return detail::make_report(part.m, part.p, std::nullopt, CheckKind::repetition, std::nullopt);
}

/// f(i, q) = T_r f(i, 0) on the oracle slices.
inline CheckReport check_truncation(const Partition& part) {
  const auto r = static_cast<std::size_t>(part.r);
  for (std::int64_t i = 0; i < part.phi_m; ++i) {
    const Block head(static_cast<std::size_t>(part.m), op_truncate(part.at(i, 0), r));
    if (auto t = detail::first_diff(part.at(i, part.q), head))
      return detail::make_report(part.m, part.p, std::nullopt, CheckKind::truncation,
                                 detail::location(i, part.q, *t));
  }
  return detail::make_report(part.m, part.p, std::nullopt, CheckKind::truncation, std::nullopt);
}

/// f(i', 0) = R_{phi(m)-1-r} F f(i, 0) whenever i + i' = phi(m) - 1.
inline CheckReport check_symmetry(const Partition& part, const BlockContext& ctx) {
  auto fail = [&](std::string d) {
    return detail::make_report(part.m, part.p, std::nullopt, CheckKind::symmetry, std::move(d));
  };
  const auto seen = observe_base(part, ctx);
  if (seen.mismatch) return fail(*seen.mismatch);
  for (std::int64_t i = 0; i < part.phi_m; ++i) {
    const std::int64_t mirror = part.phi_m - 1 - i;
    const Block expected = op_rotate(op_flip(seen.base[static_cast<std::size_t>(i)]), part.phi_m - 1 - part.r);
    if (auto t = detail::first_diff(seen.base[static_cast<std::size_t>(mirror)], expected))
      return fail(detail::location(mirror, 0, *t));
  }
  return detail::make_report(part.m, part.p, std::nullopt, CheckKind::symmetry, std::nullopt);
}

// ---------------------------------------------------------------------------
// Inter-structure.

namespace detail {

inline void require_pair(const Partition& a, const Partition& b) {
  if (a.m != b.m) throw InvalidInstance("inter-structure checks need a common m");
}

template <class Transform>
CheckReport compare_bases(const Partition& a, const BlockContext& ctx_a, const Partition& b,
                          const BlockContext& ctx_b, CheckKind kind, Transform transform) {
  auto fail = [&](std::string d) { return make_report(a.m, a.p, b.p, kind, std::move(d)); };
  const auto seen_a = observe_base(a, ctx_a);
  if (seen_a.mismatch) return fail("p: " + *seen_a.mismatch);
  const auto seen_b = observe_base(b, ctx_b);
  if (seen_b.mismatch) return fail("p_tilde: " + *seen_b.mismatch);
  for (std::int64_t i = 0; i < a.phi_m; ++i) {
    const Block expected = transform(seen_a.base[static_cast<std::size_t>(i)]);
    if (auto t = first_diff(seen_b.base[static_cast<std::size_t>(i)], expected)) return fail(location(i, 0, *t));
  }
  return make_report(a.m, a.p, b.p, kind, std::nullopt);
}

}  // namespace detail

/// f_{m,p~,i,0} = f_{m,p,i,0} when p~ = p (mod m).
inline CheckReport check_invariance(const Partition& a, const BlockContext& ctx_a, const Partition& b,
                                    const BlockContext& ctx_b) {
  detail::require_pair(a, b);
  if (nonneg_rem(b.p - a.p, a.m) != 0) throw InvalidInstance("p_tilde is not congruent to p modulo m");
  return detail::compare_bases(a, ctx_a, b, ctx_b, CheckKind::invariance, [](const Block& f) { return f; });
}

/// f_{m,p~,i,0} = -R_{phi(m)-1} F f_{m,p,i,0} when p~ + p = 0 (mod m).
inline CheckReport check_semi_invariance(const Partition& a, const BlockContext& ctx_a, const Partition& b,
                                         const BlockContext& ctx_b) {
  detail::require_pair(a, b);
  if (nonneg_rem(b.p + a.p, a.m) != 0) throw InvalidInstance("p_tilde + p is not divisible by m");
  const std::int64_t shift = a.phi_m - 1;
  return detail::compare_bases(a, ctx_a, b, ctx_b, CheckKind::semi_invariance,
                               [shift](const Block& f) { return negate(op_rotate(op_flip(f), shift)); });
}

// ---------------------------------------------------------------------------
// Lemmas.

/// R_s(Psi_m * E_r Phi_m) = 0 modulo x^m - 1, for the base reduction and a
/// handful of rotations.
inline CheckReport check_cancel(const BlockContext& ctx) {
  const std::size_t m = ctx.width();
  const Block reduced = cyclic_block(mul(ctx.Psi_m, substitute_power(ctx.Phi_m, static_cast<std::size_t>(ctx.r))), m);
  for (std::int64_t s : {std::int64_t{0}, std::int64_t{1}, ctx.m - 1, std::int64_t{-1}}) {
    const Block rotated = op_rotate(reduced, s);
    for (std::size_t t = 0; t < m; ++t)
      if (rotated[t] != 0) {
        std::ostringstream os;
        os << "s=" << s << ", exponent=" << t;
        return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::cancel, os.str());
      }
  }
  return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::cancel, std::nullopt);
}

/// G-windows g(i, j) for i < phi(m), j <= q.
inline std::vector<std::vector<Block>> g_windows(const BlockContext& ctx) {
  std::vector<std::vector<Block>> out(static_cast<std::size_t>(ctx.phi_m));
  for (std::int64_t i = 0; i < ctx.phi_m; ++i)
    for (std::int64_t j = 0; j <= ctx.q; ++j) out[static_cast<std::size_t>(i)].push_back(g_block(ctx, i, j));
  return out;
}

/// g(i, j) = R_{ir} Psi_m for j < q and T_r R_{ir} Psi_m for j = q.
inline CheckReport check_lemma_g(const BlockContext& ctx, const std::vector<std::vector<Block>>& windows) {
  const std::size_t m = ctx.width();
  const Block psi(m, ctx.Psi_m);
  for (std::int64_t i = 0; i < ctx.phi_m; ++i) {
    const Block rotated = op_rotate(psi, nonneg_rem(i, ctx.m) * ctx.r);
    for (std::int64_t j = 0; j <= ctx.q; ++j) {
      const Block expected = j < ctx.q ? rotated : Block(m, op_truncate(rotated, static_cast<std::size_t>(ctx.r)));
      const Block& got = windows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
      if (auto t = detail::first_diff(got, expected))
        return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::lemma_g, detail::location(i, j, *t));
    }
  }
  return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::lemma_g, std::nullopt);
}

/// f(i, j) = -sum_{s<=i} a_s g(i-s, j), a_s the coefficients of ctx.Phi_m,
/// against the oracle slices.
inline CheckReport check_lemma_fg(const BlockContext& ctx, const Partition& part) {
  const std::size_t m = ctx.width();
  const auto windows = g_windows(ctx);
  for (std::int64_t i = 0; i < ctx.phi_m; ++i) {
    for (std::int64_t j = 0; j <= ctx.q; ++j) {
      std::vector<BigInt> acc(m);
      for (std::int64_t s = 0; s <= i; ++s) {
        const BigInt a = ctx.Phi_m[static_cast<std::size_t>(s)];
        if (a == 0) continue;
        const Block& g = windows[static_cast<std::size_t>(i - s)][static_cast<std::size_t>(j)];
        for (std::size_t t = 0; t < m; ++t) acc[t] -= a * g[t];
      }
      if (auto t = detail::first_diff(part.at(i, j), Block(m, std::move(acc))))
        return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::lemma_fg, detail::location(i, j, *t));
    }
  }
  return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::lemma_fg, std::nullopt);
}

/// Block-assembled Phi_{mp} equals the oracle polynomial.
inline CheckReport check_assembly(const BlockTable& table, const IntPoly& oracle) {
  const auto& ctx = table.ctx;
  const IntPoly assembled = assemble_phi_mp(table);
  const std::size_t n = std::max(assembled.size(), oracle.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (assembled[k] == oracle[k]) continue;
    const auto p = static_cast<std::size_t>(ctx.p);
    const auto m = ctx.width();
    const auto i = static_cast<std::int64_t>(k / p);
    const auto j = static_cast<std::int64_t>((k % p) / m);
    return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::assembly, detail::location(i, j, k));
  }
  return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::assembly, std::nullopt);
}

/// The formula gives the zero block for phi(m) <= i <= phi(m) + 3.
inline CheckReport check_vanish_tail(const BlockContext& ctx) {
  for (std::int64_t i = ctx.phi_m; i <= ctx.phi_m + 3; ++i) {
    const Block b = block_formula(ctx, i);
    for (std::size_t t = 0; t < b.width(); ++t)
      if (b[t] != 0)
        return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::vanish_tail,
                                   detail::location(i, std::nullopt, t));
  }
  return detail::make_report(ctx.m, ctx.p, std::nullopt, CheckKind::vanish_tail, std::nullopt);
}

// ---------------------------------------------------------------------------
// Convenience forms built from the oracles.

inline CheckReport check_repetition(std::int64_t m, std::int64_t p) { return check_repetition(partition_from_oracle(m, p)); }
inline CheckReport check_truncation(std::int64_t m, std::int64_t p) { return check_truncation(partition_from_oracle(m, p)); }
inline CheckReport check_symmetry(std::int64_t m, std::int64_t p) {
  return check_symmetry(partition_from_oracle(m, p), make_context(m, p));
}
inline CheckReport check_invariance(std::int64_t m, std::int64_t p, std::int64_t p_tilde) {
  return check_invariance(partition_from_oracle(m, p), make_context(m, p), partition_from_oracle(m, p_tilde),
                          make_context(m, p_tilde));
}
inline CheckReport check_semi_invariance(std::int64_t m, std::int64_t p, std::int64_t p_tilde) {
  return check_semi_invariance(partition_from_oracle(m, p), make_context(m, p), partition_from_oracle(m, p_tilde),
                               make_context(m, p_tilde));
}
inline CheckReport check_cancel(std::int64_t m, std::int64_t p) { return check_cancel(make_context(m, p)); }
inline CheckReport check_lemma_g(std::int64_t m, std::int64_t p) {
  const auto ctx = make_context(m, p);
  return check_lemma_g(ctx, g_windows(ctx));
}
inline CheckReport check_lemma_fg(std::int64_t m, std::int64_t p) {
  return check_lemma_fg(make_context(m, p), partition_from_oracle(m, p));
}
inline CheckReport check_assembly(std::int64_t m, std::int64_t p) {
  return check_assembly(build_table(make_context(m, p)), phi_mp_oracle(m, p));
}
inline CheckReport check_vanish_tail(std::int64_t m, std::int64_t p) { return check_vanish_tail(make_context(m, p)); }

// ---------------------------------------------------------------------------
// Instances and sweeps.

/// Oracle and block data for one (m, p), computed once and shared by checks.
struct Instance {
  BlockContext ctx;
  IntPoly oracle;
  Partition partition;
  BlockTable table;

  static Instance build(std::int64_t m, std::int64_t p) {
    Instance in;
    in.ctx = make_context(m, p);
    in.oracle = phi_mp_oracle(m, p);
    in.partition = partition_poly(in.oracle, m, p);
    in.table = build_table(in.ctx);
    return in;
  }
};

/// Single-instance checks, in a fixed order.
inline std::vector<CheckReport> run_intra_checks(const Instance& in) {
  return {
      check_assembly(in.table, in.oracle),
      check_repetition(in.partition),
      check_truncation(in.partition),
      check_symmetry(in.partition, in.ctx),
      check_cancel(in.ctx),
      check_lemma_g(in.ctx, g_windows(in.ctx)),
      check_lemma_fg(in.ctx, in.partition),
      check_vanish_tail(in.ctx),
  };
}

/// Invariance or semi-invariance, whichever relation p~ has to p. Throws
/// InvalidInstance when neither holds.
inline CheckReport run_inter_check(const Instance& a, const Instance& b) {
  if (a.ctx.m != b.ctx.m) throw InvalidInstance("inter-structure checks need a common m");
  if (nonneg_rem(b.ctx.p - a.ctx.p, a.ctx.m) == 0) return check_invariance(a.partition, a.ctx, b.partition, b.ctx);
  if (nonneg_rem(b.ctx.p + a.ctx.p, a.ctx.m) == 0)
    return check_semi_invariance(a.partition, a.ctx, b.partition, b.ctx);
  throw InvalidInstance("p_tilde is congruent to neither p nor -p modulo m");
}

struct SkippedInstance {
  std::int64_t m = 0;
  std::optional<std::int64_t> p;
  std::string reason;
};

struct SweepResult {
  std::vector<CheckReport> reports;
  std::vector<SkippedInstance> skipped;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
  }
};

/// Sorts by (m, p, p_tilde, check name); absent p_tilde sorts first.
inline void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::make_tuple(x.m, x.p, x.p_tilde.has_value(), x.p_tilde.value_or(0), to_string(x.check)) <
           std::make_tuple(y.m, y.p, y.p_tilde.has_value(), y.p_tilde.value_or(0), to_string(y.check));
  });
}

/// Every prime p with phi(m) < p < p_limit and gcd(m, p) = 1, for each m:
/// all single-instance checks, then invariance / semi-invariance over every
/// pair p < p~ in range with p~ = +-p (mod m).
inline SweepResult sweep(const std::vector<std::int64_t>& m_list, std::int64_t p_limit) {
  SweepResult out;
  for (std::int64_t m : m_list) {
    if (m < 3 || !is_odd_squarefree(m)) {
      out.skipped.push_back({m, std::nullopt, "m must be an odd squarefree integer >= 3"});
      continue;
    }
    std::map<std::int64_t, Instance> instances;
    for (std::int64_t p = euler_phi(m) + 1; p < p_limit; ++p) {
      if (!is_prime(p) || std::gcd(m, p) != 1) continue;
      try {
        auto in = Instance::build(m, p);
        auto reps = run_intra_checks(in);
        out.reports.insert(out.reports.end(), reps.begin(), reps.end());
        instances.emplace(p, std::move(in));
      } catch (const InvalidInstance& e) {
        out.skipped.push_back({m, p, e.what()});
      }
    }
    for (auto a = instances.begin(); a != instances.end(); ++a)
      for (auto b = std::next(a); b != instances.end(); ++b) {
        const std::int64_t diff = nonneg_rem(b->first - a->first, m);
        const std::int64_t sum = nonneg_rem(b->first + a->first, m);
        if (diff == 0 || sum == 0) out.reports.push_back(run_inter_check(a->second, b->second));
      }
  }
  sort_reports(out.reports);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization.

/// One JSON object, keys in the order m, p, p_tilde, check, pass, detail.
inline std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["p"] = r.p;
  j["p_tilde"] = r.p_tilde ? nlohmann::ordered_json(*r.p_tilde) : nlohmann::ordered_json(nullptr);
  j["check"] = std::string(to_string(r.check));
  j["pass"] = r.pass;
  j["detail"] = r.detail ? nlohmann::ordered_json(*r.detail) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

inline CheckReport report_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  CheckReport r;
  r.m = j.at("m").get<std::int64_t>();
  r.p = j.at("p").get<std::int64_t>();
  if (!j.at("p_tilde").is_null()) r.p_tilde = j.at("p_tilde").get<std::int64_t>();
  const auto kind = check_kind_from_string(j.at("check").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown check name in report");
  r.check = *kind;
  r.pass = j.at("pass").get<bool>();
  if (!j.at("detail").is_null()) r.detail = j.at("detail").get<std::string>();
  return r;
}

inline std::string csv_header() { return "m,p,p_tilde,check,pass,detail"; }

inline std::string to_csv_line(const CheckReport& r) {
  std::ostringstream os;
  os << r.m << ',' << r.p << ',';
  if (r.p_tilde) os << *r.p_tilde;
  os << ',' << to_string(r.check) << ',' << (r.pass ? "true" : "false") << ',';
  if (r.detail) {
    os << '"';
    for (char c : *r.detail) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  }
  return os.str();
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_VERIFY_HPP
