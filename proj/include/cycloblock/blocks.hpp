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
#ifndef CYCLOBLOCK_BLOCKS_HPP
#define CYCLOBLOCK_BLOCKS_HPP

// Block decomposition of Phi_{mp} for m odd squarefree and p a prime not
// dividing m.
//
// Phi_{mp} is cut into windows of width p (radix x^p), and each window into
// sub-windows of width m (radix x^m); the last sub-window of a p-window has
// width r = p mod m. Writing f(i, j) for sub-window j of p-window i, with
// q = p div m:
//
//   f(i, j) = -R_{ir}( Psi_m * E_r T_{i+1} Phi_m  mod x^m - 1 )   j < q
//   f(i, q) = T_r f(i, 0)
//
// so phi(m) base blocks of width m determine all of Phi_{mp}. The four
// operators T (truncate), F (flip), R (rotate) and E (expand) act on
// polynomials of degree < m.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloblock/cyclotomic.hpp"
#include "cycloblock/numtheory.hpp"
#include "cycloblock/polyring.hpp"

namespace cycloblock {

/// A polynomial of degree < m stored as exactly m coefficients, trailing
/// zeros kept so position t is always a direct index.
class Block {
 public:
  Block() = default;

  /// The zero block of width m.
  explicit Block(std::size_t m) : c_(m) {}

  Block(std::size_t m, const IntPoly& f) : c_(m) {
    if (!f.degree().below(m))
      throw std::invalid_argument("Block: degree " + std::to_string(f.degree().value()) + " does not fit width " +
                                  std::to_string(m));
    auto fc = f.coeffs();
    std::copy(fc.begin(), fc.end(), c_.begin());
  }

  Block(std::size_t m, std::vector<BigInt> padded) : c_(std::move(padded)) {
    if (c_.size() > m) {
      for (std::size_t k = m; k < c_.size(); ++k)
        if (c_[k] != 0) throw std::invalid_argument("Block: nonzero coefficient beyond width");
    }
    c_.resize(m);
  }

  std::size_t width() const { return c_.size(); }
  const BigInt& operator[](std::size_t t) const { return c_.at(t); }
  BigInt& operator[](std::size_t t) { return c_.at(t); }
  std::span<const BigInt> coeffs() const { return c_; }

  IntPoly to_poly() const { return IntPoly(c_); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
  }

  bool operator==(const Block&) const = default;

 private:
  std::vector<BigInt> c_;
};

// ---------------------------------------------------------------------------
// Operators on degree-<m polynomials.

/// T_s f = rem(f, x^s).
inline IntPoly op_truncate(const Block& f, std::size_t s) { return rem_pow(f.to_poly(), s); }

/// F f = x^{m-1} f(1/x): coefficient order reversed over the full width.
inline Block op_flip(const Block& f) {
  std::vector<BigInt> out(f.coeffs().rbegin(), f.coeffs().rend());
  return Block(f.width(), std::move(out));
}

/// R_s f = rem(x^{m - rem(s,m)} f, x^m - 1), i.e. result[t] = f[(t + s) mod m].
/// Negative s is reduced with the non-negative remainder.
inline Block op_rotate(const Block& f, std::int64_t s) {
  const auto m = static_cast<std::int64_t>(f.width());
  if (m == 0) return f;
  const auto shift = static_cast<std::size_t>(nonneg_rem(s, m));
  std::vector<BigInt> out(f.width());
  for (std::size_t t = 0; t < f.width(); ++t) out[t] = f[(t + shift) % f.width()];
  return Block(f.width(), std::move(out));
}

/// E_s f = f(x^{rem(s,m)}).
inline IntPoly op_expand(const Block& f, std::int64_t s) {
  const auto m = static_cast<std::int64_t>(f.width());
  if (m == 0) return {};
  return substitute_power(f.to_poly(), static_cast<std::size_t>(nonneg_rem(s, m)));
}

inline Block negate(const Block& f) {
  std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v = -v;
  return Block(f.width(), std::move(out));
}

/// Reduces f modulo x^m - 1 into a width-m block.
inline Block cyclic_block(const IntPoly& f, std::size_t m) { return Block(m, rem_cyclic(f, m)); }

// ---------------------------------------------------------------------------
// Instances.

/// Everything that fixes one decomposition: p = q*m + r, phi(m), Phi_m, Psi_m.
struct BlockContext {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t phi_m = 0;
  IntPoly Phi_m;
  IntPoly Psi_m;
  std::int64_t psi_deg = 0;  // m - phi(m)

  std::size_t width() const { return static_cast<std::size_t>(m); }
};

/// Full validation for the block machinery: the oracle family plus p > phi(m),
/// so that every base block index 0..phi(m)-1 names a nonempty p-window.
inline void require_block_instance(std::int64_t m, std::int64_t p) {
  require_mp_family(m, p);
  const std::int64_t phi = euler_phi(m);
  if (p <= phi)
    throw InvalidInstance("p must exceed phi(m) = " + std::to_string(phi) + " (got p = " + std::to_string(p) + ")");
}

inline BlockContext make_context(std::int64_t m, std::int64_t p) {
  require_block_instance(m, p);
  BlockContext ctx;
  ctx.m = m;
  ctx.p = p;
  const auto qr = rem_quo(p, m);
  ctx.q = qr.quo;
  ctx.r = qr.rem;
  ctx.phi_m = euler_phi(m);
  ctx.Phi_m = phi_oracle(m);
  ctx.Psi_m = psi_oracle(m);
  ctx.psi_deg = m - ctx.phi_m;
  return ctx;
}

// ---------------------------------------------------------------------------
// Explicit block formula.

/// f(i, 0) = -R_{ir}(Psi_m * E_r T_{i+1} Phi_m mod x^m - 1). For i >= phi(m)
/// the truncation is all of Phi_m and the result cancels to zero.
inline Block block_formula(const BlockContext& ctx, std::int64_t i) {
  if (i < 0) throw std::invalid_argument("block_formula: index must be >= 0");
  const std::size_t m = ctx.width();
  const Block head(m, rem_pow(ctx.Phi_m, static_cast<std::size_t>(i) + 1));
  const Block reduced = cyclic_block(mul(ctx.Psi_m, op_expand(head, ctx.r)), m);
  return negate(op_rotate(reduced, nonneg_rem(i, ctx.m) * ctx.r));
}

/// f(i, q) = T_r f(i, 0), padded to width m.
inline Block final_block(const BlockContext& ctx, std::int64_t i) {
  if (i < 0 || i >= ctx.phi_m) throw std::out_of_range("final_block: index outside 0..phi(m)-1");
  return Block(ctx.width(), op_truncate(block_formula(ctx, i), static_cast<std::size_t>(ctx.r)));
}

/// Window (i, j) of the formal series G = Psi_m * sum_u x^{um}, read through
/// e_t = b_{t mod m}. Width m for j < q, width r for j = q (zero padded).
inline Block g_block(const BlockContext& ctx, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0 || j > ctx.q) throw std::out_of_range("g_block: index outside the window grid");
  const std::size_t m = ctx.width();
  const std::size_t len = j < ctx.q ? m : static_cast<std::size_t>(ctx.r);
  // ip + mj + k mod m, computed without forming ip (which may be large).
  const std::int64_t start = nonneg_rem(nonneg_rem(i, ctx.m) * ctx.r, ctx.m);
  Block out(m);
  for (std::size_t k = 0; k < len; ++k) out[k] = ctx.Psi_m[(static_cast<std::size_t>(start) + k) % m];
  return out;
}

// ---------------------------------------------------------------------------
// Tables.

/// The compressed form of Phi_{mp}: the phi(m) base blocks f(i, 0).
struct BlockTable {
  BlockContext ctx;
  std::vector<Block> base;

  /// Number of big integers held in the table (phi(m) * m).
  std::size_t stored_coefficients() const {
    std::size_t n = 0;
    for (const auto& b : base) n += b.width();
    return n;
  }
};

inline BlockTable build_table(const BlockContext& ctx) {
  BlockTable table{ctx, {}};
  table.base.reserve(static_cast<std::size_t>(ctx.phi_m));
  for (std::int64_t i = 0; i < ctx.phi_m; ++i) table.base.push_back(block_formula(ctx, i));
  return table;
}

/// Same table, computing only the first half with the formula and mirroring
/// f(i', 0) = R_{phi(m)-1-r} F f(i, 0) for i + i' = phi(m) - 1. phi(m) is even
/// for m >= 3, so the halves pair up exactly.
inline BlockTable symmetric_table(const BlockContext& ctx) {
  BlockTable table{ctx, std::vector<Block>(static_cast<std::size_t>(ctx.phi_m))};
  const std::int64_t half = (ctx.phi_m + 1) / 2;
  for (std::int64_t i = 0; i < half; ++i) {
    auto& lo = table.base[static_cast<std::size_t>(i)];
    lo = block_formula(ctx, i);
    const std::int64_t mirror = ctx.phi_m - 1 - i;
    if (mirror != i) table.base[static_cast<std::size_t>(mirror)] = op_rotate(op_flip(lo), ctx.phi_m - 1 - ctx.r);
  }
  return table;
}

/// Oracle-side blocks: Phi_{mp} sliced as f(i, j) for i < phi(m), j <= q.
/// slices[i][j] is padded to width m; slice (i, q) only carries r coefficients.
struct Partition {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t phi_m = 0;
  std::vector<std::vector<Block>> slices;

  const Block& at(std::int64_t i, std::int64_t j) const {
    return slices.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  Block& at(std::int64_t i, std::int64_t j) { return slices.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

  /// Width of window (i, j): m for j < q, r for j = q.
  std::size_t slice_width(std::int64_t j) const { return static_cast<std::size_t>(j < q ? m : r); }
};

/// Slices an arbitrary polynomial by the (m, p) grid. Coefficients at or past
/// phi(m) * p are rejected since they would fall outside the grid.
inline Partition partition_poly(const IntPoly& f, std::int64_t m, std::int64_t p) {
  require_block_instance(m, p);
  Partition part;
  part.m = m;
  part.p = p;
  const auto qr = rem_quo(p, m);
  part.q = qr.quo;
  part.r = qr.rem;
  part.phi_m = euler_phi(m);
  const auto total = static_cast<std::size_t>(part.phi_m * p);
  if (!f.degree().below(total)) throw std::invalid_argument("partition_poly: polynomial extends past the block grid");

  const auto um = static_cast<std::size_t>(m);
  const auto up = static_cast<std::size_t>(p);
  part.slices.resize(static_cast<std::size_t>(part.phi_m));
  for (std::size_t i = 0; i < part.slices.size(); ++i) {
    for (std::int64_t j = 0; j <= part.q; ++j) {
      Block b(um);
      const std::size_t origin = i * up + static_cast<std::size_t>(j) * um;
      for (std::size_t t = 0; t < part.slice_width(j); ++t) b[t] = f[origin + t];
      part.slices[i].push_back(std::move(b));
    }
  }
  return part;
}

inline Partition partition_from_oracle(std::int64_t m, std::int64_t p) {
  require_block_instance(m, p);
  return partition_poly(phi_mp_oracle(m, p), m, p);
}

/// Rebuilds Phi_{mp} from the base blocks using repetition for j < q and
/// truncation for j = q.
inline IntPoly assemble_phi_mp(const BlockTable& table) {
  const auto& ctx = table.ctx;
  const auto m = ctx.width();
  const auto p = static_cast<std::size_t>(ctx.p);
  const auto r = static_cast<std::size_t>(ctx.r);
  const auto q = static_cast<std::size_t>(ctx.q);
  std::vector<BigInt> out(table.base.size() * p);
  for (std::size_t i = 0; i < table.base.size(); ++i) {
    const auto& blk = table.base[i];
    for (std::size_t j = 0; j <= q; ++j) {
      const std::size_t len = j < q ? m : r;
      const std::size_t origin = i * p + j * m;
      for (std::size_t t = 0; t < len; ++t) out[origin + t] = blk[t];
    }
  }
  return IntPoly(std::move(out));
}

/// Coefficient of x^k in Phi_{mp} straight from the table: k = i*p + j*m + t.
inline BigInt coeff_at(const BlockTable& table, std::uint64_t k) {
  const auto& ctx = table.ctx;
  const auto p = static_cast<std::uint64_t>(ctx.p);
  const auto m = static_cast<std::uint64_t>(ctx.m);
  const std::uint64_t i = k / p;
  const std::uint64_t offset = k % p;
  const std::uint64_t j = offset / m;
  const std::uint64_t t = offset % m;
  if (i >= table.base.size()) return 0;
  if (j == static_cast<std::uint64_t>(ctx.q) && t >= static_cast<std::uint64_t>(ctx.r)) return 0;
  return table.base[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_BLOCKS_HPP
