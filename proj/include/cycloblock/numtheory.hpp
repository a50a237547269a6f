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
#ifndef CYCLOBLOCK_NUMTHEORY_HPP
#define CYCLOBLOCK_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycloblock {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

namespace detail {
inline void require_positive(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
}
}  // namespace detail

/// Trial division. Inputs here stay around 10^7 so this is plenty.
inline Factorization factor(std::int64_t n) {
  detail::require_positive(n, "factor");
  Factorization out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [p, e] : factor(n)) phi = phi / p * (p - 1);
  return phi;
}

inline int moebius(std::int64_t n) {
  int mu = 1;
  for (const auto& pe : factor(n)) {
    if (pe.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_squarefree(std::int64_t n) {
  detail::require_positive(n, "is_odd_squarefree");
  return n % 2 == 1 && moebius(n) != 0;
}

/// All positive divisors of n, increasing.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct QuoRem {
  std::int64_t quo;
  std::int64_t rem;
  bool operator==(const QuoRem&) const = default;
};

/// Floor division: a = quo*b + rem with 0 <= rem < b, also for negative a.
inline QuoRem rem_quo(std::int64_t a, std::int64_t b) {
  if (b < 1) throw std::invalid_argument("rem_quo: divisor must be >= 1");
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r < 0) {
    r += b;
    --q;
  }
  return {q, r};
}

/// Non-negative remainder only.
inline std::int64_t nonneg_rem(std::int64_t a, std::int64_t b) { return rem_quo(a, b).rem; }

}  // namespace cycloblock

#endif  // CYCLOBLOCK_NUMTHEORY_HPP
