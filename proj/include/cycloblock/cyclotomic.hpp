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
#ifndef CYCLOBLOCK_CYCLOTOMIC_HPP
#define CYCLOBLOCK_CYCLOTOMIC_HPP

// Brute-force reference computations of Phi_n, Psi_m and Phi_{mp}. These are
// the ground truth the block machinery is checked against, so the two routes
// below (Moebius product, substitute-and-divide) share nothing but polyring.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloblock/numtheory.hpp"
#include "cycloblock/polyring.hpp"

namespace cycloblock {

/// An (m, p) pair outside the supported family. what() carries the reason.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Phi_n as prod_{d|n} (x^d - 1)^{mu(n/d)}. Multiplies out the mu = +1
/// binomials, then divides by the mu = -1 ones one at a time; every
/// intermediate quotient is exact.
inline IntPoly phi_oracle(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("phi_oracle: n must be >= 1");
  IntPoly acc{1};
  std::vector<std::int64_t> denominators;
  for (std::int64_t d : divisors(n)) {
    switch (moebius(n / d)) {
      case 1: acc = mul(acc, IntPoly::x_pow_minus_one(static_cast<std::size_t>(d))); break;
      case -1: denominators.push_back(d); break;
      default: break;
    }
  }
  for (std::int64_t d : denominators) acc = div_exact(acc, IntPoly::x_pow_minus_one(static_cast<std::size_t>(d)));
  return acc;
}

/// Inverse cyclotomic polynomial (x^m - 1) / Phi_m.
inline IntPoly psi_oracle(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("psi_oracle: m must be >= 1");
  return div_exact(IntPoly::x_pow_minus_one(static_cast<std::size_t>(m)), phi_oracle(m));
}

/// f(x^k)
inline IntPoly substitute_power(const IntPoly& f, std::size_t k) {
  if (f.is_zero()) return {};
  if (k == 0) {
    BigInt s = 0;
    for (const auto& c : f.coeffs()) s += c;
    return IntPoly(std::vector<BigInt>{s});
  }
  std::vector<BigInt> out((f.size() - 1) * k + 1);
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return IntPoly(std::move(out));
}

/// Throws InvalidInstance unless m is odd squarefree >= 3, p is prime and
/// gcd(m, p) = 1.
inline void require_mp_family(std::int64_t m, std::int64_t p) {
  if (m < 3 || !is_odd_squarefree(m))
    throw InvalidInstance("m must be an odd squarefree integer >= 3 (got " + std::to_string(m) + ")");
  if (!is_prime(p)) throw InvalidInstance("p is not prime (got " + std::to_string(p) + ")");
  if (std::gcd(m, p) != 1) throw InvalidInstance("p divides m");
}

/// Phi_{mp} = Phi_m(x^p) / Phi_m, valid because p does not divide m.
inline IntPoly phi_mp_oracle(std::int64_t m, std::int64_t p) {
  require_mp_family(m, p);
  IntPoly phi_m = phi_oracle(m);
  return div_exact(substitute_power(phi_m, static_cast<std::size_t>(p)), phi_m);
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_CYCLOTOMIC_HPP
