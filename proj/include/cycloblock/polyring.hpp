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
#ifndef CYCLOBLOCK_POLYRING_HPP
#define CYCLOBLOCK_POLYRING_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycloblock {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by div_exact when the divisor does not divide the dividend over Z.
/// Seeing this from an oracle means the oracle is broken; never recover from it.
class NonZeroRemainder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial degree with a dedicated sentinel for the zero polynomial.
/// NegInf compares below every finite degree.
class Degree {
 public:
  constexpr Degree() = default;  // NegInf
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

  static constexpr Degree neg_inf() { return Degree{}; }

  constexpr bool is_neg_inf() const { return !finite_; }

  std::size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
    return value_;
  }

  constexpr bool operator==(const Degree&) const = default;
  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return value_ <=> o.value_;
  }

  /// True when the degree is strictly below `bound`; NegInf is below everything.
  constexpr bool below(std::size_t bound) const { return !finite_ || value_ < bound; }

 private:
  bool finite_ = false;
  std::size_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_neg_inf()) return os << "-inf";
  return os << d.value();
}

/// Dense univariate polynomial over Z. coeffs()[k] is the coefficient of x^k.
/// Always normalized: the top coefficient is nonzero, or there are none.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

  IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  /// c * x^k
  static IntPoly monomial(std::size_t k, const BigInt& c = 1) {
    if (c == 0) return {};
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  /// x^n - 1
  static IntPoly x_pow_minus_one(std::size_t n) {
    std::vector<BigInt> v(n + 1);
    v[0] -= 1;
    v[n] += 1;
    return IntPoly(std::move(v));
  }

  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  bool is_zero() const { return c_.empty(); }

  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }

  std::span<const BigInt> coeffs() const { return c_; }

  /// Coefficient of x^k; zero beyond the degree.
  BigInt operator[](std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  const BigInt& leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

namespace detail {

// Nonzero terms of a polynomial as (exponent, coefficient) pairs.
inline std::vector<std::pair<std::size_t, BigInt>> nonzero_terms(const IntPoly& f) {
  std::vector<std::pair<std::size_t, BigInt>> out;
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out.emplace_back(k, c[k]);
  return out;
}

}  // namespace detail

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (std::size_t k = 0; k < ac.size(); ++k) out[k] = ac[k];
  for (std::size_t k = 0; k < bc.size(); ++k) out[k] += bc[k];
  return IntPoly(std::move(out));
}

inline IntPoly neg(const IntPoly& a) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : out) v = -v;
  return IntPoly(std::move(out));
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (std::size_t k = 0; k < ac.size(); ++k) out[k] = ac[k];
  for (std::size_t k = 0; k < bc.size(); ++k) out[k] -= bc[k];
  return IntPoly(std::move(out));
}

/// Schoolbook product. Zero coefficients of the sparser operand are skipped,
/// which keeps products of binomials like x^k - 1 cheap.
inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ta = detail::nonzero_terms(a);
  auto tb = detail::nonzero_terms(b);
  const auto& outer = ta.size() <= tb.size() ? ta : tb;
  const auto& inner = ta.size() <= tb.size() ? tb : ta;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (const auto& [i, ci] : outer)
    for (const auto& [j, cj] : inner) out[i + j] += ci * cj;
  return IntPoly(std::move(out));
}

/// Multiplication by x^k.
inline IntPoly shift_mul(const IntPoly& f, std::size_t k) {
  if (f.is_zero()) return {};
  std::vector<BigInt> out(f.size() + k);
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(out));
}

/// rem(f, x^s): keeps x^0 .. x^{s-1}.
inline IntPoly rem_pow(const IntPoly& f, std::size_t s) {
  auto c = f.coeffs();
  std::size_t n = std::min(s, c.size());
  return IntPoly(std::vector<BigInt>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)));
}

/// quo(f, x^s): drops x^0 .. x^{s-1} and shifts the rest down.
inline IntPoly quo_pow(const IntPoly& f, std::size_t s) {
  auto c = f.coeffs();
  if (s >= c.size()) return {};
  return IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(s), c.end()));
}

/// rem(f, x^m - 1): result[t] is the sum of f[k] over k = t (mod m).
inline IntPoly rem_cyclic(const IntPoly& f, std::size_t m) {
  if (m == 0) throw std::invalid_argument("rem_cyclic: modulus exponent must be positive");
  auto c = f.coeffs();
  std::vector<BigInt> out(std::min(m, c.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out[k % m] += c[k];
  return IntPoly(std::move(out));
}

/// Exact quotient num / den over Z. Throws NonZeroRemainder instead of
/// returning a truncated quotient.
inline IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("div_exact: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.size() < den.size()) throw NonZeroRemainder("div_exact: divisor has larger degree than dividend");

  const std::size_t dd = den.size() - 1;
  const BigInt& lead = den.leading();
  // Lower terms of the divisor, skipping zeros.
  std::vector<std::pair<std::size_t, BigInt>> lower;
  for (const auto& t : detail::nonzero_terms(den))
    if (t.first < dd) lower.push_back(t);

  std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<BigInt> quo(num.size() - dd);
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top == 0) continue;
    BigInt qk;
    if (lead == 1) {
      qk = top;
    } else if (lead == -1) {
      qk = -top;
    } else {
      BigInt r;
      boost::multiprecision::divide_qr(top, lead, qk, r);
      if (r != 0) throw NonZeroRemainder("div_exact: leading coefficient does not divide");
    }
    top = 0;
    for (const auto& [e, c] : lower) rem[k + e] -= qk * c;
    quo[k] = std::move(qk);
  }
  for (std::size_t k = 0; k < dd; ++k)
    if (rem[k] != 0) throw NonZeroRemainder("div_exact: nonzero remainder at x^" + std::to_string(k));
  return IntPoly(std::move(quo));
}

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return sub(a, b); }
inline IntPoly operator-(const IntPoly& a) { return neg(a); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

}  // namespace cycloblock

#endif  // CYCLOBLOCK_POLYRING_HPP
