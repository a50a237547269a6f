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
#ifndef CYCLOBLOCK_FORMAT_HPP
#define CYCLOBLOCK_FORMAT_HPP

// Text forms of IntPoly:
//   pretty  "1 - x + x^3"      (unit coefficients and x^0 omitted)
//   dense   "c0 c1 ... cdeg"   (space separated, "0" for the zero polynomial)
//   sparse  "exponent coefficient" per nonzero term, ascending
//   json    {"n": <index>, "coeffs": [c0, ..., cdeg]}

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cycloblock/blocks.hpp"
#include "cycloblock/polyring.hpp"
#include "json.hpp"

namespace cycloblock {

enum class PolyFormat { pretty, dense, sparse, json };

inline std::optional<PolyFormat> poly_format_from_string(std::string_view s) {
  if (s == "pretty") return PolyFormat::pretty;
  if (s == "dense") return PolyFormat::dense;
  if (s == "sparse") return PolyFormat::sparse;
  if (s == "json") return PolyFormat::json;
  return std::nullopt;
}

inline std::string to_pretty(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const BigInt mag = negative ? BigInt(-c[k]) : c[k];
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

inline std::string to_dense(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? " " : "") << coeffs[k];
  return os.str();
}

inline std::string to_dense(const IntPoly& f) { return to_dense(f.coeffs()); }
inline std::string to_dense(const Block& b) { return to_dense(b.coeffs()); }

inline std::string to_sparse(const IntPoly& f) {
  std::ostringstream os;
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) os << k << ' ' << c[k] << '\n';
  return os.str();
}

/// Coefficients are written as bare JSON numbers of any length.
inline std::string to_json(const IntPoly& f, std::int64_t n) {
  std::ostringstream os;
  os << "{\"n\": " << n << ", \"coeffs\": [";
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << c[k];
  os << "]}";
  return os.str();
}

inline std::string format_poly(const IntPoly& f, PolyFormat fmt, std::int64_t n) {
  switch (fmt) {
    case PolyFormat::pretty: return to_pretty(f) + "\n";
    case PolyFormat::dense: return to_dense(f) + "\n";
    case PolyFormat::sparse: return to_sparse(f);
    case PolyFormat::json: return to_json(f, n) + "\n";
  }
  return {};
}

inline IntPoly parse_dense(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<BigInt> c;
  std::string tok;
  while (is >> tok) c.emplace_back(tok);
  return IntPoly(std::move(c));
}

struct JsonPoly {
  std::int64_t n = 0;
  IntPoly poly;
};

namespace detail {

// Collects the "coeffs" array and "n" through the SAX interface so integers
// wider than 64 bits keep their exact decimal text.
class PolySax : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::vector<BigInt> coeffs;
  std::optional<std::int64_t> n;
  bool saw_coeffs = false;

  bool null() override { return fail(); }
  bool boolean(bool) override { return fail(); }
  bool number_integer(number_integer_t v) override { return take(BigInt(v), std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return take(BigInt(v), std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override {
    if (s.find_first_of(".eE") != string_t::npos) return fail();
    return take(BigInt(s), s);
  }
  bool string(string_t&) override { return fail(); }
  bool binary(binary_t&) override { return fail(); }
  bool start_object(std::size_t) override { return ++depth_ == 1; }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (depth_ != 1 || key_ != "coeffs") return fail();
    in_array_ = true;
    saw_coeffs = true;
    return true;
  }
  bool end_array() override {
    in_array_ = false;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  bool take(BigInt v, const std::string&) {
    if (in_array_) {
      coeffs.push_back(std::move(v));
      return true;
    }
    if (depth_ == 1 && key_ == "n") {
      n = static_cast<std::int64_t>(v);
      return true;
    }
    return fail();
  }
  static bool fail() { return false; }

  int depth_ = 0;
  bool in_array_ = false;
  std::string key_;
};

}  // namespace detail

inline JsonPoly parse_json_poly(std::string_view text) {
  detail::PolySax sax;
  if (!nlohmann::json::sax_parse(text, &sax) || !sax.n || !sax.saw_coeffs)
    throw std::invalid_argument("parse_json_poly: expected {\"n\": int, \"coeffs\": [int, ...]}");
  return {*sax.n, IntPoly(std::move(sax.coeffs))};
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_FORMAT_HPP
