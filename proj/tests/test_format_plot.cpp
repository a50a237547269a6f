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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "cycloblock/blocks.hpp"
#include "cycloblock/format.hpp"
#include "cycloblock/plot.hpp"
#include "gtest/gtest.h"

namespace cycloblock {
namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// Reads the '*' level of every column back out of an ASCII plot.
std::vector<long long> ascii_levels(const std::string& plot) {
  const auto lines = lines_of(plot);
  std::vector<long long> levels;
  for (std::size_t row = 2; row < lines.size(); ++row) {
    const long long level = std::stoll(lines[row].substr(0, 4));
    for (std::size_t col = 5; col < lines[row].size(); ++col) {
      if (lines[row][col] != '*') continue;
      if (levels.size() < col - 4) levels.resize(col - 4, 99);
      levels[col - 5] = level;
    }
  }
  return levels;
}

TEST(FormatTest, Pretty) {
  EXPECT_EQ(to_pretty(IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1}), "1 - x + x^3 - x^4 + x^5 - x^7 + x^8");
  EXPECT_EQ(to_pretty(IntPoly{-1, 1}), "-1 + x");
  EXPECT_EQ(to_pretty(IntPoly{}), "0");
  EXPECT_EQ(to_pretty(IntPoly{0, -2, 0, 3}), "-2*x + 3*x^3");
  EXPECT_EQ(to_pretty(IntPoly{0, 0, -1}), "-x^2");
}

TEST(FormatTest, DenseSparse) {
  EXPECT_EQ(to_dense(IntPoly{-1, -1, -1, 0, 0, 1, 1, 1}), "-1 -1 -1 0 0 1 1 1");
  EXPECT_EQ(to_dense(IntPoly{}), "0");
  EXPECT_EQ(to_sparse(IntPoly{1, 0, -2}), "0 1\n2 -2\n");
  EXPECT_EQ(parse_dense("-1 -1 -1 0 0 1 1 1"), (IntPoly{-1, -1, -1, 0, 0, 1, 1, 1}));
}

TEST(FormatTest, JsonRoundTrip) {
  const IntPoly f = assemble_phi_mp(build_table(make_context(15, 53)));
  const auto parsed = parse_json_poly(to_json(f, 795));
  EXPECT_EQ(parsed.n, 795);
  EXPECT_EQ(parsed.poly, f);
}

TEST(FormatTest, JsonKeepsWideIntegers) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> c(1 + rng() % 6);
    for (auto& v : c) {
      v = BigInt(rng()) << (rng() % 200);
      if (rng() & 1) v = -v;
    }
    const IntPoly f(std::move(c));
    EXPECT_EQ(parse_json_poly(to_json(f, 1)).poly, f);
  }
}

TEST(FormatTest, JsonRejectsMalformed) {
  EXPECT_THROW(parse_json_poly("{\"coeffs\": [1, 2]}"), std::invalid_argument);
  EXPECT_THROW(parse_json_poly("{\"n\": 3, \"coeffs\": [1.5]}"), std::invalid_argument);
  EXPECT_THROW(parse_json_poly("[1, 2]"), std::invalid_argument);
  EXPECT_THROW(parse_json_poly("{\"n\": 3, \"coeffs\": [1, 2"), std::invalid_argument);
}

TEST(PlotTest, AsciiFirstWindow) {
  const IntPoly f = phi_mp_oracle(15, 53);
  const std::string plot = plot_ascii(f, {15, 53, 8}, {0, 53});
  const auto levels = ascii_levels(plot);
  ASSERT_EQ(levels.size(), 53u);
  for (std::size_t k = 0; k < 53; ++k) EXPECT_EQ(levels[k], static_cast<long long>(f[k])) << k;
  const std::vector<long long> head(levels.begin(), levels.begin() + 8);
  EXPECT_EQ(head, (std::vector<long long>{1, 1, 1, 0, 0, -1, -1, -1}));
  // Grid row: p-window start, then m-window starts at 15, 30, 45.
  const auto rules = lines_of(plot)[1];
  EXPECT_EQ(rules[5 + 0], '+');
  EXPECT_EQ(rules[5 + 15], '|');
  EXPECT_EQ(rules[5 + 30], '|');
  EXPECT_EQ(rules[5 + 45], '|');
  EXPECT_EQ(rules[5 + 46], ' ');
}

TEST(PlotTest, AsciiSecondWindowShowsNextBlock) {
  const auto table = build_table(make_context(15, 53));
  const IntPoly f = assemble_phi_mp(table);
  const auto levels = ascii_levels(plot_ascii(f, {15, 53, 8}, {53, 106}));
  ASSERT_EQ(levels.size(), 53u);
  for (std::size_t t = 0; t < 15; ++t) EXPECT_EQ(levels[t], static_cast<long long>(table.base[1][t]));
  EXPECT_EQ(lines_of(plot_ascii(f, {15, 53, 8}, {53, 106}))[1][5], '+');
}

TEST(PlotTest, SvgIsWellFormed) {
  namespace pt = boost::property_tree;
  const IntPoly f = phi_mp_oracle(3, 5);
  const std::string svg = plot_svg(f, {3, 5, 2}, {0, f.size()});
  pt::ptree tree;
  std::istringstream is(svg);
  ASSERT_NO_THROW(pt::read_xml(is, tree));
  int polylines = 0, p_rules = 0, m_rules = 0;
  for (const auto& child : tree.get_child("svg")) {
    if (child.first == "polyline") ++polylines;
    if (child.first == "line") {
      const auto cls = child.second.get<std::string>("<xmlattr>.class");
      p_rules += cls == "p-rule";
      m_rules += cls == "m-rule";
    }
  }
  EXPECT_EQ(polylines, 2);  // degree 8 spans windows [0,5) and [5,10)
  EXPECT_EQ(p_rules, 2);    // x = 0 and x = 5
  EXPECT_EQ(m_rules, 2);    // x = 3 and x = 8
}

}  // namespace
}  // namespace cycloblock
