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
#ifndef CYCLOBLOCK_PLOT_HPP
#define CYCLOBLOCK_PLOT_HPP

// Step plots of Phi_{mp} coefficients with the block grid drawn in.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloblock/polyring.hpp"

namespace cycloblock {

struct PlotWindow {
  std::size_t lo = 0;  // first exponent
  std::size_t hi = 0;  // one past the last exponent
};

struct PlotGrid {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t r = 0;
};

namespace detail {

inline std::vector<long long> levels_in(const IntPoly& f, PlotWindow w) {
  std::vector<long long> out;
  for (std::size_t k = w.lo; k < w.hi; ++k) {
    const BigInt c = f[k];
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
      throw std::overflow_error("plot: coefficient too large to draw");
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

inline bool is_p_rule(std::size_t k, const PlotGrid& g) { return k % static_cast<std::size_t>(g.p) == 0; }
inline bool is_m_rule(std::size_t k, const PlotGrid& g) {
  const std::size_t off = k % static_cast<std::size_t>(g.p);
  return off != 0 && off % static_cast<std::size_t>(g.m) == 0;
}

}  // namespace detail

/// One column per exponent. The first row marks the grid: '+' where a
/// p-window starts, '|' where an m-window starts inside it. Each further row
/// is a coefficient level, top to bottom; '*' sits at the coefficient's
/// level and '-' draws the zero axis.
inline std::string plot_ascii(const IntPoly& f, const PlotGrid& g, PlotWindow w) {
  if (w.hi < w.lo) throw std::invalid_argument("plot: empty range");
  const auto vals = detail::levels_in(f, w);
  long long top = 0, bottom = 0;
  for (long long v : vals) {
    top = std::max(top, v);
    bottom = std::min(bottom, v);
  }
  std::ostringstream os;
  os << "# m=" << g.m << " p=" << g.p << " r=" << g.r << " range=" << w.lo << ':' << w.hi << '\n';
  os << "     ";
  for (std::size_t k = w.lo; k < w.hi; ++k) os << (detail::is_p_rule(k, g) ? '+' : detail::is_m_rule(k, g) ? '|' : ' ');
  os << '\n';
  for (long long level = top; level >= bottom; --level) {
    os << std::setw(4) << level << ' ';
    for (long long v : vals) os << (v == level ? '*' : level == 0 ? '-' : ' ');
    os << '\n';
  }
  return os.str();
}

/// SVG step plot: one <polyline> per p-window overlapping the range, a
/// vertical <line> at every window boundary (class "p-rule" or "m-rule"),
/// and the width labels "m", "r" and "p" over the windows.
inline std::string plot_svg(const IntPoly& f, const PlotGrid& g, PlotWindow w) {
  if (w.hi <= w.lo) throw std::invalid_argument("plot: empty range");
  const auto vals = detail::levels_in(f, w);
  long long top = 1, bottom = -1;
  for (long long v : vals) {
    top = std::max(top, v);
    bottom = std::min(bottom, v);
  }
  constexpr double dx = 8.0, dy = 24.0, margin = 30.0;
  const double width = static_cast<double>(w.hi - w.lo) * dx + 2 * margin;
  const double height = static_cast<double>(top - bottom) * dy + 3 * margin;
  auto X = [&](std::size_t k) { return margin + static_cast<double>(k - w.lo) * dx; };
  auto Y = [&](long long v) { return 2 * margin + static_cast<double>(top - v) * dy; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "  <title>Phi_" << g.m * g.p << " coefficients " << w.lo << ".." << w.hi << "</title>\n";
  os << "  <line class=\"axis\" x1=\"" << X(w.lo) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(w.hi) << "\" y2=\"" << Y(0)
     << "\" stroke=\"#999\"/>\n";

  const auto p = static_cast<std::size_t>(g.p);
  const auto m = static_cast<std::size_t>(g.m);
  for (std::size_t k = w.lo; k <= w.hi; ++k) {
    const bool pr = detail::is_p_rule(k, g), mr = detail::is_m_rule(k, g);
    if (!pr && !mr) continue;
    os << "  <line class=\"" << (pr ? "p-rule" : "m-rule") << "\" x1=\"" << X(k) << "\" y1=\"" << margin << "\" x2=\""
       << X(k) << "\" y2=\"" << height - margin / 2 << "\" stroke=\"" << (pr ? "#000" : "#bbb") << "\"/>\n";
  }

  // Labels: "p" across each p-window, "m" or "r" across each sub-window.
  for (std::size_t start = w.lo - w.lo % p; start < w.hi; start += p) {
    const std::size_t a = std::max(start, w.lo), b = std::min(start + p, w.hi);
    os << "  <text class=\"p-label\" x=\"" << (X(a) + X(b)) / 2 << "\" y=\"" << margin * 0.6
       << "\" text-anchor=\"middle\">p</text>\n";
    for (std::size_t sub = start; sub < start + p; sub += m) {
      const std::size_t end = std::min(sub + m, start + p);
      const std::size_t sa = std::max(sub, w.lo), sb = std::min(end, w.hi);
      if (sa >= sb) continue;
      os << "  <text class=\"" << (end - sub == m ? "m-label" : "r-label") << "\" x=\"" << (X(sa) + X(sb)) / 2
         << "\" y=\"" << height - margin / 4 << "\" text-anchor=\"middle\">" << (end - sub == m ? "m" : "r")
         << "</text>\n";
    }
  }

  for (std::size_t start = w.lo - w.lo % p; start < w.hi; start += p) {
    const std::size_t a = std::max(start, w.lo), b = std::min(start + p, w.hi);
    os << "  <polyline class=\"window\" fill=\"none\" stroke=\"#1f4e9c\" points=\"";
    for (std::size_t k = a; k < b; ++k) {
      const long long v = vals[k - w.lo];
      os << X(k) << ',' << Y(v) << ' ' << X(k + 1) << ',' << Y(v) << (k + 1 < b ? " " : "");
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cycloblock

#endif  // CYCLOBLOCK_PLOT_HPP
