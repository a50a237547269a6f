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
#ifndef CYCLOBLOCK_TOOLS_CLI_APP_HPP
#define CYCLOBLOCK_TOOLS_CLI_APP_HPP

// Command dispatch for the `cycloblock` tool, callable in-process so tests can
// drive it with string streams.
//
// Exit codes: 0 success, 1 failed check, 2 usage error, 3 invalid instance.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycloblock/cycloblock.hpp"

namespace cycloblock::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInvalidInstance = 3 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw UsageError("bad integer in list: " + tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer in list: " + tok);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

inline PlotWindow parse_range(const std::string& s, std::size_t default_hi) {
  if (s.empty()) return {0, default_hi};
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects lo:hi");
  try {
    const auto lo = std::stoull(s.substr(0, colon));
    const auto hi = std::stoull(s.substr(colon + 1));
    if (hi <= lo) throw UsageError("--range needs lo < hi");
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects lo:hi");
  }
}

// Writes to --out when given, else to the command's stdout.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

inline void write_reports(const std::vector<CheckReport>& reports, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    os << csv_header() << '\n';
    for (const auto& r : reports) os << to_csv_line(r) << '\n';
  } else {
    for (const auto& r : reports) os << to_json_line(r) << '\n';
  }
}

inline std::size_t count_failures(const std::vector<CheckReport>& reports) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block decomposition of cyclotomic polynomials Phi_{mp}", "cycloblock"};
  app.require_subcommand(1);

  const std::vector<std::string> poly_formats{"pretty", "dense", "sparse", "json"};

  // phi / psi
  std::int64_t n_arg = 0;
  std::string poly_fmt = "pretty";
  auto* phi = app.add_subcommand("phi", "Print the cyclotomic polynomial Phi_n");
  phi->add_option("n", n_arg, "index")->required()->check(CLI::PositiveNumber);
  phi->add_option("--format", poly_fmt, "pretty|dense|sparse|json")->check(CLI::IsMember(poly_formats));
  auto* psi = app.add_subcommand("psi", "Print the inverse cyclotomic polynomial Psi_m");
  psi->add_option("m", n_arg, "index")->required()->check(CLI::PositiveNumber);
  psi->add_option("--format", poly_fmt, "pretty|dense|sparse|json")->check(CLI::IsMember(poly_formats));

  // Shared (m, p) positionals.
  std::int64_t m = 0, p = 0;
  auto add_mp = [&](CLI::App* sub) {
    sub->add_option("m", m, "odd squarefree m >= 3")->required();
    sub->add_option("p", p, "prime p coprime to m, p > phi(m)")->required();
  };

  std::optional<std::int64_t> block_index;
  bool all_slices = false, cross_check = false;
  auto* blocks = app.add_subcommand("blocks", "List the base blocks f_{m,p,i,0}");
  add_mp(blocks);
  blocks->add_option("--i", block_index, "print only base block i");
  blocks->add_flag("--all", all_slices, "print every slice (i, j)");
  blocks->add_flag("--check", cross_check, "compare every slice with the oracle partition");

  std::uint64_t k_arg = 0;
  auto* coeff = app.add_subcommand("coeff", "Print the coefficient of x^k in Phi_{mp}");
  add_mp(coeff);
  coeff->add_option("k", k_arg, "exponent")->required();

  std::string asm_fmt = "dense", out_path;
  bool asm_verify = false;
  auto* assemble = app.add_subcommand("assemble", "Rebuild Phi_{mp} from the block table");
  add_mp(assemble);
  assemble->add_option("--format", asm_fmt, "dense|sparse|json|pretty")->check(CLI::IsMember(poly_formats));
  assemble->add_option("--out", out_path, "output file");
  assemble->add_flag("--verify", asm_verify, "compare with the substitute-and-divide oracle");

  std::vector<std::int64_t> ptildes;
  std::string check_names, report_fmt = "jsonl";
  auto* verify = app.add_subcommand("verify", "Run the structural checks on one instance");
  add_mp(verify);
  verify->add_option("--ptilde", ptildes, "second prime for invariance / semi-invariance (repeatable)");
  verify->add_option("--checks", check_names, "comma-separated subset of checks");
  verify->add_option("--format", report_fmt, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));

  std::string m_list_arg, report_path;
  std::int64_t p_max = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run all checks over a range of instances");
  sweep_cmd->add_option("--m", m_list_arg, "comma-separated list of m")->required();
  sweep_cmd->add_option("--p-max", p_max, "exclusive upper bound on p")->required();
  sweep_cmd->add_option("--report", report_path, "report file (default: stdout)");
  sweep_cmd->add_option("--format", report_fmt, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));

  std::size_t lookups = 1000;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "Time the dense oracle against the block table");
  add_mp(bench);
  bench->add_option("--lookups", lookups, "number of random coeff_at calls");
  bench->add_option("--seed", seed, "seed for the random exponents");

  std::string plot_fmt = "ascii", range_arg;
  auto* plot = app.add_subcommand("plot", "Step plot of the coefficients with block boundaries");
  add_mp(plot);
  plot->add_option("--format", plot_fmt, "ascii|svg")->check(CLI::IsMember({"ascii", "svg"}));
  plot->add_option("--range", range_arg, "exponent window lo:hi");
  plot->add_option("--out", out_path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (phi->parsed() || psi->parsed()) {
      const IntPoly f = phi->parsed() ? phi_oracle(n_arg) : psi_oracle(n_arg);
      out << format_poly(f, *poly_format_from_string(poly_fmt), n_arg);
      return kOk;
    }

    if (blocks->parsed()) {
      const auto table = build_table(make_context(m, p));
      const auto& ctx = table.ctx;
      if (block_index) {
        if (*block_index < 0 || *block_index >= ctx.phi_m) throw detail::UsageError("--i must be in 0..phi(m)-1");
        out << to_dense(table.base[static_cast<std::size_t>(*block_index)]) << '\n';
      } else if (all_slices) {
        for (std::int64_t i = 0; i < ctx.phi_m; ++i)
          for (std::int64_t j = 0; j <= ctx.q; ++j) {
            const auto& b = table.base[static_cast<std::size_t>(i)];
            const auto len = static_cast<std::size_t>(j < ctx.q ? ctx.m : ctx.r);
            out << "i=" << i << " j=" << j << ": " << to_dense(b.coeffs().first(len)) << '\n';
          }
      } else {
        for (std::int64_t i = 0; i < ctx.phi_m; ++i)
          out << "i=" << i << ": " << to_dense(table.base[static_cast<std::size_t>(i)]) << '\n';
      }
      if (cross_check) {
        const auto part = partition_from_oracle(m, p);
        for (std::int64_t i = 0; i < ctx.phi_m; ++i)
          for (std::int64_t j = 0; j <= ctx.q; ++j) {
            const Block expected = j < ctx.q ? table.base[static_cast<std::size_t>(i)] : final_block(ctx, i);
            if (!(part.at(i, j) == expected)) {
              err << "MISMATCH i=" << i << " j=" << j << '\n';
              return kCheckFailed;
            }
          }
        err << "check OK\n";
      }
      return kOk;
    }

    if (coeff->parsed()) {
      out << coeff_at(build_table(make_context(m, p)), k_arg) << '\n';
      return kOk;
    }

    if (assemble->parsed()) {
      const auto ctx = make_context(m, p);
      const IntPoly f = assemble_phi_mp(build_table(ctx));
      if (!asm_verify || !out_path.empty()) detail::emit(format_poly(f, *poly_format_from_string(asm_fmt), m * p), out_path, out);
      if (asm_verify) {
        if (f != phi_mp_oracle(m, p)) {
          out << "MISMATCH\n";
          return kCheckFailed;
        }
        out << "OK degree=" << f.degree() << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<CheckKind> wanted;
      if (!check_names.empty()) {
        std::stringstream ss(check_names);
        std::string name;
        while (std::getline(ss, name, ',')) {
          auto kind = check_kind_from_string(name);
          if (!kind) throw detail::UsageError("unknown check: " + name);
          wanted.push_back(*kind);
        }
      }
      auto selected = [&](CheckKind k) { return wanted.empty() || std::find(wanted.begin(), wanted.end(), k) != wanted.end(); };

      const auto base = Instance::build(m, p);
      std::vector<CheckReport> reports;
      for (auto& r : run_intra_checks(base))
        if (selected(r.check)) reports.push_back(r);
      for (std::int64_t pt : ptildes) {
        const auto other = Instance::build(m, pt);
        auto r = run_inter_check(base, other);
        if (selected(r.check)) reports.push_back(r);
      }
      sort_reports(reports);
      detail::write_reports(reports, report_fmt, out);
      const auto failures = detail::count_failures(reports);
      err << "checks=" << reports.size() << " failures=" << failures << '\n';
      return failures == 0 ? kOk : kCheckFailed;
    }

    if (sweep_cmd->parsed()) {
      const auto result = sweep(detail::parse_int_list(m_list_arg), p_max);
      std::ostringstream text;
      detail::write_reports(result.reports, report_fmt, text);
      detail::emit(text.str(), report_path, out);
      for (const auto& s : result.skipped) {
        err << "skipped m=" << s.m;
        if (s.p) err << " p=" << *s.p;
        err << ": " << s.reason << '\n';
      }
      err << "reports=" << result.reports.size() << " failures=" << result.failures()
          << " skipped=" << result.skipped.size() << '\n';
      return result.failures() == 0 ? kOk : kCheckFailed;
    }

    if (bench->parsed()) {
      const auto res = run_bench(m, p, lookups, seed);
      out << std::fixed << std::setprecision(6);
      out << "instance m=" << m << " p=" << p << " degree=" << res.degree << '\n';
      out << "oracle          time=" << res.oracle_seconds << "s footprint=" << res.oracle_footprint << '\n';
      out << "table+assemble  time=" << res.assemble_seconds << "s footprint=" << res.table_footprint << '\n';
      out << "table+coeff_at  time=" << res.random_access_seconds << "s footprint=" << res.table_footprint
          << " lookups=" << res.lookups << '\n';
      out << "equality " << (res.equal ? "OK" : "MISMATCH") << '\n';
      out << "lookups " << (res.lookups_agree ? "OK" : "MISMATCH") << '\n';
      return res.equal && res.lookups_agree ? kOk : kCheckFailed;
    }

    if (plot->parsed()) {
      const auto ctx = make_context(m, p);
      const IntPoly f = assemble_phi_mp(build_table(ctx));
      const auto window = detail::parse_range(range_arg, f.size());
      const PlotGrid grid{ctx.m, ctx.p, ctx.r};
      detail::emit(plot_fmt == "svg" ? plot_svg(f, grid, window) : plot_ascii(f, grid, window), out_path, out);
      return kOk;
    }
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cycloblock::cli

#endif  // CYCLOBLOCK_TOOLS_CLI_APP_HPP
