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
// Builds the block table of Phi_{15*53}, prints it, and reads a few
// coefficients back without expanding the polynomial.
#include <iostream>

#include "cycloblock/cycloblock.hpp"

int main() {
  using namespace cycloblock;
  const auto ctx = make_context(15, 53);
  const auto table = build_table(ctx);
  std::cout << "m=" << ctx.m << " p=" << ctx.p << " q=" << ctx.q << " r=" << ctx.r << " phi(m)=" << ctx.phi_m << '\n';
  for (std::size_t i = 0; i < table.base.size(); ++i) std::cout << "f_" << i << ",0 = " << to_pretty(table.base[i].to_poly()) << '\n';
  for (std::uint64_t k : {0u, 60u, 200u, 416u, 417u}) std::cout << "coeff x^" << k << " = " << coeff_at(table, k) << '\n';
  std::cout << "stored " << table.stored_coefficients() << " coefficients for a degree "
            << assemble_phi_mp(table).degree() << " polynomial\n";
}
