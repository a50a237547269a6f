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
#ifndef CYCLOBLOCK_CYCLOBLOCK_HPP
#define CYCLOBLOCK_CYCLOBLOCK_HPP

#include "cycloblock/polyring.hpp"
#include "cycloblock/numtheory.hpp"
#include "cycloblock/cyclotomic.hpp"
#include "cycloblock/blocks.hpp"
#include "cycloblock/verify.hpp"
#include "cycloblock/format.hpp"
#include "cycloblock/plot.hpp"
#include "cycloblock/bench.hpp"

#endif  // CYCLOBLOCK_CYCLOBLOCK_HPP
