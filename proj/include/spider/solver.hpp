// Copyright 2026 The Spider Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPIDER_SOLVER_HPP_
#define SPIDER_SOLVER_HPP_

#include <cstddef>
#include <string>

#include "spider/checks.hpp"
#include "spider/digraph.hpp"
#include "spider/edge_coloring.hpp"
#include "spider/spider.hpp"

namespace spider {

// Every intermediate quantity of one find_spider run.
struct SolveTrace {
  std::size_t ell = 0;
  std::size_t d = 0;              // 2 * ell
  VertexId root = 0;
  std::size_t score = 0;          // d * a + vb_r
  std::size_t a = 0;              // |A_r|
  std::size_t c = 0;              // |C_r|
  std::size_t s = 0;              // legs of the color-class spider
  std::size_t q_size = 0;         // |Q_r|
  std::size_t vb_r = 0;           // |VB_r|
  std::size_t a_set_size = 0;     // |A|
  std::size_t h_edges = 0;        // edges of H before truncation
  std::size_t h_max_degree = 0;   // Δ(H) before truncation
  std::size_t colored_edges = 0;  // edges handed to the colorer
  std::size_t palette = 0;
  std::size_t extended = 0;       // legs added by greedy extension
  bool truncated = false;
  CheckLog checks;

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

struct SolveOutcome {
  Spider spider;
  SolveTrace trace;
  ExtensionGraph colored;  // the (possibly truncated) instance that was colored
  EdgeColoring coloring;
};

// Finds a spider with exactly `ell` legs in any digraph of minimum out-degree
// at least 2 * ell. Works on the first-2*ell-out-edges subgraph and returns a
// spider whose edges belong to `g`.
//
// Throws InsufficientOutDegree below the threshold, std::invalid_argument for
// ell == 0, and (checked mode) InvariantViolation if any bound fails.
SolveOutcome find_spider(const Digraph& g, std::size_t ell, Mode mode = Mode::kChecked);

// Multi-line report of the trace quantities and every bound check.
std::string explain_trace(const SolveTrace& t);

}  // namespace spider

#endif  // SPIDER_SOLVER_HPP_
