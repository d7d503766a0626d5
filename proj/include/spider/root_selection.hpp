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

#ifndef SPIDER_ROOT_SELECTION_HPP_
#define SPIDER_ROOT_SELECTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "spider/checks.hpp"
#include "spider/digraph.hpp"
#include "spider/extenders.hpp"

namespace spider {

// Split of the 2*ell-out-regular working graph at in-degree 2*ell.
struct ABPartition {
  std::vector<VertexId> a_set;  // in-degree >= 2*ell, ascending
  std::vector<VertexId> b_set;  // in-degree <= 2*ell - 1, ascending
  std::vector<char> in_a;       // membership bitmap over all vertices
};

ABPartition partition_by_in_degree(const Digraph& g, std::size_t ell);

// a_x = |N-(x) ∩ A|, vb_x = number of simple 2-paths v -> b -> x with b in B,
// score = 2*ell*a_x + vb_x.
struct RootScore {
  VertexId x = 0;
  std::size_t a_x = 0;
  std::size_t vb_x = 0;
  std::size_t score = 0;
  friend bool operator==(const RootScore&, const RootScore&) = default;
};

// One entry per member of part.a_set, in a_set order. Runs in O(m) total.
// Throws InvariantViolation if A is empty.
std::vector<RootScore> score_roots(const Digraph& g, const ABPartition& part, std::size_t ell);

// Highest score, smallest id on ties. Checks score >= d^2 - d.
// Throws std::invalid_argument on an empty sequence.
RootScore select_root(std::span<const RootScore> scores, std::size_t ell,
                      Mode mode = Mode::kChecked, CheckLog* log = nullptr);

// A path first -> middle -> last with middle in B and last the root.
struct QPath {
  VertexId first = 0;
  VertexId middle = 0;
  VertexId last = 0;
  friend bool operator==(const QPath&, const QPath&) = default;
};

// All v -> b -> r with b in B, v != r and neither v nor b a strong extender,
// in discovery order (in(r) order, then in(b) order). Checks the lower bound
// |Q_r| >= d^2 - d - (a+c)(4*ell - 1); in checked mode also re-validates each
// path and audits the per-extender path caps over VB_r.
std::vector<QPath> compute_q_paths(const Digraph& g, VertexId r, const ABPartition& part,
                                   const ExtenderPool& pool, Mode mode = Mode::kChecked,
                                   CheckLog* log = nullptr);

}  // namespace spider

#endif  // SPIDER_ROOT_SELECTION_HPP_
