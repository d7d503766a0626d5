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

#include "spider/root_selection.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "spider/errors.hpp"

namespace spider {

ABPartition partition_by_in_degree(const Digraph& g, std::size_t ell) {
  ABPartition part;
  const std::size_t n = g.vertex_count();
  part.in_a.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.in_degree(v) >= 2 * ell) {
      part.a_set.push_back(v);
      part.in_a[v] = 1;
    } else {
      part.b_set.push_back(v);
    }
  }
  return part;
}

std::vector<RootScore> score_roots(const Digraph& g, const ABPartition& part, std::size_t ell) {
  if (part.a_set.empty()) {
    throw InvariantViolation("high in-degree class A is empty; input is not out-regular");
  }
  const std::size_t d = 2 * ell;
  std::vector<RootScore> scores;
  scores.reserve(part.a_set.size());
  // marked[b] == x + 1 iff x -> b, so |N-(b) \ {x}| is in_degree(b) - [x -> b].
  std::vector<VertexId> marked(g.vertex_count(), 0);
  for (VertexId x : part.a_set) {
    for (VertexId b : g.out(x)) marked[b] = x + 1;
    RootScore s{x, 0, 0, 0};
    for (VertexId v : g.in(x)) {
      if (part.in_a[v]) {
        ++s.a_x;
      } else {
        s.vb_x += g.in_degree(v) - (marked[v] == x + 1 ? 1 : 0);
      }
    }
    s.score = d * s.a_x + s.vb_x;
    scores.push_back(s);
  }
  return scores;
}

RootScore select_root(std::span<const RootScore> scores, std::size_t ell, Mode mode,
                      CheckLog* log) {
  if (scores.empty()) throw std::invalid_argument("select_root needs at least one score");
  const RootScore* best = &scores.front();
  for (const RootScore& s : scores) {
    if (s.score > best->score || (s.score == best->score && s.x < best->x)) best = &s;
  }
  const auto d = static_cast<std::int64_t>(2 * ell);
  enforce(make_check("score ≥ d²−d", static_cast<std::int64_t>(best->score),
                     Relation::kGreaterEqual, d * d - d),
          mode, log);
  return *best;
}

std::vector<QPath> compute_q_paths(const Digraph& g, VertexId r, const ABPartition& part,
                                   const ExtenderPool& pool, Mode mode, CheckLog* log) {
  if (pool.r != r) throw std::invalid_argument("extender pool was built for another root");
  const std::size_t n = g.vertex_count();
  const std::size_t ell = pool.ell;
  // 1 = in A_r, 2 = in C_r.
  std::vector<char> excluded(n, 0);
  for (VertexId x : pool.a_r) excluded[x] = 1;
  for (VertexId x : pool.c_r) excluded[x] = 2;

  std::vector<QPath> paths;
  for (VertexId b : g.in(r)) {
    if (part.in_a[b] || excluded[b]) continue;
    for (VertexId v : g.in(b)) {
      if (v != r && !excluded[v]) paths.push_back({v, b, r});
    }
  }

  const auto d = static_cast<std::int64_t>(2 * ell);
  const auto ac = static_cast<std::int64_t>(pool.a_r.size() + pool.c_r.size());
  const auto l = static_cast<std::int64_t>(ell);
  enforce(make_check("|Q_r| ≥ d²−d−(a+c)(4ℓ−1)", static_cast<std::int64_t>(paths.size()),
                     Relation::kGreaterEqual, d * d - d - ac * (4 * l - 1)),
          mode, log);

  if (mode == Mode::kChecked) {
    for (const QPath& p : paths) {
      const bool ok = p.first != p.middle && p.middle != p.last && p.first != p.last &&
                      !part.in_a[p.middle] && !excluded[p.first] && !excluded[p.middle] &&
                      g.has_edge(p.first, p.middle) && g.has_edge(p.middle, p.last);
      if (!ok) {
        throw InvariantViolation("Q-path " + std::to_string(p.first) + " -> " +
                                 std::to_string(p.middle) + " -> " + std::to_string(p.last) +
                                 " fails re-validation");
      }
    }
    // How many VB_r paths touch each strong extender.
    std::vector<std::uint32_t> touches(n, 0);
    for (VertexId b : g.in(r)) {
      if (part.in_a[b]) continue;
      for (VertexId v : g.in(b)) {
        if (v == r) continue;
        if (excluded[v]) ++touches[v];
        if (excluded[b]) ++touches[b];
      }
    }
    std::int64_t worst_a = 0;
    std::int64_t worst_c = 0;
    for (VertexId x : pool.a_r) worst_a = std::max<std::int64_t>(worst_a, touches[x]);
    for (VertexId x : pool.c_r) worst_c = std::max<std::int64_t>(worst_c, touches[x]);
    enforce(make_check("max VB_r paths through A_r ≤ 2ℓ−1", worst_a, Relation::kLessEqual,
                       2 * l - 1),
            mode, log);
    enforce(make_check("max VB_r paths through C_r ≤ 4ℓ−1", worst_c, Relation::kLessEqual,
                       4 * l - 1),
            mode, log);
  }
  return paths;
}

}  // namespace spider
