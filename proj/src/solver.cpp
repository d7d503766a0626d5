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

#include "spider/solver.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "spider/errors.hpp"
#include "spider/extenders.hpp"
#include "spider/root_selection.hpp"

namespace spider {

namespace {

bool is_out_regular(const Digraph& g, std::size_t d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) != d) return false;
  }
  return true;
}

}  // namespace

SolveOutcome find_spider(const Digraph& g, std::size_t ell, Mode mode) {
  if (ell == 0) throw std::invalid_argument("spider size ell must be at least 1");
  const std::size_t d = 2 * ell;
  const auto sl = static_cast<std::int64_t>(ell);

  SolveOutcome out;
  SolveTrace& t = out.trace;
  t.ell = ell;
  t.d = d;
  CheckLog* log = &t.checks;

  std::optional<Digraph> regularized;
  if (!is_out_regular(g, d)) regularized = extract_exact_outdegree_subgraph(g, d);
  const Digraph& work = regularized ? *regularized : g;

  const ABPartition part = partition_by_in_degree(work, ell);
  t.a_set_size = part.a_set.size();
  const std::vector<RootScore> scores = score_roots(work, part, ell);
  const RootScore best = select_root(scores, ell, mode, log);
  const VertexId r = best.x;
  t.root = r;
  t.score = best.score;
  t.vb_r = best.vb_x;

  const ExtenderPool pool = strong_extender_pool(work, r, ell, part.in_a);
  t.a = pool.a_r.size();
  t.c = pool.c_r.size();
  if (t.a != best.a_x) {
    throw InvariantViolation("A_r size disagrees with the root score");
  }

  const std::vector<QPath> q = compute_q_paths(work, r, part, pool, mode, log);
  t.q_size = q.size();

  std::vector<VertexId> excluded;
  excluded.reserve(t.a + t.c);
  excluded.insert(excluded.end(), pool.a_r.begin(), pool.a_r.end());
  excluded.insert(excluded.end(), pool.c_r.begin(), pool.c_r.end());
  std::sort(excluded.begin(), excluded.end());
  const ExtensionGraph h = build_extension_graph(q, r, excluded, ell, mode, log);
  t.h_edges = h.edges.size();
  t.h_max_degree = h.max_degree;

  out.colored = truncate_for_coloring(h, ell);
  t.truncated = out.colored.edges.size() < h.edges.size();
  t.colored_edges = out.colored.edges.size();
  out.coloring = vizing_color(out.colored);
  t.palette = out.coloring.palette;
  if (mode == Mode::kChecked) {
    std::vector<UndirectedEdge> ends;
    ends.reserve(out.colored.edges.size());
    for (const ExtensionEdge& e : out.colored.edges) ends.push_back(e.ends);
    if (!is_proper(ends, out.coloring)) throw InvariantViolation("edge coloring is not proper");
  }
  enforce(make_check("palette ≤ 2ℓ−1", static_cast<std::int64_t>(t.palette), Relation::kLessEqual,
                     2 * sl - 1),
          mode, log);

  const std::vector<std::size_t> cls = largest_color_class(out.colored, out.coloring, mode, log);
  t.s = cls.size();
  const auto s = static_cast<std::int64_t>(t.s);
  if (!t.truncated) {
    enforce(make_check("s(2ℓ−1) ≥ |E(H)|", s * (2 * sl - 1), Relation::kGreaterEqual,
                       static_cast<std::int64_t>(t.h_edges)),
            mode, log);
    // An H-edge realized in both orientations counts twice in Q_r, so this
    // form can fail by the number of such pairs; a+c+s >= ell still holds.
    enforce(advisory(make_check("s(2ℓ−1) ≥ |Q_r|", s * (2 * sl - 1), Relation::kGreaterEqual,
                                static_cast<std::int64_t>(t.q_size))),
            mode, log);
  }
  enforce(make_check("a+c+s ≥ ℓ", static_cast<std::int64_t>(t.a + t.c) + s, Relation::kGreaterEqual,
                     sl),
          mode, log);

  Spider base{r, {}};
  for (std::size_t i = 0; i < cls.size() && base.legs.size() < ell; ++i) {
    base.legs.push_back(out.colored.edges[cls[i]].payload);
  }
  if (base.legs.size() >= ell) {
    out.spider = std::move(base);
  } else {
    // A_r first, then C_r, each ascending.
    const std::size_t need = ell - base.legs.size();
    std::vector<VertexId> f;
    f.reserve(need);
    for (VertexId x : pool.a_r) {
      if (f.size() < need) f.push_back(x);
    }
    for (VertexId x : pool.c_r) {
      if (f.size() < need) f.push_back(x);
    }
    if (f.size() < need) {
      throw InvariantViolation("only " + std::to_string(f.size()) + " strong extenders for " +
                               std::to_string(need) + " missing legs");
    }
    t.extended = need;
    out.spider = greedy_extend(work, r, base, f);
  }

  if (mode == Mode::kChecked) {
    if (const auto bad = verify_spider(g, out.spider, ell)) {
      throw InvariantViolation("solver output fails verification: " + bad->describe());
    }
  }
  return out;
}

std::string explain_trace(const SolveTrace& t) {
  std::ostringstream os;
  os << "ℓ = " << t.ell << ", d = 2ℓ = " << t.d << "\n";
  os << "root r = " << t.root << ", score d·|A_r|+|VB_r| = " << t.score << "\n";
  os << "|A| = " << t.a_set_size << ", a = |A_r| = " << t.a << ", c = |C_r| = " << t.c
     << ", |VB_r| = " << t.vb_r << ", |Q_r| = " << t.q_size << "\n";
  os << "H: " << t.h_edges << " edges, Δ(H) = " << t.h_max_degree << "\n";
  if (t.truncated) {
    os << "coloring instance capped at " << t.colored_edges << " of " << t.h_edges
       << " edges (largest class already reaches ℓ)\n";
  }
  os << "palette = " << t.palette << ", largest color class s = " << t.s << "\n";
  if (t.extended == 0) {
    os << "extension skipped: s ≥ ℓ\n";
  } else {
    os << "greedy extension added " << t.extended << " legs from A_r ∪ C_r\n";
  }
  for (const BoundCheck& check : t.checks) os << render(check) << "\n";
  return os.str();
}

}  // namespace spider
