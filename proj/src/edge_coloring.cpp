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

#include "spider/edge_coloring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "spider/errors.hpp"

namespace spider {

ExtensionGraph build_extension_graph(std::span<const QPath> q, VertexId r,
                                     std::span<const VertexId> excluded, std::size_t ell,
                                     Mode mode, CheckLog* log) {
  const auto is_excluded = [&](VertexId v) {
    return std::binary_search(excluded.begin(), excluded.end(), v);
  };
  ExtensionGraph h;
  std::unordered_map<std::uint64_t, std::size_t> pair_index;
  std::unordered_map<VertexId, std::size_t> degree;
  pair_index.reserve(q.size());
  for (const QPath& p : q) {
    if (p.last != r || p.first == r || p.middle == r || is_excluded(p.first) ||
        is_excluded(p.middle) || p.first == p.middle) {
      throw std::invalid_argument("path " + std::to_string(p.first) + " -> " +
                                  std::to_string(p.middle) + " -> " + std::to_string(p.last) +
                                  " is not a leg candidate at root " + std::to_string(r));
    }
    const VertexId lo = std::min(p.first, p.middle);
    const VertexId hi = std::max(p.first, p.middle);
    const std::uint64_t key = (std::uint64_t{lo} << 32) | hi;
    if (pair_index.emplace(key, h.edges.size()).second) {
      h.edges.push_back({{lo, hi}, {p.first, p.middle}});
      ++degree[lo];
      ++degree[hi];
    }
  }
  h.vertices.reserve(degree.size());
  for (const auto& [v, deg] : degree) {
    h.vertices.push_back(v);
    h.max_degree = std::max(h.max_degree, deg);
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  enforce(make_check("Δ(H) ≤ 2ℓ−2", static_cast<std::int64_t>(h.max_degree), Relation::kLessEqual,
                     2 * static_cast<std::int64_t>(ell) - 2),
          mode, log);
  return h;
}

std::size_t coloring_edge_budget(std::size_t ell) noexcept {
  return (2 * ell - 1) * (ell - 1) + 1;
}

ExtensionGraph truncate_for_coloring(const ExtensionGraph& h, std::size_t ell) {
  const std::size_t budget = coloring_edge_budget(ell);
  if (h.edges.size() <= budget) return h;
  ExtensionGraph t;
  t.edges.assign(h.edges.begin(), h.edges.begin() + static_cast<std::ptrdiff_t>(budget));
  std::unordered_map<VertexId, std::size_t> degree;
  for (const ExtensionEdge& e : t.edges) {
    ++degree[e.ends.u];
    ++degree[e.ends.v];
  }
  for (const auto& [v, deg] : degree) {
    t.vertices.push_back(v);
    t.max_degree = std::max(t.max_degree, deg);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  return t;
}

namespace {

// Incremental Vizing colorer over compact vertex ids. at_[x * palette + c]
// is the edge with color c at x, or -1.
class VizingColorer {
 public:
  VizingColorer(std::size_t vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> ends,
                std::size_t palette)
      : palette_(palette),
        ends_(std::move(ends)),
        color_(ends_.size(), -1),
        at_(vertices * palette, -1),
        mark_(vertices, 0) {}

  void color_all() {
    for (std::size_t e = 0; e < ends_.size(); ++e) color_edge(static_cast<std::int32_t>(e));
  }

  std::vector<std::uint32_t> colors() const {
    std::vector<std::uint32_t> out(color_.size());
    for (std::size_t e = 0; e < color_.size(); ++e) {
      if (color_[e] < 0) throw InvariantViolation("Vizing insertion left an edge uncolored");
      out[e] = static_cast<std::uint32_t>(color_[e]);
    }
    return out;
  }

 private:
  std::int32_t& slot(std::uint32_t x, std::int32_t c) { return at_[x * palette_ + static_cast<std::size_t>(c)]; }
  bool is_free(std::uint32_t x, std::int32_t c) { return slot(x, c) < 0; }
  std::uint32_t other(std::int32_t e, std::uint32_t x) const {
    const auto& [a, b] = ends_[static_cast<std::size_t>(e)];
    return a == x ? b : a;
  }

  std::int32_t free_color(std::uint32_t x) {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(palette_); ++c) {
      if (is_free(x, c)) return c;
    }
    throw InvariantViolation("no free color at a vertex; palette below max degree + 1");
  }

  void assign(std::int32_t e, std::int32_t c) {
    const auto& [a, b] = ends_[static_cast<std::size_t>(e)];
    color_[static_cast<std::size_t>(e)] = c;
    slot(a, c) = e;
    slot(b, c) = e;
  }

  void clear(std::int32_t e) {
    const std::int32_t c = color_[static_cast<std::size_t>(e)];
    const auto& [a, b] = ends_[static_cast<std::size_t>(e)];
    slot(a, c) = -1;
    slot(b, c) = -1;
    color_[static_cast<std::size_t>(e)] = -1;
  }

  // Swaps colors c and d along the maximal path leaving `start` by its d-edge.
  void invert_path(std::uint32_t start, std::int32_t c, std::int32_t d) {
    path_.clear();
    std::uint32_t x = start;
    std::int32_t want = d;
    while (true) {
      const std::int32_t e = slot(x, want);
      if (e < 0) break;
      path_.push_back(e);
      x = other(e, x);
      want = want == d ? c : d;
    }
    for (std::int32_t e : path_) clear_keep_color(e);
    for (std::int32_t e : path_) {
      const std::int32_t old = color_[static_cast<std::size_t>(e)];
      assign(e, old == d ? c : d);
    }
  }

  // Removes the at_ entries but leaves color_ so the swap can read it.
  void clear_keep_color(std::int32_t e) {
    const std::int32_t c = color_[static_cast<std::size_t>(e)];
    const auto& [a, b] = ends_[static_cast<std::size_t>(e)];
    slot(a, c) = -1;
    slot(b, c) = -1;
  }

  void color_edge(std::int32_t e) {
    const auto [u, v0] = ends_[static_cast<std::size_t>(e)];
    if (++generation_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      generation_ = 1;
    }

    // Maximal fan at u: the color of (u, fan[i]) is free on fan[i-1].
    fan_.assign(1, v0);
    fan_edges_.assign(1, e);
    mark_[v0] = generation_;
    while (true) {
      const std::uint32_t last = fan_.back();
      bool grew = false;
      for (std::int32_t c = 0; c < static_cast<std::int32_t>(palette_) && !grew; ++c) {
        if (!is_free(last, c)) continue;
        const std::int32_t f = slot(u, c);
        if (f < 0) continue;
        const std::uint32_t y = other(f, u);
        if (mark_[y] == generation_) continue;
        mark_[y] = generation_;
        fan_.push_back(y);
        fan_edges_.push_back(f);
        grew = true;
      }
      if (!grew) break;
    }

    const std::int32_t c = free_color(u);
    const std::int32_t d = free_color(fan_.back());
    invert_path(u, c, d);

    // First fan prefix that is still a fan and ends at a vertex missing d.
    std::size_t w = fan_.size();
    for (std::size_t i = 0; i < fan_.size(); ++i) {
      if (i > 0 && !is_free(fan_[i - 1], color_[static_cast<std::size_t>(fan_edges_[i])])) break;
      if (is_free(fan_[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan_.size()) throw InvariantViolation("Vizing fan rotation found no pivot");

    rotated_.resize(w + 1);
    for (std::size_t i = 0; i < w; ++i) rotated_[i] = color_[static_cast<std::size_t>(fan_edges_[i + 1])];
    rotated_[w] = d;
    for (std::size_t i = 1; i <= w; ++i) clear(fan_edges_[i]);
    for (std::size_t i = 0; i <= w; ++i) assign(fan_edges_[i], rotated_[i]);
  }

  std::size_t palette_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends_;
  std::vector<std::int32_t> color_;
  std::vector<std::int32_t> at_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t generation_ = 0;
  std::vector<std::uint32_t> fan_;
  std::vector<std::int32_t> fan_edges_;
  std::vector<std::int32_t> path_;
  std::vector<std::int32_t> rotated_;
};

}  // namespace

EdgeColoring vizing_color(std::span<const UndirectedEdge> edges) {
  std::vector<VertexId> ids;
  ids.reserve(2 * edges.size());
  for (const UndirectedEdge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto local = [&](VertexId v) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  ends.reserve(edges.size());
  std::vector<std::size_t> degree(ids.size(), 0);
  std::unordered_map<std::uint64_t, bool> seen;
  seen.reserve(edges.size());
  for (const UndirectedEdge& e : edges) {
    const std::uint32_t a = local(std::min(e.u, e.v));
    const std::uint32_t b = local(std::max(e.u, e.v));
    if (!seen.emplace((std::uint64_t{a} << 32) | b, true).second) {
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    ends.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
  }
  const std::size_t max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  const std::size_t palette = max_degree + 1;

  VizingColorer colorer(ids.size(), std::move(ends), palette);
  colorer.color_all();
  return {colorer.colors(), palette};
}

EdgeColoring vizing_color(const ExtensionGraph& h) {
  std::vector<UndirectedEdge> edges;
  edges.reserve(h.edges.size());
  for (const ExtensionEdge& e : h.edges) edges.push_back(e.ends);
  return vizing_color(edges);
}

bool is_proper(std::span<const UndirectedEdge> edges, const EdgeColoring& col) {
  if (col.color_of.size() != edges.size()) return false;
  std::unordered_map<std::uint64_t, std::size_t> used;
  used.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::uint32_t c = col.color_of[i];
    if (c >= col.palette) return false;
    for (VertexId x : {edges[i].u, edges[i].v}) {
      if (!used.emplace((std::uint64_t{x} << 32) | c, i).second) return false;
    }
  }
  return true;
}

std::vector<std::size_t> largest_color_class(const ExtensionGraph& h, const EdgeColoring& col,
                                             Mode mode, CheckLog* log) {
  std::vector<std::size_t> count(col.palette, 0);
  for (std::uint32_t c : col.color_of) ++count[c];
  std::size_t best = 0;
  for (std::size_t c = 1; c < count.size(); ++c) {
    if (count[c] > count[best]) best = c;
  }
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < col.color_of.size(); ++i) {
    if (col.color_of[i] == best) members.push_back(i);
  }
  const auto edges = static_cast<std::int64_t>(h.edges.size());
  const auto palette = static_cast<std::int64_t>(std::max<std::size_t>(col.palette, 1));
  enforce(make_check("s ≥ ⌈|E(H)|/palette⌉", static_cast<std::int64_t>(members.size()),
                     Relation::kGreaterEqual, (edges + palette - 1) / palette),
          mode, log);
  return members;
}

void write_coloring(std::ostream& out, const ExtensionGraph& h, const EdgeColoring& col) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    out << h.edges[i].ends.u << ' ' << h.edges[i].ends.v << ' ' << col.color_of[i] << '\n';
  }
}

}  // namespace spider
