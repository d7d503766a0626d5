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

#ifndef SPIDER_DIGRAPH_HPP_
#define SPIDER_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace spider {

// Dense 0-based vertex index, always < vertex_count() of the owning graph.
using VertexId = std::uint32_t;

struct Edge {
  VertexId from;
  VertexId to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple directed graph stored as two CSR arrays.
//
// Out-adjacency keeps the order in which edges were supplied. In-adjacency is
// derived from it by scanning sources in ascending id, so it is a pure
// function of the out-adjacency. Antiparallel pairs are allowed; self-loops
// and repeated directed edges are rejected at construction.
class Digraph {
 public:
  Digraph() = default;

  // Throws GraphError naming the first offending edge.
  static Digraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  std::span<const VertexId> out(VertexId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  // Linear scan of the shorter of out(u) and in(v). Out-of-range ids give false.
  bool has_edge(VertexId u, VertexId v) const noexcept;

  // All edges in out-adjacency order (source ascending).
  std::vector<Edge> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
};

struct DegreeProfile {
  std::vector<std::size_t> out_deg;
  std::vector<std::size_t> in_deg;
  std::size_t min_out = 0;
  std::size_t max_in = 0;
};

DegreeProfile degree_profile(const Digraph& g);

// Throws std::invalid_argument on a graph with no vertices.
std::size_t min_out_degree(const Digraph& g);

// Spanning subgraph keeping the first `d` out-edges of every vertex.
// Throws InsufficientOutDegree naming the first vertex with fewer.
Digraph extract_exact_outdegree_subgraph(const Digraph& g, std::size_t d);

// Edge-list text: header "n m", then m lines "u v". Lines whose first
// non-blank character is '#' and blank lines are skipped. Throws ParseError.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Digraph& g);

}  // namespace spider

#endif  // SPIDER_DIGRAPH_HPP_
