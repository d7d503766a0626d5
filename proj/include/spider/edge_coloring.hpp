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

#ifndef SPIDER_EDGE_COLORING_HPP_
#define SPIDER_EDGE_COLORING_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "spider/checks.hpp"
#include "spider/digraph.hpp"
#include "spider/root_selection.hpp"
#include "spider/spider.hpp"

namespace spider {

// Undirected edge {u, v} with u < v.
struct UndirectedEdge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

// Edge of the extension graph together with the directed 2-path
// payload.leaf -> payload.middle -> root that realizes it.
struct ExtensionEdge {
  UndirectedEdge ends;
  Leg payload;
  friend bool operator==(const ExtensionEdge&, const ExtensionEdge&) = default;
};

// Undirected graph of realizable legs at a root, with strong extenders and the
// root removed. Only vertices incident to an edge are listed.
struct ExtensionGraph {
  std::vector<VertexId> vertices;  // ascending
  std::vector<ExtensionEdge> edges;
  std::size_t max_degree = 0;
};

// One edge per realized pair, in path order; the first path seen for a pair
// supplies the payload. Checks max_degree <= 2*ell - 2. Throws
// std::invalid_argument if a path touches r or `excluded` (sorted) outside
// its last position.
ExtensionGraph build_extension_graph(std::span<const QPath> q, VertexId r,
                                     std::span<const VertexId> excluded, std::size_t ell,
                                     Mode mode = Mode::kChecked, CheckLog* log = nullptr);

// Edge budget above which a largest color class already has ell edges:
// (2*ell - 1)(ell - 1) + 1.
std::size_t coloring_edge_budget(std::size_t ell) noexcept;

// Keeps the first coloring_edge_budget(ell) edges when there are more.
ExtensionGraph truncate_for_coloring(const ExtensionGraph& h, std::size_t ell);

// Proper edge coloring; color_of[i] is the color of edge i. palette is
// always max_degree + 1 (1 for an edge-less graph).
struct EdgeColoring {
  std::vector<std::uint32_t> color_of;
  std::size_t palette = 0;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Classical Vizing insertion: maximal fan at one endpoint, invert a two-color
// alternating path, rotate the fan prefix. Edges are colored in input order.
// Throws std::invalid_argument on a loop or repeated pair.
EdgeColoring vizing_color(std::span<const UndirectedEdge> edges);
EdgeColoring vizing_color(const ExtensionGraph& h);

// No two edges sharing an endpoint have equal colors, and all colors are
// below the palette.
bool is_proper(std::span<const UndirectedEdge> edges, const EdgeColoring& col);

// Indices of a maximum color class, smallest color on ties, ascending. Checks
// the pigeonhole bound s >= ceil(|E| / palette).
std::vector<std::size_t> largest_color_class(const ExtensionGraph& h, const EdgeColoring& col,
                                             Mode mode = Mode::kChecked, CheckLog* log = nullptr);

// "u v color" per edge.
void write_coloring(std::ostream& out, const ExtensionGraph& h, const EdgeColoring& col);

}  // namespace spider

#endif  // SPIDER_EDGE_COLORING_HPP_
