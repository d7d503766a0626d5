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

#include "spider/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spider/errors.hpp"

namespace spider {

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw GraphError(0, "vertex count " + std::to_string(n) + " exceeds id range");
  }
  Digraph g;
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.from >= n || e.to >= n) {
      throw GraphError(i, "edge " + std::to_string(e.from) + " " + std::to_string(e.to) +
                              ": vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (e.from == e.to) {
      throw GraphError(i, "self-loop at vertex " + std::to_string(e.from));
    }
    ++g.out_offsets_[e.from + 1];
    ++g.in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }

  // Stable bucket placement keeps the supplied per-source order.
  g.out_targets_.resize(edges.size());
  std::vector<std::size_t> origin(edges.size());
  {
    std::vector<std::size_t> cursor(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::size_t slot = cursor[edges[i].from]++;
      g.out_targets_[slot] = edges[i].to;
      origin[slot] = i;
    }
  }

  // Duplicate detection: stamp each target with its source. When a repeat is
  // found, report whichever copy came later in the input.
  {
    std::vector<std::size_t> seen_at(n, std::numeric_limits<std::size_t>::max());
    std::vector<VertexId> stamp(n, std::numeric_limits<VertexId>::max());
    std::size_t worst = std::numeric_limits<std::size_t>::max();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t k = g.out_offsets_[u]; k < g.out_offsets_[u + 1]; ++k) {
        const VertexId v = g.out_targets_[k];
        if (stamp[v] == u) {
          worst = std::min(worst, std::max(seen_at[v], origin[k]));
        } else {
          stamp[v] = static_cast<VertexId>(u);
          seen_at[v] = origin[k];
        }
      }
    }
    if (worst != std::numeric_limits<std::size_t>::max()) {
      const Edge& e = edges[worst];
      throw GraphError(worst, "duplicate directed edge " + std::to_string(e.from) + " " +
                                  std::to_string(e.to));
    }
  }

  g.in_sources_.resize(edges.size());
  std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = g.out_offsets_[u]; k < g.out_offsets_[u + 1]; ++k) {
      g.in_sources_[cursor[g.out_targets_[k]]++] = static_cast<VertexId>(u);
    }
  }
  return g;
}

bool Digraph::has_edge(VertexId u, VertexId v) const noexcept {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) return false;
  if (out_degree(u) <= in_degree(v)) {
    const auto adj = out(u);
    return std::find(adj.begin(), adj.end(), v) != adj.end();
  }
  const auto adj = in(v);
  return std::find(adj.begin(), adj.end(), u) != adj.end();
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : out(u)) result.push_back({u, v});
  }
  return result;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  const std::size_t n = g.vertex_count();
  p.out_deg.resize(n);
  p.in_deg.resize(n);
  p.min_out = n == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < n; ++v) {
    p.out_deg[v] = g.out_degree(v);
    p.in_deg[v] = g.in_degree(v);
    p.min_out = std::min(p.min_out, p.out_deg[v]);
    p.max_in = std::max(p.max_in, p.in_deg[v]);
  }
  return p;
}

std::size_t min_out_degree(const Digraph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("min_out_degree of a graph with no vertices");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.out_degree(v));
  return best;
}

Digraph extract_exact_outdegree_subgraph(const Digraph& g, std::size_t d) {
  const std::size_t n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (g.out_degree(v) < d) throw InsufficientOutDegree(v, g.out_degree(v), d);
  }
  std::vector<Edge> kept;
  kept.reserve(n * d);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.out(u).first(d)) kept.push_back({u, v});
  }
  return Digraph::from_edges(n, kept);
}

namespace {

// Splits on spaces/tabs/CR; returns false if any token is not a decimal count.
bool parse_counts(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;

  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!parse_counts(line, fields) || fields.size() != 2) {
      throw ParseError(line_no, "malformed header, expected \"n m\"");
    }
    n = fields[0];
    m = fields[1];
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line \"n m\"");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds id range");
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  edges.reserve(std::min<std::uint64_t>(m, 1u << 24));
  edge_line.reserve(edges.capacity());
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (edges.size() == m) {
      throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    }
    if (!parse_counts(line, fields) || fields.size() != 2) {
      throw ParseError(line_no, "malformed edge, expected \"u v\"");
    }
    if (fields[0] >= n || fields[1] >= n) {
      throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    edges.push_back({static_cast<VertexId>(fields[0]), static_cast<VertexId>(fields[1])});
    edge_line.push_back(line_no);
  }
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Digraph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(edge_line[e.edge_index()], e.what());
  }
}

Digraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
  std::string buf;
  buf.reserve(1 << 16);
  buf += std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.out(u)) {
      buf += std::to_string(u);
      buf += ' ';
      buf += std::to_string(v);
      buf += '\n';
      if (buf.size() > (1 << 16) - 32) {
        out << buf;
        buf.clear();
      }
    }
  }
  out << buf;
}

}  // namespace spider
