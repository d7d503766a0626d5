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

// Test-only helpers: brute-force oracles that share no code path with the
// library's indexed implementations, and a few random graph sources.

#ifndef SPIDER_TESTS_SUPPORT_HPP_
#define SPIDER_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "spider/digraph.hpp"
#include "spider/spider.hpp"

namespace spider::testing {

// Dense adjacency matrix built straight from the edge list.
class Matrix {
 public:
  explicit Matrix(const Digraph& g) : n_(g.vertex_count()), bits_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) bits_[e.from * n_ + e.to] = 1;
  }
  bool operator()(std::size_t u, std::size_t v) const { return bits_[u * n_ + v] != 0; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

// O(x, r) by checking every candidate y against the defining predicate.
inline std::set<VertexId> brute_extension_set(const Digraph& g, VertexId x, VertexId r) {
  const Matrix adj(g);
  std::set<VertexId> out;
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    if (y == x || y == r) continue;
    if ((adj(x, y) && adj(y, r)) || (adj(y, x) && adj(x, r))) out.insert(y);
  }
  return out;
}

// |VB_x|: all simple v -> b -> x with b outside A, by triple enumeration.
inline std::size_t brute_vb(const Digraph& g, const std::vector<char>& in_a, VertexId x) {
  const Matrix adj(g);
  std::size_t count = 0;
  for (VertexId b = 0; b < g.vertex_count(); ++b) {
    if (in_a[b] || b == x || !adj(b, x)) continue;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v != b && v != x && adj(v, b)) ++count;
    }
  }
  return count;
}

// Every directed leg leaf -> middle -> r.
inline std::vector<Leg> all_legs(const Digraph& g, VertexId r) {
  const Matrix adj(g);
  std::vector<Leg> legs;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = 0; b < g.vertex_count(); ++b) {
      if (a != b && a != r && b != r && adj(a, b) && adj(b, r)) legs.push_back({a, b});
    }
  }
  return legs;
}

// Largest set of pairwise vertex-disjoint legs at r, by enumerating every
// disjoint leg collection. Exponential; meant for n <= 8.
inline std::size_t naive_max_legs(const Digraph& g, VertexId r) {
  const std::vector<Leg> legs = all_legs(g, r);
  std::size_t best = 0;
  std::vector<char> used(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    best = std::max(best, depth);
    for (std::size_t i = start; i < legs.size(); ++i) {
      const Leg& l = legs[i];
      if (used[l.leaf] || used[l.middle]) continue;
      used[l.leaf] = used[l.middle] = 1;
      self(self, i + 1, depth + 1);
      used[l.leaf] = used[l.middle] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Each vertex gets a uniformly random out-degree in [min_out, n-1] and a
// random neighbour set in random order; edges are shuffled globally.
inline Digraph random_min_out_digraph(std::size_t n, std::size_t min_out, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<VertexId> others;
  for (VertexId u = 0; u < n; ++u) {
    others.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (v != u) others.push_back(v);
    }
    std::shuffle(others.begin(), others.end(), rng);
    const std::size_t deg = std::uniform_int_distribution<std::size_t>(min_out, n - 1)(rng);
    for (std::size_t k = 0; k < deg; ++k) edges.push_back({u, others[k]});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Digraph::from_edges(n, edges);
}

// Arbitrary digraph with each ordered pair present with probability p.
inline Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return Digraph::from_edges(n, edges);
}

}  // namespace spider::testing

#endif  // SPIDER_TESTS_SUPPORT_HPP_
