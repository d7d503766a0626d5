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

#include "spider/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace spider {

Digraph gen_complete_digraph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete digraph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph::from_edges(n, edges);
}

Digraph gen_random_out_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n) {
    throw std::invalid_argument("random out-regular digraph needs d < n (d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n * d);
  std::vector<VertexId> stamp(n, static_cast<VertexId>(-1));
  std::vector<VertexId> picked;
  picked.reserve(d);
  for (VertexId u = 0; u < n; ++u) {
    // Floyd's sampling over the n-1 candidates; index k >= u maps to k+1.
    picked.clear();
    const std::size_t pool = n - 1;
    for (std::size_t j = pool - d; j < pool; ++j) {
      const auto t = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, j)(rng));
      const VertexId pick = stamp[t] == u ? static_cast<VertexId>(j) : t;
      stamp[pick] = u;
      picked.push_back(pick);
    }
    std::sort(picked.begin(), picked.end());
    for (VertexId k : picked) edges.push_back({u, k >= u ? k + 1 : k});
  }
  return Digraph::from_edges(n, edges);
}

Digraph gen_regular_tournament(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n % 2 == 0) {
    throw std::invalid_argument("regular tournament needs odd n (n=" + std::to_string(n) + ")");
  }
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<std::vector<VertexId>> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
      out[label[u]].push_back(label[(u + j) % n]);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    std::sort(out[u].begin(), out[u].end());
    for (VertexId v : out[u]) edges.push_back({u, v});
  }
  return Digraph::from_edges(n, edges);
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::kComplete: return "complete";
    case Family::kRandomOutRegular: return "random-out-regular";
    case Family::kTournament: return "tournament";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) noexcept {
  for (Family f : {Family::kComplete, Family::kRandomOutRegular, Family::kTournament}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Digraph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case Family::kComplete: return gen_complete_digraph(spec.n);
    case Family::kRandomOutRegular: return gen_random_out_regular(spec.n, spec.d, seed);
    case Family::kTournament: return gen_regular_tournament(spec.n, seed);
  }
  throw std::invalid_argument("unknown generator family");
}

}  // namespace spider
