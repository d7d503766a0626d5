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

#include "spider/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "spider/errors.hpp"

namespace spider {

namespace {

struct CandidateLeg {
  std::uint32_t lo;  // local indices, lo < hi
  std::uint32_t hi;
  Leg leg;
};

// Include/exclude branching on the lowest remaining edge. Prunes with
// matched + min(free edges left, free covered vertices / 2) <= best.
class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<CandidateLeg> edges) : edges_(std::move(edges)) {
    std::uint32_t covered = 0;
    for (const auto& e : edges_) covered |= bit(e.lo) | bit(e.hi);
    ceiling_ = static_cast<std::size_t>(std::popcount(covered)) / 2;
  }

  std::vector<std::size_t> run() {
    branch(0, 0);
    return best_;
  }

 private:
  static std::uint32_t bit(std::uint32_t v) { return std::uint32_t{1} << v; }

  void branch(std::size_t i, std::uint32_t used) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (best_.size() == ceiling_) return;
    while (i < edges_.size() && (used & (bit(edges_[i].lo) | bit(edges_[i].hi)))) ++i;
    if (i == edges_.size()) return;

    std::size_t free_edges = 0;
    std::uint32_t covered = 0;
    for (std::size_t j = i; j < edges_.size(); ++j) {
      const std::uint32_t m = bit(edges_[j].lo) | bit(edges_[j].hi);
      if (used & m) continue;
      ++free_edges;
      covered |= m;
    }
    const std::size_t bound =
        chosen_.size() + std::min(free_edges, static_cast<std::size_t>(std::popcount(covered)) / 2);
    if (bound <= best_.size()) return;

    chosen_.push_back(i);
    branch(i + 1, used | bit(edges_[i].lo) | bit(edges_[i].hi));
    chosen_.pop_back();
    if (best_.size() == ceiling_) return;
    branch(i + 1, used);
  }

  std::vector<CandidateLeg> edges_;
  std::size_t ceiling_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

RootMaximum max_spider_at_root(const Digraph& g, VertexId r, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) throw InstanceTooLarge(n, cap);
  if (n > 32) throw std::invalid_argument("exhaustive search supports at most 32 vertices");
  if (r >= n) throw std::invalid_argument("root out of range");

  // Every unordered pair {x, y} of non-root vertices that forms a leg, in
  // lexicographic order. Orientation x -> y -> r is preferred for x < y.
  std::vector<CandidateLeg> edges;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      if (x == r || y == r) continue;
      if (g.has_edge(x, y) && g.has_edge(y, r)) {
        edges.push_back({x, y, {x, y}});
      } else if (g.has_edge(y, x) && g.has_edge(x, r)) {
        edges.push_back({x, y, {y, x}});
      }
    }
  }
  MatchingSearch search(edges);
  const auto picked = search.run();
  RootMaximum result{picked.size(), {r, {}}};
  for (std::size_t i : picked) result.spider.legs.push_back(edges[i].leg);
  return result;
}

OracleResult has_spider_bruteforce(const Digraph& g, std::size_t ell, std::size_t cap) {
  if (g.vertex_count() > cap) throw InstanceTooLarge(g.vertex_count(), cap);
  OracleResult result;
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    RootMaximum best = max_spider_at_root(g, r, cap);
    result.best_per_root[r] = best.legs;
    if (!result.exists && best.legs >= ell) {
      result.exists = true;
      best.spider.legs.resize(ell);
      result.witness = std::move(best.spider);
    }
  }
  return result;
}

SearchReport search_spider_free(const GeneratorSpec& family, std::size_t ell, std::size_t trials,
                                std::uint64_t seed, std::size_t cap) {
  SearchReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    Digraph g = generate(family, trial_seed);
    ++report.sampled;
    if (g.vertex_count() > cap) {
      ++report.skipped;
      continue;
    }
    OracleResult result = has_spider_bruteforce(g, ell, cap);
    if (result.exists) continue;
    const std::size_t min_out = g.vertex_count() == 0 ? 0 : min_out_degree(g);
    report.hits.push_back({t, trial_seed, std::move(g), min_out, std::move(result)});
  }
  return report;
}

}  // namespace spider
