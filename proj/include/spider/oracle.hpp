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

#ifndef SPIDER_ORACLE_HPP_
#define SPIDER_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spider/digraph.hpp"
#include "spider/generators.hpp"
#include "spider/spider.hpp"

namespace spider {

inline constexpr std::size_t kDefaultExhaustiveCap = 16;

struct RootMaximum {
  std::size_t legs = 0;
  Spider spider;  // a spider at the root with exactly `legs` legs
};

// Maximum number of legs at root r, found by exhaustive branch-and-bound over
// the full extension graph at r (no exclusions). Independent of the solver.
// Throws InstanceTooLarge if g has more than `cap` vertices.
RootMaximum max_spider_at_root(const Digraph& g, VertexId r,
                               std::size_t cap = kDefaultExhaustiveCap);

struct OracleResult {
  bool exists = false;
  std::optional<Spider> witness;             // exactly ell legs, when exists
  std::map<VertexId, std::size_t> best_per_root;
};

OracleResult has_spider_bruteforce(const Digraph& g, std::size_t ell,
                                   std::size_t cap = kDefaultExhaustiveCap);

struct SearchHit {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Digraph graph;
  std::size_t min_out = 0;
  OracleResult result;
};

struct SearchReport {
  std::size_t sampled = 0;
  std::size_t skipped = 0;  // samples above the exhaustive cap
  std::vector<SearchHit> hits;
};

// Samples `trials` graphs from `family` (trial t uses seed + t) and keeps the
// spider-free ones. Exploratory only.
SearchReport search_spider_free(const GeneratorSpec& family, std::size_t ell, std::size_t trials,
                                std::uint64_t seed, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace spider

#endif  // SPIDER_ORACLE_HPP_
