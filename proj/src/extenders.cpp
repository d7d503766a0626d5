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

#include "spider/extenders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spider/errors.hpp"

namespace spider {

ExtensionProbe::ExtensionProbe(const Digraph& g, VertexId r)
    : g_(&g), r_(r), into_root_(g.vertex_count(), 0), stamp_(g.vertex_count(), 0) {
  for (VertexId y : g.in(r)) into_root_[y] = 1;
}

template <typename Visit>
void ExtensionProbe::for_each_member(VertexId x, Visit&& visit) {
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  // x -> y -> r. No loops, so y is never x or r.
  for (VertexId y : g_->out(x)) {
    if (into_root_[y]) {
      stamp_[y] = generation_;
      visit(y);
    }
  }
  // y -> x -> r.
  if (into_root_[x]) {
    for (VertexId y : g_->in(x)) {
      if (y != r_ && stamp_[y] != generation_) {
        stamp_[y] = generation_;
        visit(y);
      }
    }
  }
}

std::size_t ExtensionProbe::size(VertexId x) {
  std::size_t count = 0;
  for_each_member(x, [&](VertexId) { ++count; });
  return count;
}

std::vector<VertexId> ExtensionProbe::members(VertexId x) {
  std::vector<VertexId> out;
  for_each_member(x, [&](VertexId y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_pair(const Digraph& g, VertexId x, VertexId r) {
  if (x >= g.vertex_count() || r >= g.vertex_count()) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (x == r) throw std::invalid_argument("extension set needs x != r (both " + std::to_string(x) + ")");
}

}  // namespace

ExtensionSet extension_set(const Digraph& g, VertexId x, VertexId r) {
  require_pair(g, x, r);
  ExtensionProbe probe(g, r);
  return {x, r, probe.members(x)};
}

bool is_i_extender(const Digraph& g, VertexId x, VertexId r, std::size_t i) {
  require_pair(g, x, r);
  ExtensionProbe probe(g, r);
  return probe.size(x) >= i;
}

ExtenderPool strong_extender_pool(const Digraph& g, VertexId r, std::size_t ell,
                                  std::span<const char> in_a) {
  ExtenderPool pool{r, ell, {}, {}};
  const std::size_t n = g.vertex_count();
  const std::size_t strong = 2 * ell - 1;
  ExtensionProbe probe(g, r);
  for (VertexId x : g.in(r)) {
    if (in_a[x]) pool.a_r.push_back(x);
  }
  std::sort(pool.a_r.begin(), pool.a_r.end());
  for (VertexId x = 0; x < n; ++x) {
    if (x == r || (probe.feeds_root(x) && in_a[x])) continue;
    if (probe.size(x) >= strong) pool.c_r.push_back(x);
  }
  return pool;
}

Spider greedy_extend(const Digraph& g, VertexId r, const Spider& base,
                     std::span<const VertexId> f_seq) {
  if (base.root != r) throw std::invalid_argument("base spider is not rooted at r");
  const std::size_t n = g.vertex_count();
  // 1 = in the spider, 2 = waiting in f_seq.
  std::vector<char> blocked(n, 0);
  blocked[r] = 1;
  for (const Leg& leg : base.legs) {
    blocked[leg.leaf] = 1;
    blocked[leg.middle] = 1;
  }
  for (VertexId x : f_seq) {
    if (x >= n) throw std::invalid_argument("f_seq vertex out of range");
    if (blocked[x] != 0) {
      throw std::invalid_argument("f_seq vertex " + std::to_string(x) +
                                  " repeats or meets the base spider");
    }
    blocked[x] = 2;
  }

  Spider result = base;
  ExtensionProbe probe(g, r);
  for (VertexId x : f_seq) {
    const auto candidates = probe.members(x);
    const auto it = std::find_if(candidates.begin(), candidates.end(),
                                 [&](VertexId y) { return blocked[y] == 0; });
    if (it == candidates.end()) throw ExtensionExhausted(x);
    const VertexId y = *it;
    const auto out_x = g.out(x);
    if (probe.feeds_root(y) && std::find(out_x.begin(), out_x.end(), y) != out_x.end()) {
      result.legs.push_back({x, y});
    } else {
      result.legs.push_back({y, x});
    }
    blocked[x] = 1;
    blocked[y] = 1;
  }
  return result;
}

}  // namespace spider
