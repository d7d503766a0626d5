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

#ifndef SPIDER_EXTENDERS_HPP_
#define SPIDER_EXTENDERS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spider/digraph.hpp"
#include "spider/spider.hpp"

namespace spider {

// Vertices y that form a simple 2-path ending in r together with x, either
// x -> y -> r or y -> x -> r. Members are ascending and never contain x or r.
struct ExtensionSet {
  VertexId x = 0;
  VertexId r = 0;
  std::vector<VertexId> members;
};

// Answers extension-set queries for a fixed root in O(deg+(x) + deg-(x))
// per query, after O(n + deg-(r)) setup. Not thread-safe (scratch stamps).
class ExtensionProbe {
 public:
  ExtensionProbe(const Digraph& g, VertexId r);

  VertexId root() const noexcept { return r_; }
  bool feeds_root(VertexId y) const noexcept { return into_root_[y] != 0; }

  std::size_t size(VertexId x);
  // Ascending.
  std::vector<VertexId> members(VertexId x);

 private:
  template <typename Visit>
  void for_each_member(VertexId x, Visit&& visit);

  const Digraph* g_;
  VertexId r_;
  std::vector<char> into_root_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
};

// Throws std::invalid_argument when x == r or either id is out of range.
ExtensionSet extension_set(const Digraph& g, VertexId x, VertexId r);
bool is_i_extender(const Digraph& g, VertexId x, VertexId r, std::size_t i);

// Strong extenders for root r at spider size ell, i.e. vertices x with
// |O(x, r)| >= 2*ell - 1. a_r are the in-neighbours of r lying in `a_set`;
// c_r are all remaining strong extenders. Both ascending and disjoint.
struct ExtenderPool {
  VertexId r = 0;
  std::size_t ell = 0;
  std::vector<VertexId> a_r;
  std::vector<VertexId> c_r;
};

// `in_a[v]` is nonzero iff v belongs to the high in-degree class.
ExtenderPool strong_extender_pool(const Digraph& g, VertexId r, std::size_t ell,
                                  std::span<const char> in_a);

// Attaches one leg per vertex of `f_seq`, in order, to `base`. For x it picks
// the smallest y in O(x, r) not yet used by the spider and not among the
// not-yet-processed entries of f_seq, and orients the leg x -> y -> r when
// that path exists, else y -> x -> r.
//
// Throws std::invalid_argument if base is rooted elsewhere or f_seq repeats a
// vertex or meets V(base); ExtensionExhausted when no y is available.
Spider greedy_extend(const Digraph& g, VertexId r, const Spider& base,
                     std::span<const VertexId> f_seq);

}  // namespace spider

#endif  // SPIDER_EXTENDERS_HPP_
