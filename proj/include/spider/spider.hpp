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

#ifndef SPIDER_SPIDER_HPP_
#define SPIDER_SPIDER_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spider/digraph.hpp"

namespace spider {

// One directed 2-path leaf -> middle -> root.
struct Leg {
  VertexId leaf;
  VertexId middle;
  friend bool operator==(const Leg&, const Leg&) = default;
};

// A root with legs that are vertex-disjoint outside the root. Leg order is
// kept for stable output only; it carries no meaning.
struct Spider {
  VertexId root = 0;
  std::vector<Leg> legs;
  friend bool operator==(const Spider&, const Spider&) = default;
};

// 2 * legs + 1.
std::size_t spider_order(const Spider& s) noexcept;

enum class ViolationKind { kWrongLegCount, kRootInLeg, kRepeatedVertex, kMissingEdge };

std::string_view to_string(ViolationKind kind) noexcept;

// First failed check. Populated fields by kind:
//   kWrongLegCount: expected_legs, actual_legs
//   kRootInLeg:     vertex (= root), leg
//   kRepeatedVertex: vertex, leg (the later leg containing the repeat)
//   kMissingEdge:   leg, edge
struct Violation {
  ViolationKind kind;
  std::size_t expected_legs = 0;
  std::size_t actual_legs = 0;
  VertexId vertex = 0;
  std::size_t leg = 0;
  Edge edge{};

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks, in this order: leg count == ell, all 2*ell+1 vertices distinct,
// both edges of every leg present in `g`. Reads nothing but `g` and `s`.
std::optional<Violation> verify_spider(const Digraph& g, const Spider& s, std::size_t ell);

// Text form: "root r" then one "leaf middle" line per leg. Parsing accepts
// '#' comments and blank lines; throws ParseError.
void write_spider(std::ostream& out, const Spider& s);
std::string format_spider(const Spider& s);
Spider parse_spider(std::istream& in);
Spider parse_spider(std::string_view text);

}  // namespace spider

#endif  // SPIDER_SPIDER_HPP_
