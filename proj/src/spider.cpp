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

#include "spider/spider.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "spider/errors.hpp"

namespace spider {

std::size_t spider_order(const Spider& s) noexcept { return 2 * s.legs.size() + 1; }

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::kWrongLegCount: return "WrongLegCount";
    case ViolationKind::kRootInLeg: return "RootInLeg";
    case ViolationKind::kRepeatedVertex: return "RepeatedVertex";
    case ViolationKind::kMissingEdge: return "MissingEdge";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ": ";
  switch (kind) {
    case ViolationKind::kWrongLegCount:
      os << "expected " << expected_legs << " legs, found " << actual_legs;
      break;
    case ViolationKind::kRootInLeg:
      os << "root " << vertex << " reused in leg " << leg;
      break;
    case ViolationKind::kRepeatedVertex:
      os << "vertex " << vertex << " repeated in leg " << leg;
      break;
    case ViolationKind::kMissingEdge:
      os << "leg " << leg << " needs missing edge " << edge.from << " -> " << edge.to;
      break;
  }
  return os.str();
}

std::optional<Violation> verify_spider(const Digraph& g, const Spider& s, std::size_t ell) {
  if (s.legs.size() != ell) {
    Violation v{ViolationKind::kWrongLegCount};
    v.expected_legs = ell;
    v.actual_legs = s.legs.size();
    return v;
  }
  std::unordered_map<VertexId, std::size_t> owner;
  owner.reserve(2 * s.legs.size());
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    for (VertexId x : {s.legs[i].leaf, s.legs[i].middle}) {
      if (x == s.root) {
        Violation v{ViolationKind::kRootInLeg};
        v.vertex = x;
        v.leg = i;
        return v;
      }
      if (!owner.emplace(x, i).second) {
        Violation v{ViolationKind::kRepeatedVertex};
        v.vertex = x;
        v.leg = i;
        return v;
      }
    }
  }
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    const Leg& leg = s.legs[i];
    for (Edge e : {Edge{leg.leaf, leg.middle}, Edge{leg.middle, s.root}}) {
      if (!g.has_edge(e.from, e.to)) {
        Violation v{ViolationKind::kMissingEdge};
        v.leg = i;
        v.edge = e;
        return v;
      }
    }
  }
  return std::nullopt;
}

void write_spider(std::ostream& out, const Spider& s) { out << format_spider(s); }

std::string format_spider(const Spider& s) {
  std::string text = "root " + std::to_string(s.root) + '\n';
  for (const Leg& leg : s.legs) {
    text += std::to_string(leg.leaf) + ' ' + std::to_string(leg.middle) + '\n';
  }
  return text;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

VertexId to_vertex(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      value > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "invalid vertex id \"" + std::string(token) + "\"");
  }
  return static_cast<VertexId>(value);
}

}  // namespace

Spider parse_spider(std::istream& in) {
  Spider s;
  bool have_root = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!have_root) {
      if (tokens.size() != 2 || tokens[0] != "root") {
        throw ParseError(line_no, "expected \"root r\"");
      }
      s.root = to_vertex(tokens[1], line_no);
      have_root = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected \"leaf middle\"");
    s.legs.push_back({to_vertex(tokens[0], line_no), to_vertex(tokens[1], line_no)});
  }
  if (!have_root) throw ParseError(line_no, "missing \"root r\" line");
  return s;
}

Spider parse_spider(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_spider(in);
}

}  // namespace spider
