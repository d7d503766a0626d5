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

#include "spider/solver.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "spider/errors.hpp"
#include "spider/generators.hpp"
#include "support.hpp"

namespace spider {
namespace {

void ExpectSound(const Digraph& g, std::size_t ell, const SolveOutcome& out) {
  EXPECT_FALSE(verify_spider(g, out.spider, ell)) << format_spider(out.spider);
  std::set<VertexId> vertices{out.spider.root};
  for (const Leg& l : out.spider.legs) vertices.insert({l.leaf, l.middle});
  EXPECT_EQ(vertices.size(), 2 * ell + 1);
  const SolveTrace& t = out.trace;
  EXPECT_GE(t.a + t.c + t.s, ell);
  for (const BoundCheck& c : t.checks) {
    if (!c.advisory) EXPECT_TRUE(c.passed) << render(c);
  }
}

TEST(FindSpider, CompleteDigraphOnThree) {
  const Digraph k3 = gen_complete_digraph(3);
  const SolveOutcome out = find_spider(k3, 1);
  ExpectSound(k3, 1, out);
}

TEST(FindSpider, CompleteDigraphUsesEveryVertex) {
  for (std::size_t ell = 1; ell <= 12; ++ell) {
    const Digraph k = gen_complete_digraph(2 * ell + 1);
    ExpectSound(k, ell, find_spider(k, ell));
  }
}

TEST(FindSpider, BelowThreshold) {
  const Digraph tri = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_THROW(find_spider(tri, 1), InsufficientOutDegree);
  EXPECT_THROW(find_spider(gen_complete_digraph(4), 2), InsufficientOutDegree);
  EXPECT_THROW(find_spider(gen_complete_digraph(4), 0), std::invalid_argument);
}

TEST(FindSpider, PropertyTotalityOnRegularGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t ell = 1 + rng() % 50;
    const std::size_t n = 2 * ell + 1 + rng() % 300;
    const Digraph g = gen_random_out_regular(n, 2 * ell, rng());
    ExpectSound(g, ell, find_spider(g, ell));
  }
}

TEST(FindSpider, PropertyTotalityOnIrregularGraphs) {
  // Inputs above the threshold; the spider must live in the original graph.
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t ell = 1 + rng() % 4;
    const std::size_t n = 2 * ell + 1 + rng() % 14;
    const Digraph g = testing::random_min_out_digraph(n, 2 * ell, rng);
    ExpectSound(g, ell, find_spider(g, ell));
  }
}

TEST(FindSpider, DeterministicAndModeIndependent) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t ell = 1 + rng() % 10;
    const Digraph g = testing::random_min_out_digraph(2 * ell + 1 + rng() % 30, 2 * ell, rng);
    const SolveOutcome a = find_spider(g, ell);
    const SolveOutcome b = find_spider(g, ell);
    EXPECT_EQ(a.spider, b.spider);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(explain_trace(a.trace), explain_trace(b.trace));
    EXPECT_EQ(find_spider(g, ell, Mode::kFast).spider, a.spider);
  }
}

TEST(FindSpider, TraceQuantitiesAreConsistent) {
  const Digraph g = gen_random_out_regular(300, 8, 5);
  const SolveOutcome out = find_spider(g, 4);
  const SolveTrace& t = out.trace;
  EXPECT_EQ(t.d, 8u);
  EXPECT_EQ(t.score, t.d * t.a + t.vb_r);
  EXPECT_LE(t.q_size, t.vb_r);
  EXPECT_LE(t.h_edges, t.q_size);
  EXPECT_LE(t.h_max_degree, 6u);
  EXPECT_LE(t.palette, 7u);
  EXPECT_EQ(t.colored_edges, out.colored.edges.size());
  EXPECT_EQ(out.coloring.color_of.size(), out.colored.edges.size());
}

TEST(ExplainTrace, CompleteDigraphOnFive) {
  const SolveOutcome out = find_spider(gen_complete_digraph(5), 2);
  const std::string report = explain_trace(out.trace);
  EXPECT_NE(report.find("score ≥ d²−d: 16 ≥ 12 PASS"), std::string::npos) << report;
  EXPECT_NE(report.find("a+c+s ≥ ℓ: 4 ≥ 2 PASS"), std::string::npos) << report;
  EXPECT_NE(report.find("greedy extension added 2 legs"), std::string::npos);
}

TEST(ExplainTrace, SkippedExtensionAndTruncation) {
  // Large sparse regular graphs make H big enough to be capped.
  bool saw_skip = false;
  bool saw_cap = false;
  for (std::uint64_t seed = 0; seed < 40 && !(saw_skip && saw_cap); ++seed) {
    const SolveOutcome out = find_spider(gen_random_out_regular(2000, 6, seed), 3);
    const std::string report = explain_trace(out.trace);
    if (out.trace.s >= 3) {
      saw_skip = true;
      EXPECT_NE(report.find("extension skipped"), std::string::npos);
    }
    if (out.trace.truncated) {
      saw_cap = true;
      EXPECT_NE(report.find("capped"), std::string::npos);
      EXPECT_EQ(out.trace.colored_edges, coloring_edge_budget(3));
    }
  }
  EXPECT_TRUE(saw_skip);
  EXPECT_TRUE(saw_cap);
}

TEST(ExplainTrace, AdvisoryChecksAreMarked) {
  BoundCheck c = advisory(make_check("x", 1, Relation::kGreaterEqual, 2));
  EXPECT_EQ(render(c), "x: 1 ≥ 2 FAIL (advisory)");
  EXPECT_NO_THROW(enforce(c, Mode::kChecked, nullptr));
  EXPECT_THROW(enforce(make_check("y", 3, Relation::kLessEqual, 2), Mode::kChecked, nullptr),
               InvariantViolation);
}

}  // namespace
}  // namespace spider
