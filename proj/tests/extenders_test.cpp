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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "spider/errors.hpp"
#include "spider/generators.hpp"
#include "support.hpp"

namespace spider {
namespace {

std::set<VertexId> Members(const ExtensionSet& s) { return {s.members.begin(), s.members.end()}; }

TEST(ExtensionSet, BothOrientations) {
  const Digraph g = parse_edge_list("4 4\n1 2\n2 0\n3 1\n1 0\n");
  EXPECT_EQ(Members(extension_set(g, 1, 0)), (std::set<VertexId>{2, 3}));
}

TEST(ExtensionSet, CompleteDigraphCountsOnce) {
  const ExtensionSet s = extension_set(gen_complete_digraph(4), 1, 0);
  EXPECT_EQ(s.members, (std::vector<VertexId>{2, 3}));
}

TEST(ExtensionSet, EdgeIntoRootAlone) {
  EXPECT_TRUE(extension_set(parse_edge_list("2 1\n1 0\n"), 1, 0).members.empty());
}

TEST(ExtensionSet, RejectsXEqualsR) {
  EXPECT_THROW(extension_set(gen_complete_digraph(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(is_i_extender(gen_complete_digraph(3), 2, 2, 1), std::invalid_argument);
}

TEST(ExtensionSet, PropertyMatchesDefinition) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Digraph g = testing::random_digraph(n, 0.45, rng);
    const auto r = static_cast<VertexId>(rng() % n);
    ExtensionProbe probe(g, r);
    for (VertexId x = 0; x < n; ++x) {
      if (x == r) continue;
      const ExtensionSet s = extension_set(g, x, r);
      EXPECT_TRUE(std::is_sorted(s.members.begin(), s.members.end()));
      EXPECT_EQ(Members(s), testing::brute_extension_set(g, x, r));
      EXPECT_EQ(probe.size(x), s.members.size());
      EXPECT_FALSE(Members(s).contains(x));
      EXPECT_FALSE(Members(s).contains(r));
    }
  }
}

TEST(IsIExtender, Thresholds) {
  const Digraph g = parse_edge_list("4 4\n1 2\n2 0\n3 1\n1 0\n");
  EXPECT_TRUE(is_i_extender(g, 1, 0, 2));
  EXPECT_FALSE(is_i_extender(g, 1, 0, 3));
  EXPECT_TRUE(is_i_extender(g, 1, 0, 0));
  EXPECT_TRUE(is_i_extender(parse_edge_list("2 0\n"), 1, 0, 0));
}

TEST(IsIExtender, PropertyMonotone) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const Digraph g = testing::random_digraph(n, 0.5, rng);
    const VertexId x = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_i_extender(g, x, 0, i + 1)) EXPECT_TRUE(is_i_extender(g, x, 0, i));
    }
  }
}

TEST(StrongExtenderPool, CompleteDigraphOnFive) {
  const Digraph k5 = gen_complete_digraph(5);
  for (VertexId x = 1; x < 5; ++x) EXPECT_EQ(testing::brute_extension_set(k5, x, 0).size(), 3u);
  const std::vector<char> in_a(5, 1);
  const ExtenderPool pool = strong_extender_pool(k5, 0, 2, in_a);
  EXPECT_EQ(pool.a_r, (std::vector<VertexId>{1, 2, 3, 4}));
  EXPECT_TRUE(pool.c_r.empty());
}

TEST(StrongExtenderPool, EllOneUsesOneExtenders) {
  const Digraph g = parse_edge_list("3 2\n1 2\n2 0\n");
  const std::vector<char> in_a(3, 0);  // all in-degrees < 2
  const ExtenderPool pool = strong_extender_pool(g, 0, 1, in_a);
  EXPECT_TRUE(pool.a_r.empty());
  // |O(2,0)| = |{1}| and |O(1,0)| = |{2}|, both 1-extenders.
  EXPECT_EQ(pool.c_r, (std::vector<VertexId>{1, 2}));
}

TEST(StrongExtenderPool, IsolatedRoot) {
  const Digraph g = parse_edge_list("4 2\n0 1\n1 2\n");
  const ExtenderPool pool = strong_extender_pool(g, 0, 1, std::vector<char>(4, 0));
  EXPECT_TRUE(pool.a_r.empty());
  EXPECT_TRUE(pool.c_r.empty());
}

TEST(StrongExtenderPool, PropertyAgainstBruteForce) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t ell = 1 + rng() % 3;
    const std::size_t n = 2 * ell + 1 + rng() % 8;
    const Digraph g = extract_exact_outdegree_subgraph(
        testing::random_min_out_digraph(n, 2 * ell, rng), 2 * ell);
    std::vector<char> in_a(n);
    for (VertexId v = 0; v < n; ++v) in_a[v] = g.in_degree(v) >= 2 * ell;
    const auto r = static_cast<VertexId>(rng() % n);
    const ExtenderPool pool = strong_extender_pool(g, r, ell, in_a);

    std::vector<VertexId> a_r;
    std::vector<VertexId> c_r;
    for (VertexId x = 0; x < n; ++x) {
      if (x == r) continue;
      const bool strong = testing::brute_extension_set(g, x, r).size() >= 2 * ell - 1;
      if (g.has_edge(x, r) && in_a[x]) {
        EXPECT_TRUE(strong) << "in-neighbour of r in A must be strong";
        a_r.push_back(x);
      } else if (strong) {
        c_r.push_back(x);
      }
    }
    EXPECT_EQ(pool.a_r, a_r);
    EXPECT_EQ(pool.c_r, c_r);
  }
}

TEST(GreedyExtend, EmptySequenceReturnsBase) {
  const Spider base{0, {{1, 2}}};
  EXPECT_EQ(greedy_extend(gen_complete_digraph(5), 0, base, {}), base);
}

TEST(GreedyExtend, CompleteDigraphOnFive) {
  const Digraph k5 = gen_complete_digraph(5);
  EXPECT_EQ(testing::brute_extension_set(k5, 3, 0), (std::set<VertexId>{1, 2, 4}));
  const VertexId f[] = {3};
  const Spider out = greedy_extend(k5, 0, {0, {{1, 2}}}, f);
  EXPECT_EQ(out.legs, (std::vector<Leg>{{1, 2}, {3, 4}}));
  EXPECT_FALSE(verify_spider(k5, out, 2));
}

TEST(GreedyExtend, ReverseOrientationWhenForwardMissing) {
  // O(1, 0) = {2} only through 2 -> 1 -> 0.
  const Digraph g = parse_edge_list("3 2\n2 1\n1 0\n");
  const VertexId f[] = {1};
  const Spider out = greedy_extend(g, 0, {0, {}}, f);
  EXPECT_EQ(out.legs, (std::vector<Leg>{{2, 1}}));
}

TEST(GreedyExtend, SkipsPendingSequenceMembers) {
  // In K5, O(1, 0) = {2, 3, 4}; 2 is still waiting in f_seq so 3 is chosen.
  const VertexId f[] = {1, 2};
  const Spider out = greedy_extend(gen_complete_digraph(5), 0, {0, {}}, f);
  EXPECT_EQ(out.legs, (std::vector<Leg>{{1, 3}, {2, 4}}));
}

TEST(GreedyExtend, ExhaustedWhenExtensionsCovered) {
  const Digraph g = parse_edge_list(
      "6 22\n"
      "0 1\n0 2\n0 3\n0 4\n1 0\n1 2\n1 3\n1 4\n2 0\n2 1\n2 3\n2 4\n"
      "3 0\n3 1\n3 2\n3 4\n4 0\n4 1\n4 2\n4 3\n5 1\n5 2\n");
  EXPECT_EQ(testing::brute_extension_set(g, 5, 0), (std::set<VertexId>{1, 2}));
  const VertexId f[] = {5};
  try {
    greedy_extend(g, 0, {0, {{1, 2}}}, f);
    FAIL();
  } catch (const ExtensionExhausted& e) {
    EXPECT_EQ(e.vertex(), 5u);
  }
}

TEST(GreedyExtend, RejectsOverlap) {
  const Digraph k5 = gen_complete_digraph(5);
  const VertexId overlap[] = {2};
  EXPECT_THROW(greedy_extend(k5, 0, {0, {{1, 2}}}, overlap), std::invalid_argument);
  const VertexId repeat[] = {3, 3};
  EXPECT_THROW(greedy_extend(k5, 0, {0, {}}, repeat), std::invalid_argument);
  EXPECT_THROW(greedy_extend(k5, 1, {0, {}}, {}), std::invalid_argument);
}

// Builds a random base spider at r by greedily taking disjoint legs.
Spider RandomBase(const Digraph& g, VertexId r, std::size_t max_legs, std::mt19937_64& rng) {
  std::vector<Leg> legs = testing::all_legs(g, r);
  std::shuffle(legs.begin(), legs.end(), rng);
  Spider s{r, {}};
  std::set<VertexId> used{r};
  for (const Leg& l : legs) {
    if (s.legs.size() == max_legs) break;
    if (used.contains(l.leaf) || used.contains(l.middle)) continue;
    used.insert(l.leaf);
    used.insert(l.middle);
    s.legs.push_back(l);
  }
  return s;
}

TEST(GreedyExtend, PropertyStrongExtendersNeverExhaust) {
  // Whenever x_i has at least f + 2s + i - 1 extension partners, every step
  // finds a partner and the result verifies with s + f legs.
  std::mt19937_64 rng(31);
  int exercised = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 3 + rng() % 12;
    const Digraph g = testing::random_digraph(n, 0.3 + 0.6 * (rng() % 100) / 100.0, rng);
    const auto r = static_cast<VertexId>(rng() % n);
    const Spider base = RandomBase(g, r, rng() % 4, rng);
    const std::size_t s = base.legs.size();
    std::set<VertexId> in_base{r};
    for (const Leg& l : base.legs) in_base.insert({l.leaf, l.middle});

    std::vector<std::pair<std::size_t, VertexId>> pool;
    for (VertexId x = 0; x < n; ++x) {
      if (!in_base.contains(x)) pool.push_back({testing::brute_extension_set(g, x, r).size(), x});
    }
    std::sort(pool.begin(), pool.end());
    // Largest f for which the weakest-first order meets every requirement.
    std::size_t f = 0;
    for (std::size_t cand = pool.size(); cand > 0; --cand) {
      bool ok = true;
      const std::size_t skip = pool.size() - cand;  // drop the weakest
      for (std::size_t i = 1; i <= cand && ok; ++i) ok = pool[skip + i - 1].first >= cand + 2 * s + i - 1;
      if (ok) {
        f = cand;
        std::vector<VertexId> seq;
        for (std::size_t i = 0; i < cand; ++i) seq.push_back(pool[skip + i].second);
        const Spider out = greedy_extend(g, r, base, seq);
        EXPECT_FALSE(verify_spider(g, out, s + f)) << "trial " << trial;
        ++exercised;
        break;
      }
    }
  }
  EXPECT_GT(exercised, 500);
}

TEST(GreedyExtend, PropertyStrongExtendersReachEll) {
  // All of f_seq strong (2*ell - 1 partners) with f + s = ell gives ell legs.
  std::mt19937_64 rng(37);
  int exercised = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t ell = 1 + rng() % 4;
    const std::size_t n = 2 * ell + 1 + rng() % 8;
    const Digraph g = testing::random_digraph(n, 0.5 + 0.5 * (rng() % 100) / 100.0, rng);
    const auto r = static_cast<VertexId>(rng() % n);
    const Spider base = RandomBase(g, r, rng() % (ell + 1), rng);
    std::set<VertexId> in_base{r};
    for (const Leg& l : base.legs) in_base.insert({l.leaf, l.middle});
    std::vector<VertexId> strong;
    for (VertexId x = 0; x < n; ++x) {
      if (!in_base.contains(x) && testing::brute_extension_set(g, x, r).size() >= 2 * ell - 1) {
        strong.push_back(x);
      }
    }
    const std::size_t need = ell - base.legs.size();
    if (strong.size() < need) continue;
    std::shuffle(strong.begin(), strong.end(), rng);
    strong.resize(need);
    const Spider out = greedy_extend(g, r, base, strong);
    EXPECT_FALSE(verify_spider(g, out, ell));
    ++exercised;
  }
  EXPECT_GT(exercised, 300);
}

}  // namespace
}  // namespace spider
