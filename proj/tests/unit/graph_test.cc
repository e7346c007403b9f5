// Copyright 2026 The bdprop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bdprop/graph.h"

#include <bit>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "bdprop/rng.h"

namespace bdprop {
namespace {

BoundedDegreeGraph RandomGraph(size_t n, double p, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<uint32_t> deg(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (Uniform01(rng) < p) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
  }
  uint32_t d = 1;
  for (uint32_t x : deg) d = std::max(d, x);
  return BoundedDegreeGraph::FromEdges(n, d, edges);
}

BoundedDegreeGraph FromMask(size_t n, uint32_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return BoundedDegreeGraph::FromEdges(n, static_cast<uint32_t>(std::max<size_t>(1, n - 1)),
                                       edges);
}

// Searches simple cycles explicitly.
bool HasOddCycle(const BoundedDegreeGraph& g) {
  const size_t n = g.num_vertices();
  std::vector<bool> on(n, false);
  std::function<bool(Vertex, Vertex, size_t)> dfs = [&](Vertex start, Vertex v,
                                                        size_t len) {
    for (const Vertex* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
      if (*p == start && len >= 3 && len % 2 == 1) return true;
      if (*p > start && !on[*p]) {
        on[*p] = true;
        if (dfs(start, *p, len + 1)) return true;
        on[*p] = false;
      }
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    std::fill(on.begin(), on.end(), false);
    on[s] = true;
    if (dfs(s, s, 1)) return true;
  }
  return false;
}

// Plain subset enumeration, all subsets of size <= N/2.
double ExpansionBrute(const BoundedDegreeGraph& g) {
  const size_t n = g.num_vertices();
  double best = 1e18;
  for (uint32_t U = 1; U < (1u << n); ++U) {
    const int sz = std::popcount(U);
    if (static_cast<size_t>(sz) * 2 > n) continue;
    uint32_t boundary = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!(U >> v & 1)) continue;
      for (const Vertex* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
        if (!(U >> *p & 1)) boundary |= 1u << *p;
      }
    }
    best = std::min(best, static_cast<double>(std::popcount(boundary)) / sz);
  }
  return best;
}

TEST(Graph, RejectsAsymmetricAdjacency) {
  EXPECT_THROW(BoundedDegreeGraph(2, {{1}, {}}), std::invalid_argument);
  EXPECT_THROW(BoundedDegreeGraph(1, {{1, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(BoundedDegreeGraph(2, {{0}}), std::invalid_argument);
  EXPECT_THROW(BoundedDegreeGraph(2, {{5}, {0}}), std::invalid_argument);
}

TEST(Graph, MultiEdgesAllowedWhenSymmetric) {
  BoundedDegreeGraph g(2, {{1, 1}, {0, 0}});
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(NeighborQuery, TriangleFirstNeighbor) {
  const auto g = CompleteGraph(3);
  QueryLedger led;
  EXPECT_EQ(NeighborQuery(g, 0, 1, led), 1u);
  EXPECT_EQ(led.classical_queries, 1u);
}

TEST(NeighborQuery, BottomPastDegree) {
  const auto g = BoundedDegreeGraph::FromEdges(2, 2, {{0, 1}});
  QueryLedger led;
  EXPECT_EQ(NeighborQuery(g, 0, 2, led), kBottom);
  EXPECT_EQ(led.classical_queries, 1u);
}

TEST(NeighborQuery, CountsEveryCallOnC4) {
  const auto g = CycleGraph(4);
  QueryLedger led;
  for (Vertex v = 0; v < 4; ++v) {
    for (uint32_t i = 1; i <= g.degree_bound(); ++i) NeighborQuery(g, v, i, led);
  }
  EXPECT_EQ(led.classical_queries, 4u * g.degree_bound());
}

TEST(NeighborQuery, OutOfRangeIsError) {
  const auto g = CycleGraph(4);
  QueryLedger led;
  EXPECT_THROW(NeighborQuery(g, 4, 1, led), std::out_of_range);
  EXPECT_THROW(NeighborQuery(g, 0, 0, led), std::out_of_range);
  EXPECT_THROW(NeighborQuery(g, 0, 3, led), std::out_of_range);
  EXPECT_EQ(led.classical_queries, 0u);
}

TEST(NeighborQuery, SymmetricOnRandomGraphs) {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = RandomGraph(100, 0.03, rng);
    QueryLedger led;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (uint32_t i = 1; i <= g.degree_bound(); ++i) {
        const Vertex v = NeighborQuery(g, u, i, led);
        if (v == kBottom) continue;
        bool back = false;
        for (uint32_t j = 1; j <= g.degree_bound() && !back; ++j) {
          back = NeighborQuery(g, v, j, led) == u;
        }
        EXPECT_TRUE(back);
      }
    }
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(IsBipartiteExact(CycleGraph(4)));
  EXPECT_FALSE(IsBipartiteExact(CycleGraph(5)));
  EXPECT_FALSE(IsBipartiteExact(DisjointUnion({CompleteGraph(3), CompleteGraph(3)}, 2)));
  EXPECT_TRUE(IsBipartiteExact(BoundedDegreeGraph::FromEdges(5, 1, {})));
}

TEST(Bipartite, AgreesWithOddCycleSearchUpToSix) {
  for (size_t n = 1; n <= 6; ++n) {
    const uint32_t pairs = static_cast<uint32_t>(n * (n - 1) / 2);
    for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto g = FromMask(n, mask);
      ASSERT_EQ(IsBipartiteExact(g), !HasOddCycle(g)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Bipartite, AgreesWithOddCycleSearchSevenEight) {
  Rng rng(5);
  for (size_t n : {7, 8}) {
    const uint32_t pairs = static_cast<uint32_t>(n * (n - 1) / 2);
    for (int rep = 0; rep < 20000; ++rep) {
      const uint32_t mask = static_cast<uint32_t>(rng()) & ((1u << pairs) - 1);
      const auto g = FromMask(n, mask);
      ASSERT_EQ(IsBipartiteExact(g), !HasOddCycle(g));
    }
  }
}

TEST(Expansion, Examples) {
  EXPECT_EQ(VertexExpansionExact(CompleteGraph(4)), (Fraction{1, 1}));
  EXPECT_EQ(VertexExpansionExact(BoundedDegreeGraph::FromEdges(4, 1, {{0, 1}, {2, 3}})),
            (Fraction{0, 1}));
  const Fraction c6 = VertexExpansionExact(CycleGraph(6));
  EXPECT_EQ(c6.num, 2u);
  EXPECT_EQ(c6.den, 3u);
}

TEST(Expansion, CapEnforced) {
  EXPECT_THROW(VertexExpansionExact(CycleGraph(25)), SizeCapError);
  EXPECT_NO_THROW(VertexExpansionExact(CycleGraph(12)));
}

TEST(Expansion, MatchesSubsetEnumeration) {
  Rng rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const size_t n = 2 + UniformIndex(rng, 11);
    const auto g = RandomGraph(n, 0.1 + 0.4 * Uniform01(rng), rng);
    EXPECT_NEAR(VertexExpansionExact(g).value(), ExpansionBrute(g), 1e-12);
  }
}

TEST(Expansion, ZeroIffDisconnected) {
  Rng rng(4);
  for (int rep = 0; rep < 400; ++rep) {
    const size_t n = 2 + UniformIndex(rng, rep < 380 ? 13 : 23);
    const auto g = RandomGraph(n, 2.5 / n, rng);
    uint32_t comps = 0;
    ConnectedComponents(g, &comps);
    EXPECT_EQ(VertexExpansionExact(g).num == 0, comps > 1);
  }
}

TEST(Farness, Formula) {
  const auto two = DisjointUnion({CycleGraph(8), CycleGraph(8)}, 5);
  EXPECT_DOUBLE_EQ(FarnessLowerBoundTwoComponents(two, 0.1, 5), 0.01);
  EXPECT_DOUBLE_EQ(FarnessLowerBoundTwoComponents(two, 0.0, 5), 0.0);
  EXPECT_DOUBLE_EQ(FarnessLowerBoundTwoComponents(two, 1.0, 4), 0.125);
  EXPECT_THROW(FarnessLowerBoundTwoComponents(CycleGraph(16), 0.1, 5),
               std::invalid_argument);
}

TEST(Generators, Shapes) {
  EXPECT_EQ(CycleGraph(7).num_edges(), 7u);
  EXPECT_EQ(PathGraph(7).num_edges(), 6u);
  EXPECT_EQ(CompleteGraph(5).num_edges(), 10u);
  uint32_t comps = 0;
  ConnectedComponents(DisjointUnion({CycleGraph(3), PathGraph(2), CompleteGraph(1)}, 2),
                      &comps);
  EXPECT_EQ(comps, 3u);
}

}  // namespace
}  // namespace bdprop
