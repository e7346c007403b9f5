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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <utility>

namespace bdprop {

BoundedDegreeGraph::BoundedDegreeGraph(
    uint32_t degree_bound, const std::vector<std::vector<Vertex>>& adjacency)
    : d_(degree_bound) {
  const size_t n = adjacency.size();
  if (n >= kBottom) throw std::invalid_argument("graph: too many vertices");
  offsets_.assign(n + 1, 0);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (size_t v = 0; v < n; ++v) {
    const auto& row = adjacency[v];
    if (row.size() > d_) {
      throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(row.size()) +
                                  " > d=" + std::to_string(d_));
    }
    for (Vertex u : row) {
      if (u >= n) {
        throw std::invalid_argument("graph: neighbor id " + std::to_string(u) +
                                    " out of range at vertex " +
                                    std::to_string(v));
      }
      if (u == v) {
        throw std::invalid_argument("graph: self-loop at vertex " +
                                    std::to_string(v));
      }
      arcs.emplace_back(static_cast<Vertex>(v), u);
    }
    offsets_[v + 1] = offsets_[v] + row.size();
    targets_.insert(targets_.end(), row.begin(), row.end());
  }
  auto reversed = arcs;
  for (auto& a : reversed) std::swap(a.first, a.second);
  std::sort(arcs.begin(), arcs.end());
  std::sort(reversed.begin(), reversed.end());
  if (arcs != reversed) {
    throw std::invalid_argument("graph: adjacency is not symmetric");
  }
}

BoundedDegreeGraph BoundedDegreeGraph::FromEdges(
    size_t n, uint32_t degree_bound,
    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("graph: edge out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return BoundedDegreeGraph(degree_bound, adj);
}

std::vector<std::vector<Vertex>> BoundedDegreeGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(num_vertices());
  for (Vertex v = 0; v < adj.size(); ++v) {
    adj[v].assign(neighbors_begin(v), neighbors_end(v));
  }
  return adj;
}

Vertex NeighborQuery(const BoundedDegreeGraph& g, Vertex v, uint32_t i,
                     QueryLedger& ledger) {
  if (v >= g.num_vertices()) {
    throw std::out_of_range("neighbor_query: vertex " + std::to_string(v) +
                            " out of range");
  }
  if (i < 1 || i > g.degree_bound()) {
    throw std::out_of_range("neighbor_query: index " + std::to_string(i) +
                            " outside [1, d]");
  }
  ++ledger.classical_queries;
  if (i > g.degree(v)) return kBottom;
  return g.neighbors_begin(v)[i - 1];
}

bool IsBipartiteExact(const BoundedDegreeGraph& g) {
  const size_t n = g.num_vertices();
  std::vector<int8_t> color(n, -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (auto* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
        if (color[*p] < 0) {
          color[*p] = static_cast<int8_t>(1 - color[v]);
          q.push(*p);
        } else if (color[*p] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<uint32_t> ConnectedComponents(const BoundedDegreeGraph& g,
                                          uint32_t* count) {
  const size_t n = g.num_vertices();
  constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> comp(n, kUnset);
  uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
        if (comp[*p] == kUnset) {
          comp[*p] = next;
          stack.push_back(*p);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

namespace {

struct ExpansionSearch {
  size_t n;
  size_t max_size;
  std::vector<uint32_t> nbr;  // neighbor bitmask per vertex
  uint64_t best_b = 1;
  uint64_t best_s = 0;  // best_s == 0 means "no candidate yet"

  void Visit(size_t next, uint32_t set, uint32_t reach, uint64_t size) {
    if (size > 0) {
      uint64_t b = std::popcount(reach & ~set);
      if (best_s == 0 || b * best_s < best_b * size) {
        best_b = b;
        best_s = size;
      }
    }
    if (size == max_size) return;
    for (size_t v = next; v < n; ++v) {
      Visit(v + 1, set | (1u << v), reach | nbr[v], size + 1);
    }
  }
};

}  // namespace

Fraction VertexExpansionExact(const BoundedDegreeGraph& g, size_t cap) {
  const size_t n = g.num_vertices();
  if (n > cap || n > 31) {
    throw SizeCapError("vertex_expansion_exact: N=" + std::to_string(n) +
                       " exceeds brute-force cap " + std::to_string(cap) +
                       "; use the spectral certificate instead");
  }
  if (n < 2) throw std::invalid_argument("vertex_expansion_exact: need N >= 2");
  ExpansionSearch s{n, n / 2, std::vector<uint32_t>(n, 0)};
  for (Vertex v = 0; v < n; ++v) {
    for (auto* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
      s.nbr[v] |= 1u << *p;
    }
  }
  s.Visit(0, 0, 0, 0);
  uint64_t gcd = std::gcd(s.best_b, s.best_s);
  if (gcd == 0) gcd = 1;
  return Fraction{s.best_b / gcd, s.best_s / gcd};
}

double FarnessLowerBoundTwoComponents(const BoundedDegreeGraph& g,
                                      double alpha_prime, uint32_t d) {
  if (!(alpha_prime >= 0.0)) {
    throw std::invalid_argument("farness: alpha' must be >= 0");
  }
  if (d == 0) throw std::invalid_argument("farness: d must be >= 1");
  uint32_t count = 0;
  auto comp = ConnectedComponents(g, &count);
  if (count < 2) {
    throw std::invalid_argument("farness: graph must have >= 2 components");
  }
  std::vector<size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  const double n = static_cast<double>(g.num_vertices());
  const double largest = static_cast<double>(*std::max_element(sizes.begin(), sizes.end()));
  if (largest > n / 2 + std::pow(n, 0.75)) {
    throw std::invalid_argument("farness: largest component exceeds N/2 + N^{3/4}");
  }
  return alpha_prime / (2.0 * d);
}

BoundedDegreeGraph CycleGraph(size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return BoundedDegreeGraph::FromEdges(n, 2, e);
}

BoundedDegreeGraph PathGraph(size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (size_t i = 0; i + 1 < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return BoundedDegreeGraph::FromEdges(n, 2, e);
}

BoundedDegreeGraph CompleteGraph(size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return BoundedDegreeGraph::FromEdges(n, n > 0 ? static_cast<uint32_t>(n - 1) : 0, e);
}

BoundedDegreeGraph DisjointUnion(const std::vector<BoundedDegreeGraph>& parts,
                                 uint32_t degree_bound) {
  std::vector<std::vector<Vertex>> adj;
  for (const auto& p : parts) {
    const Vertex base = static_cast<Vertex>(adj.size());
    for (Vertex v = 0; v < p.num_vertices(); ++v) {
      std::vector<Vertex> row;
      for (auto* q = p.neighbors_begin(v); q != p.neighbors_end(v); ++q) {
        row.push_back(base + *q);
      }
      adj.push_back(std::move(row));
    }
  }
  return BoundedDegreeGraph(degree_bound, adj);
}

}  // namespace bdprop
