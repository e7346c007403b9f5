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

#ifndef BDPROP_GRAPH_H_
#define BDPROP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdprop {

using Vertex = uint32_t;

// Sentinel outside every valid vertex range; the oracle's "no such neighbor".
inline constexpr Vertex kBottom = std::numeric_limits<Vertex>::max();

// Thrown when an exact oracle is asked to work above its enumeration cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Fraction {
  uint64_t num = 0;
  uint64_t den = 1;

  double value() const { return static_cast<double>(num) / den; }
  bool operator==(const Fraction& o) const {
    return num * o.den == o.num * den;
  }
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
};

// Immutable undirected graph with a per-vertex ordered neighbor list and a
// degree bound d. Stored in CSR form.
class BoundedDegreeGraph {
 public:
  BoundedDegreeGraph() = default;

  // Validates ids, the degree bound, absence of self-loops and multiset
  // symmetry. Throws std::invalid_argument on violation.
  BoundedDegreeGraph(uint32_t degree_bound,
                     const std::vector<std::vector<Vertex>>& adjacency);

  static BoundedDegreeGraph FromEdges(
      size_t n, uint32_t degree_bound,
      const std::vector<std::pair<Vertex, Vertex>>& edges);

  size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  uint32_t degree_bound() const { return d_; }
  uint32_t degree(Vertex v) const {
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  size_t num_edges() const { return targets_.size() / 2; }

  // 0-based direct access, bypassing the ledger. For oracles and analyzers.
  const Vertex* neighbors_begin(Vertex v) const {
    return targets_.data() + offsets_[v];
  }
  const Vertex* neighbors_end(Vertex v) const {
    return targets_.data() + offsets_[v + 1];
  }
  std::vector<std::vector<Vertex>> adjacency() const;

 private:
  uint32_t d_ = 0;
  std::vector<size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

struct QueryLedger {
  uint64_t classical_queries = 0;
  uint64_t modeled_quantum_queries = 0;
  uint64_t walk_steps = 0;

  QueryLedger& operator+=(const QueryLedger& o) {
    classical_queries += o.classical_queries;
    modeled_quantum_queries += o.modeled_quantum_queries;
    walk_steps += o.walk_steps;
    return *this;
  }
};

// f_G(v, i): i-th neighbor of v (1-based) or kBottom. Charges one query.
// Throws std::out_of_range for v >= N or i outside [1, d].
Vertex NeighborQuery(const BoundedDegreeGraph& g, Vertex v, uint32_t i,
                     QueryLedger& ledger);

bool IsBipartiteExact(const BoundedDegreeGraph& g);

// Component id per vertex (ids assigned in order of smallest member).
std::vector<uint32_t> ConnectedComponents(const BoundedDegreeGraph& g,
                                          uint32_t* count = nullptr);

inline constexpr size_t kExactExpansionCap = 24;

// min over nonempty U with |U| <= N/2 of |boundary(U)| / |U|.
// Throws SizeCapError above `cap` and std::invalid_argument for N < 2.
Fraction VertexExpansionExact(const BoundedDegreeGraph& g,
                              size_t cap = kExactExpansionCap);

// alpha' / (2d) for a graph split into >= 2 components, none larger than
// N/2 + N^{3/4}.
double FarnessLowerBoundTwoComponents(const BoundedDegreeGraph& g,
                                      double alpha_prime, uint32_t d);

// Small named families used by tests, benchmarks and the CLI.
BoundedDegreeGraph CycleGraph(size_t n);
BoundedDegreeGraph PathGraph(size_t n);
BoundedDegreeGraph CompleteGraph(size_t n);
BoundedDegreeGraph DisjointUnion(const std::vector<BoundedDegreeGraph>& parts,
                                 uint32_t degree_bound);

}  // namespace bdprop

#endif  // BDPROP_GRAPH_H_
