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

#ifndef BDPROP_HARD_INSTANCES_H_
#define BDPROP_HARD_INSTANCES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bdprop/graph.h"
#include "bdprop/rng.h"

namespace bdprop {

struct PmlParams {
  uint64_t N = 0;  // sample size
  uint64_t M = 0;  // host size
  uint32_t l = 1;  // blocks
  uint32_t c = 1;  // matchings per block

  uint64_t block_size() const { return M / l; }
  // l | M, M >= N, M/l even, c >= 1, N >= 1. Throws std::invalid_argument.
  void Validate() const;
};

// Smallest multiple of 2l that is >= N (1 + N^{-0.1}).
uint64_t DefaultHostSize(uint64_t n, uint32_t l);

// Host graph on M vertices; block b is [b*M/l, (b+1)*M/l). partner[j][v] is
// v's mate in matching j (0-based j).
struct MatchingUnionGraph {
  PmlParams params;
  std::vector<std::vector<Vertex>> partner;

  uint32_t block_of(Vertex v) const {
    return static_cast<uint32_t>(v / params.block_size());
  }
  // Simple graph with parallel edges collapsed; degree bound c.
  BoundedDegreeGraph ToGraph() const;
};

// Each matching: repeatedly pair the lowest unmatched vertex with a uniform
// unmatched partner. This is exactly uniform over perfect matchings.
MatchingUnionGraph SampleMatchingUnion(const PmlParams& p, Rng& rng);

struct Selection {
  std::vector<Vertex> chosen;  // host vertex of label i
  std::vector<uint64_t> block_counts;
  bool failed = false;
};

// The selection half of P_{M,l}: for each label draw a uniform block, then a
// uniform free vertex of it. Fails the moment a full block is drawn.
Selection SampleSelection(const PmlParams& p, Rng& rng);

struct InducedSample {
  std::vector<Vertex> chosen;
  std::vector<uint64_t> block_counts;
  bool failed = false;
  std::optional<BoundedDegreeGraph> induced;  // labels 0..N-1, degree <= c
};

InducedSample SampleInduced(const MatchingUnionGraph& host, Rng& rng);

// l * exp(-eps^2 (N/l) / 3) with eps = N^{-c_exp}.
double ChernoffFailureBound(uint64_t n, uint32_t l, double c_exp);

// Coefficient of x_1...x_k in the multilinear extension of f, by
// inclusion-exclusion over the 2^k sub-assignments (bit i of the mask is
// x_{i+1}). Checks |coef| <= 2^k. Requires k <= 20 and f in [0,1].
bool CoefficientBoundCheck(const std::function<double(uint32_t)>& f, uint32_t k,
                           double* coefficient = nullptr);

struct SpectralCertificate {
  double lambda2_laplacian = 0;
  double lambda2_adjacency = 0;  // second largest adjacency eigenvalue
  // lambda2(L) / (2 d): a lower bound on vertex expansion, since
  // |E(U, U^c)| >= lambda2 |U| |U^c| / N and each boundary vertex absorbs at
  // most d of those edges.
  double expansion_lower_bound = 0;
};

SpectralCertificate SpectralExpansion(const BoundedDegreeGraph& g);

struct ExpanderRateReport {
  double rate = 0;  // among non-failed samples
  uint64_t samples = 0;
  uint64_t failed = 0;
  bool spectral = false;  // true when N > 24 and the certificate was used
};

// Fraction of P_{M,l} samples certified to be alpha-expanders. Exact
// expansion for N <= 24, the spectral lower bound otherwise (conservative).
ExpanderRateReport EmpiricalExpanderRate(const PmlParams& p, double alpha,
                                         uint64_t trials, Rng& rng);

// min(1, ((M-N)/N + (1+alpha) i / N)^{c i / 2}).
double NeighborEventBound(uint64_t M, uint64_t N, uint64_t i, double alpha,
                          uint32_t c);

}  // namespace bdprop

#endif  // BDPROP_HARD_INSTANCES_H_
