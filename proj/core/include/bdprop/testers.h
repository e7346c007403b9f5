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

#ifndef BDPROP_TESTERS_H_
#define BDPROP_TESTERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdprop/collision.h"
#include "bdprop/graph.h"

namespace bdprop {

enum class CoinMode { kFullyRandom, kKWise };
// kExact counts collisions directly; kSkeleton goes through the collision
// finder / thresholded counter and charges modeled quantum cost.
enum class CountingMode { kExact, kSkeleton };

const char* ToString(CoinMode m);
const char* ToString(CountingMode m);

// ceil that forgives floating-point noise just above an integer.
uint64_t TolerantCeil(long double x);

struct ParamOverrides {
  std::optional<uint32_t> T, K, L, k_indep;
  uint32_t k_factor = 4;  // k = k_factor * L * ceil(log2(2d))
};

struct BipartiteParams {
  uint64_t n = 0;
  double epsilon = 0;
  uint32_t d = 0;
  uint32_t T = 0;
  uint32_t K = 0;
  uint32_t L = 0;
  uint32_t k_indep = 0;
};

// T = ceil(4/eps), K = ceil(sqrt(N) lg^2 / eps), L = ceil((lg/eps)^2) with
// lg = ceil(log2 N), k = 4 L ceil(log2(2d)). Requires N >= 2, 0 < eps < 1.
BipartiteParams DeriveBipParams(uint64_t n, double epsilon, uint32_t d,
                                const ParamOverrides& o = {});

struct ExpansionParams {
  uint64_t n = 0;
  double epsilon = 0;
  double alpha = 0;
  double mu = 0;
  uint32_t d = 0;
  uint32_t T = 0;
  uint32_t K = 0;
  uint32_t L = 0;
  uint32_t k_indep = 0;
  long double threshold = 0;     // N^{2mu}/2 + N^{1.75mu}/128
  uint64_t threshold_count = 0;  // floor(threshold) + 1
  uint32_t outer_retries = 4;
};

// Requires d >= 3, 0 < alpha < 1, 0 < mu < 1/4, 0 < eps < 1.
ExpansionParams DeriveExpParams(uint64_t n, double epsilon, double alpha,
                                double mu, uint32_t d,
                                const ParamOverrides& o = {});

struct TesterOptions {
  CoinMode coins = CoinMode::kFullyRandom;
  // Defaults to kSkeleton for k-wise coins and kExact otherwise.
  std::optional<CountingMode> counting;
  double injected_failure = 0.0;
  double log_power = 1.0;

  CountingMode counting_mode() const {
    return counting.value_or(coins == CoinMode::kKWise ? CountingMode::kSkeleton
                                                       : CountingMode::kExact);
  }
};

struct RepetitionRecord {
  Vertex start = 0;
  uint64_t collisions = 0;  // exact statistic, always computed
  bool rejected = false;
  std::string kwise_seed;  // hex, k-wise mode only
};

struct TesterVerdict {
  bool accept = true;
  std::vector<RepetitionRecord> repetitions;  // stops at the first reject
  QueryLedger ledger;
};

// One repetition's parity-collision statistic from start s: over the K*L
// prefix points (walk i, first j coins) -> (vertex, moves mod 2), the number
// of pairs at the same vertex with different parity. Seeds the coin source
// from `rep_seed` exactly as TestBipartiteness does.
uint64_t BipartiteRepetitionStatistic(const BoundedDegreeGraph& g, Vertex s,
                                      const BipartiteParams& p, CoinMode mode,
                                      uint64_t rep_seed, QueryLedger& ledger,
                                      std::string* kwise_seed = nullptr);

// Endpoint-collision statistic: sum over v of C(m_v, 2) for the K walk
// endpoints from s.
uint64_t ExpansionRepetitionStatistic(const BoundedDegreeGraph& g, Vertex s,
                                      const ExpansionParams& p, CoinMode mode,
                                      uint64_t rep_seed, QueryLedger& ledger,
                                      std::string* kwise_seed = nullptr);

TesterVerdict TestBipartiteness(const BoundedDegreeGraph& g,
                                const BipartiteParams& p,
                                const TesterOptions& opt, uint64_t seed);

TesterVerdict TestExpansion(const BoundedDegreeGraph& g,
                            const ExpansionParams& p, const TesterOptions& opt,
                            uint64_t seed);

// Pairwise oracle for the endpoint statistic: pairs i < j with w_i == w_j.
uint64_t PairwiseCollisions(const std::vector<Vertex>& endpoints);

}  // namespace bdprop

#endif  // BDPROP_TESTERS_H_
