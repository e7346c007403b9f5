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

#ifndef BDPROP_LOWERBOUND_EXPECTATION_H_
#define BDPROP_LOWERBOUND_EXPECTATION_H_

#include <cstdint>
#include <vector>

#include "bdprop/hard_instances.h"
#include "bdprop/lowerbound/bivariate_rational.h"
#include "bdprop/lowerbound/monomial.h"
#include "bdprop/lowerbound/partitions.h"
#include "bdprop/rng.h"

namespace bdprop::lb {

// K(L): odd multipliers of prod_{S in L} prod_j R'_{sum_{i in S} d_{i,j}}.
OddFactors KMultiset(const ComponentProfile& prof, const SetPartition& L);

// f_L = prod_{S in L} prod_j R_{sum_{i in S} d_{i,j}}.
BivariateRational FL(const ComponentProfile& prof, const SetPartition& L);

// f'_L = sum_{L' <= L} c(L', L) f_{L'}.
BivariateRational FPrimeL(const ComponentProfile& prof, const SetPartition& L);

// E[P] as an exact bivariate rational function. Computed by grouping:
//   E = l^{D - V} sum_{L'} f~_{L'} h(L'),  h(L') = sum_{L >= L'} c(L', L) l^{|L|}
// where f~ uses the l-free R'_d and D = sum d_{i,j}. The final l^{D-V} is an
// exact division; a remainder would throw std::logic_error.
// Requires k <= 8. A matching-inconsistent monomial yields 0.
BivariateRational ExactExpectation(const Monomial& p);

// The same quantity summed literally, sum_L l^{|L| - V} f'_L, with every
// f'_L built by BivariateRational arithmetic. Slower; used as a cross-check.
BivariateRational ExactExpectationLiteral(const Monomial& p);

struct Estimate {
  double mean = 0;
  double std_error = 0;
  uint64_t samples = 0;
  uint64_t resampled = 0;  // failed selections redrawn
};

// Empirical E[P] under P_{M,l}: the monomial's distinct vertex labels are
// relabelled 0..V-1 and placed by the selection process (redrawn on
// failure, which cannot happen when V <= M/l); a term holds when the two
// chosen host vertices are partners in its matching. One host/selection
// draw is shared across all monomials.
std::vector<Estimate> MonteCarloExpectations(const std::vector<Monomial>& ps,
                                             uint64_t M, uint32_t l,
                                             uint64_t samples, Rng& rng);
Estimate MonteCarloExpectation(const Monomial& p, uint64_t M, uint32_t l,
                               uint64_t samples, Rng& rng);

struct MultiplicityReport {
  bool ok = false;
  uint32_t total_degree = 0;
  double harmonic_cap = 0;  // 2T H(2T)
  bool numerator_degree_ok = false;
};

// Each factor (M - (2k-1) l) of E[P]'s denominator has multiplicity t with
// t k <= 2T, the denominator degree is at most 2T H(2T), and the numerator
// degree stays below the denominator degree. Requires deg P <= 2T.
MultiplicityReport DenominatorMultiplicityCheck(const Monomial& p, uint32_t T);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_EXPECTATION_H_
