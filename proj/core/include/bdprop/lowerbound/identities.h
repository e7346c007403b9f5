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

#ifndef BDPROP_LOWERBOUND_IDENTITIES_H_
#define BDPROP_LOWERBOUND_IDENTITIES_H_

#include <cstdint>
#include <vector>

#include "bdprop/lowerbound/bivariate_rational.h"
#include "bdprop/lowerbound/monomial.h"
#include "bdprop/lowerbound/partitions.h"

namespace bdprop::lb {

// B(L): the lcm of K(L') over all L' <= L.
OddFactors CommonDenominator(const ComponentProfile& prof, const SetPartition& L);

struct DivisibilityReport {
  uint32_t min_l_power = 0;  // of alpha'_L; UINT32_MAX when alpha'_L == 0
  uint32_t required = 0;     // k - |L|
  bool reduced_ok = false;   // l^{k-|L|} divides alpha'_L
  bool full_ok = false;      // l^{V-|L|} divides l^{sum d} alpha'_L
};

// alpha'_L = sum_{L' <= L} c(L', L) prod_{k in B(L) - K(L')} (M - k l),
// expanded as a polynomial and inspected for powers of l.
DivisibilityReport DivisibilityCheckDetailed(const ComponentProfile& prof,
                                             const SetPartition& L);
bool DivisibilityCheck(const ComponentProfile& prof, const SetPartition& L);

// e_i of a multiset of odd multipliers via Newton's identities on its power
// sums.
BigInt ElementarySymmetric(const OddFactors& x, uint32_t i);

// theta_{L,i} = sum_{L' <= L} c(L', L) e_i(B(L) - K(L')).
BigInt Theta(const ComponentProfile& prof, const SetPartition& L, uint32_t i);

// theta_{L,i} == 0. Requires L coarser than the finest partition and
// 0 <= i <= k - |L| - 1; throws std::invalid_argument otherwise.
bool ThetaVanishingCheck(const ComponentProfile& prof, const SetPartition& L,
                         uint32_t i);

struct PropFinalReport {
  BigInt sum;
  bool constraint_ok = false;  // sum_j (alpha_j - 1) <= k - |L| - 1
  bool holds = false;          // constraint_ok && sum == 0
};

// sum_{L' <= L} c(L', L) prod_j S_{alpha_j}(L') with
// S_a(L') = sum_{S in L'} sum_j (sum_{i in S} d_{i,j})^a. Requires every
// alpha_j >= 1 and k <= 5. The sum is reported even when the constraint
// fails.
PropFinalReport VerifyPropFinal(const std::vector<std::vector<uint32_t>>& d,
                                const SetPartition& L,
                                const std::vector<uint32_t>& alphas);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_IDENTITIES_H_
