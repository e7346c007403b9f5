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

#include "bdprop/lowerbound/identities.h"

#include <limits>
#include <stdexcept>

#include "bdprop/lowerbound/expectation.h"

namespace bdprop::lb {

OddFactors CommonDenominator(const ComponentProfile& prof, const SetPartition& L) {
  OddFactors b;
  for (const auto& Lp : PartitionLattice::Get(prof.k).all()) {
    if (Lp.Refines(L)) b = OddFactors::Lcm(b, KMultiset(prof, Lp));
  }
  return b;
}

DivisibilityReport DivisibilityCheckDetailed(const ComponentProfile& prof,
                                             const SetPartition& L) {
  const OddFactors B = CommonDenominator(prof, L);
  Poly2 alpha;
  for (const auto& Lp : PartitionLattice::Get(prof.k).all()) {
    if (!Lp.Refines(L)) continue;
    const int64_t c = ChainCoefficient(Lp, L);
    if (c != 0) alpha += (B - KMultiset(prof, Lp)).Expand() * Rational(c);
  }
  DivisibilityReport r;
  r.min_l_power = alpha.min_l_power();
  r.required = prof.k - L.size();
  r.reduced_ok = r.min_l_power >= r.required;
  const uint64_t have = alpha.is_zero()
                            ? std::numeric_limits<uint64_t>::max()
                            : uint64_t{r.min_l_power} + prof.total_edges();
  r.full_ok = have >= uint64_t{prof.total_vertices()} - L.size();
  return r;
}

bool DivisibilityCheck(const ComponentProfile& prof, const SetPartition& L) {
  const DivisibilityReport r = DivisibilityCheckDetailed(prof, L);
  return r.reduced_ok && r.full_ok;
}

BigInt ElementarySymmetric(const OddFactors& x, uint32_t i) {
  std::vector<BigInt> p(i + 1, 0);  // power sums p_1..p_i
  for (uint32_t a = 1; a <= i; ++a) {
    for (const auto& [k, t] : x.factors()) {
      BigInt pw = 1;
      for (uint32_t q = 0; q < a; ++q) pw *= k;
      p[a] += pw * t;
    }
  }
  std::vector<BigInt> e(i + 1, 0);
  e[0] = 1;
  for (uint32_t n = 1; n <= i; ++n) {
    BigInt acc = 0;
    for (uint32_t a = 1; a <= n; ++a) {
      const BigInt term = e[n - a] * p[a];
      if (a % 2) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[n] = acc / n;  // exact
  }
  return e[i];
}

BigInt Theta(const ComponentProfile& prof, const SetPartition& L, uint32_t i) {
  const OddFactors B = CommonDenominator(prof, L);
  BigInt theta = 0;
  for (const auto& Lp : PartitionLattice::Get(prof.k).all()) {
    if (!Lp.Refines(L)) continue;
    const int64_t c = ChainCoefficient(Lp, L);
    if (c != 0) theta += ElementarySymmetric(B - KMultiset(prof, Lp), i) * c;
  }
  return theta;
}

bool ThetaVanishingCheck(const ComponentProfile& prof, const SetPartition& L,
                         uint32_t i) {
  if (L.size() >= prof.k) {
    throw std::invalid_argument("theta: L must be coarser than the finest partition");
  }
  if (i > prof.k - L.size() - 1) {
    throw std::invalid_argument("theta: i outside [0, k-|L|-1]");
  }
  return Theta(prof, L, i) == 0;
}

PropFinalReport VerifyPropFinal(const std::vector<std::vector<uint32_t>>& d,
                                const SetPartition& L,
                                const std::vector<uint32_t>& alphas) {
  const uint32_t k = static_cast<uint32_t>(d.size());
  if (k > 5) throw std::invalid_argument("prop final: k must be <= 5");
  if (L.k() != k) throw std::invalid_argument("prop final: partition size != k");
  int64_t excess = 0;
  for (uint32_t a : alphas) {
    if (a < 1) throw std::invalid_argument("prop final: alpha_j must be >= 1");
    excess += a - 1;
  }
  PropFinalReport r;
  r.constraint_ok = excess <= static_cast<int64_t>(k) - static_cast<int64_t>(L.size()) - 1;
  const uint32_t c = k ? static_cast<uint32_t>(d[0].size()) : 0;
  for (const auto& Lp : PartitionLattice::Get(k).all()) {
    if (!Lp.Refines(L)) continue;
    const int64_t coef = ChainCoefficient(Lp, L);
    if (coef == 0) continue;
    BigInt F = 1;
    for (uint32_t a : alphas) {
      BigInt S = 0;
      for (const auto& cls : Lp.classes()) {
        for (uint32_t j = 0; j < c; ++j) {
          BigInt s = 0;
          for (uint32_t i : cls) s += d[i][j];
          S += boost::multiprecision::pow(s, a);
        }
      }
      F *= S;
    }
    r.sum += F * coef;
  }
  r.holds = r.constraint_ok && r.sum == 0;
  return r;
}

}  // namespace bdprop::lb
