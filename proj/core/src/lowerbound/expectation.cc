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

#include "bdprop/lowerbound/expectation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "bdprop/graph.h"

namespace bdprop::lb {
namespace {

uint32_t ClassSum(const ComponentProfile& prof, const std::vector<uint32_t>& cls,
                  uint32_t j) {
  uint32_t s = 0;
  for (uint32_t i : cls) s += prof.d[i][j];
  return s;
}

// hc[t] = sum over partitions P of {0..j-1} with |P| = t of c(finest, P).
const std::vector<int64_t>& HCoefficients(uint32_t j) {
  static std::array<std::vector<int64_t>, kMaxPartitionSize + 1> cache;
  static std::array<std::once_flag, kMaxPartitionSize + 1> once;
  std::call_once(once[j], [j] {
    const PartitionLattice& lat = PartitionLattice::Get(j);
    const auto& row = ChainRow(j);
    std::vector<int64_t> hc(j + 1, 0);
    for (size_t i = 0; i < lat.size(); ++i) hc[lat[i].size()] += row[i];
    cache[j] = std::move(hc);
  });
  return cache[j];
}

void CheckK(uint32_t k) {
  if (k > kMaxPartitionSize) {
    throw SizeCapError("expectation: monomial has " + std::to_string(k) +
                       " components; cap is " + std::to_string(kMaxPartitionSize) +
                       " (Bell(" + std::to_string(k) + ")=" +
                       std::to_string(BellNumber(k)) + ")");
  }
}

}  // namespace

OddFactors KMultiset(const ComponentProfile& prof, const SetPartition& L) {
  if (L.k() != prof.k) throw std::invalid_argument("K(L): partition size != k");
  OddFactors f;
  for (const auto& cls : L.classes()) {
    for (uint32_t j = 0; j < prof.c; ++j) f = f + OddFactors::Chain(ClassSum(prof, cls, j));
  }
  return f;
}

BivariateRational FL(const ComponentProfile& prof, const SetPartition& L) {
  return BivariateRational(Poly2::Term(1, 0, prof.total_edges()), KMultiset(prof, L));
}

BivariateRational FPrimeL(const ComponentProfile& prof, const SetPartition& L) {
  CheckK(prof.k);
  const PartitionLattice& lat = PartitionLattice::Get(prof.k);
  BivariateRational sum;
  for (const auto& Lp : lat.all()) {
    if (!Lp.Refines(L)) continue;
    const int64_t c = ChainCoefficient(Lp, L);
    if (c != 0) sum = sum + FL(prof, Lp) * Rational(c);
  }
  return sum;
}

BivariateRational ExactExpectation(const Monomial& p) {
  if (p.empty()) return BivariateRational::Constant(1);
  if (!p.IsMatchingConsistent()) return BivariateRational::Constant(0);
  const ComponentProfile prof = ComponentProfileOf(p);
  CheckK(prof.k);
  const PartitionLattice& lat = PartitionLattice::Get(prof.k);

  // Group the L' terms by their denominator multiset; h(L') depends only on
  // |L'|, so each group carries a polynomial in l.
  std::map<OddFactors, std::vector<BigInt>> groups;
  for (const auto& Lp : lat.all()) {
    const auto& hc = HCoefficients(Lp.size());
    auto& acc = groups[KMultiset(prof, Lp)];
    if (acc.size() < hc.size()) acc.resize(hc.size());
    for (size_t t = 0; t < hc.size(); ++t) acc[t] += hc[t];
  }
  OddFactors common;
  for (const auto& [K, poly] : groups) common = OddFactors::Lcm(common, K);
  Poly2 numerator;
  for (const auto& [K, poly] : groups) {
    Poly2 h;
    for (size_t t = 0; t < poly.size(); ++t) {
      if (poly[t] != 0) h += Poly2::Term(Rational(poly[t]), 0, static_cast<uint32_t>(t));
    }
    if (!h.is_zero()) numerator += h * (common - K).Expand();
  }
  const int shift = static_cast<int>(prof.total_edges()) -
                    static_cast<int>(prof.total_vertices());
  try {
    return BivariateRational(numerator.ShiftL(shift), common);
  } catch (const std::domain_error&) {
    throw std::logic_error("expectation: numerator not divisible by l^" +
                           std::to_string(-shift) + " for " + p.ToString());
  }
}

BivariateRational ExactExpectationLiteral(const Monomial& p) {
  if (p.empty()) return BivariateRational::Constant(1);
  if (!p.IsMatchingConsistent()) return BivariateRational::Constant(0);
  const ComponentProfile prof = ComponentProfileOf(p);
  CheckK(prof.k);
  const int V = static_cast<int>(prof.total_vertices());
  BivariateRational sum;
  for (const auto& L : PartitionLattice::Get(prof.k).all()) {
    const BivariateRational fp = FPrimeL(prof, L);
    try {
      sum = sum + fp.ShiftL(static_cast<int>(L.size()) - V);
    } catch (const std::domain_error&) {
      throw std::logic_error("expectation: f'_L for L=" + L.ToString() +
                             " not divisible by l^" + std::to_string(V - L.size()));
    }
  }
  return sum;
}

std::vector<Estimate> MonteCarloExpectations(const std::vector<Monomial>& ps,
                                             uint64_t M, uint32_t l,
                                             uint64_t samples, Rng& rng) {
  struct Local {
    std::vector<Term> terms;  // relabelled
  };
  std::vector<Local> locals;
  uint32_t max_v = 1, max_c = 1;
  for (const auto& p : ps) {
    const auto verts = p.vertices();
    std::map<uint32_t, uint32_t> relabel;
    for (uint32_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = i;
    Local loc;
    for (const auto& t : p.terms()) loc.terms.push_back({relabel[t.u], relabel[t.v], t.j});
    locals.push_back(std::move(loc));
    max_v = std::max<uint32_t>(max_v, static_cast<uint32_t>(verts.size()));
    max_c = std::max(max_c, p.max_matching());
  }
  PmlParams params{max_v, M, l, max_c};
  params.Validate();

  std::vector<uint64_t> hits(ps.size(), 0);
  std::vector<Estimate> out(ps.size());
  uint64_t resampled = 0;
  for (uint64_t s = 0; s < samples; ++s) {
    const MatchingUnionGraph host = SampleMatchingUnion(params, rng);
    Selection sel = SampleSelection(params, rng);
    while (sel.failed) {
      ++resampled;
      sel = SampleSelection(params, rng);
    }
    for (size_t m = 0; m < locals.size(); ++m) {
      bool all = true;
      for (const auto& t : locals[m].terms) {
        if (host.partner[t.j - 1][sel.chosen[t.u]] != sel.chosen[t.v]) {
          all = false;
          break;
        }
      }
      hits[m] += all;
    }
  }
  for (size_t m = 0; m < ps.size(); ++m) {
    const double mean = samples ? static_cast<double>(hits[m]) / samples : 0.0;
    out[m].mean = mean;
    out[m].samples = samples;
    out[m].resampled = resampled;
    out[m].std_error = samples ? std::sqrt(mean * (1.0 - mean) / samples) : 0.0;
  }
  return out;
}

Estimate MonteCarloExpectation(const Monomial& p, uint64_t M, uint32_t l,
                               uint64_t samples, Rng& rng) {
  return MonteCarloExpectations({p}, M, l, samples, rng).front();
}

MultiplicityReport DenominatorMultiplicityCheck(const Monomial& p, uint32_t T) {
  if (p.degree() > 2ULL * T) {
    throw std::invalid_argument("multiplicity check: deg P exceeds 2T");
  }
  const BivariateRational e = ExactExpectation(p);
  MultiplicityReport r;
  r.ok = true;
  for (const auto& [odd, t] : e.denominator().factors()) {
    const uint64_t k = (odd + 1) / 2;
    if (uint64_t{t} * k > 2ULL * T) r.ok = false;
  }
  double h = 0;
  for (uint32_t i = 1; i <= 2 * T; ++i) h += 1.0 / i;
  r.harmonic_cap = 2.0 * T * h;
  r.total_degree = e.denominator().degree();
  if (r.total_degree > r.harmonic_cap + 1e-9) r.ok = false;
  r.numerator_degree_ok = e.numerator().total_degree() <= static_cast<int>(r.total_degree);
  r.ok = r.ok && r.numerator_degree_ok;
  return r;
}

}  // namespace bdprop::lb
