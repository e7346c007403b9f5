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


#include "bdprop/lowerbound/suites.h"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bdprop/lowerbound/identities.h"
#include "bdprop/lowerbound/partitions.h"

namespace bdprop::lb {

namespace {

constexpr size_t kMaxNotes = 8;

std::string MatrixString(const std::vector<std::vector<uint32_t>>& d) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ';';
    for (size_t j = 0; j < d[i].size(); ++j) os << (j ? "," : "") << d[i][j];
  }
  os << ']';
  return os.str();
}

std::string RationalString(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

// Nondecreasing sequences of length k over [0, n).
void ForEachMultiset(uint32_t k, uint32_t n,
                     const std::function<void(const std::vector<uint32_t>&)>& f) {
  std::vector<uint32_t> idx(k, 0);
  while (true) {
    f(idx);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (uint32_t t = i + 1; t < k; ++t) idx[t] = idx[i];
  }
}

void ForEachAlpha(uint32_t budget, uint32_t max_len,
                  std::vector<uint32_t>& cur,
                  const std::function<void(const std::vector<uint32_t>&)>& f) {
  if (!cur.empty()) f(cur);
  if (cur.size() == max_len) return;
  const uint32_t lo = cur.empty() ? 1 : cur.back();
  for (uint32_t a = lo; a - 1 <= budget; ++a) {
    cur.push_back(a);
    ForEachAlpha(budget - (a - 1), max_len, cur, f);
    cur.pop_back();
  }
}

}  // namespace

void SuiteResult::Record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++failures;
  passed = false;
  if (notes.size() < kMaxNotes) notes.push_back(what);
}

SuiteResult RunPropPartSuite(uint32_t kmax) {
  SuiteResult r{"prop_part"};
  for (uint32_t k = 1; k <= kmax; ++k) r.Record(VerifyPropPart(k), "k=" + std::to_string(k));
  return r;
}

SuiteResult RunMobiusSuite(uint32_t kmax) {
  SuiteResult r{"mobius"};
  int64_t fact = 1;
  for (uint32_t k = 1; k <= kmax; ++k) {
    if (k > 1) fact *= k - 1;
    const int64_t expected = (k % 2 == 1 ? 1 : -1) * fact;
    const int64_t got = ChainCoefficient(SetPartition::Finest(k), SetPartition::Coarsest(k));
    r.Record(got == expected, "k=" + std::to_string(k) + " got " + std::to_string(got));
  }
  return r;
}

SuiteResult RunProp2GridSuite(uint32_t kmax, uint32_t c, uint32_t dmax) {
  SuiteResult r{"prop2_grid"};
  std::vector<std::vector<uint32_t>> rows;
  std::vector<uint32_t> row(c, 0);
  while (true) {
    uint32_t i = 0;
    while (i < c && row[i] == dmax) row[i++] = 0;
    if (i == c) break;
    ++row[i];
    rows.push_back(row);
  }
  // Both identities are invariant under relabelling components together with
  // L, so multisets of rows cover the grid.
  for (uint32_t k = 1; k <= kmax; ++k) {
    const auto& lat = PartitionLattice::Get(k);
    ForEachMultiset(k, static_cast<uint32_t>(rows.size()), [&](const std::vector<uint32_t>& pick) {
      std::vector<std::vector<uint32_t>> d;
      for (uint32_t p : pick) d.push_back(rows[p]);
      const auto prof = ProfileFromMatrix(d);
      for (const auto& L : lat.all()) {
        const auto rep = DivisibilityCheckDetailed(prof, L);
        r.Record(rep.reduced_ok && rep.full_ok,
                 "divisibility d=" + MatrixString(d) + " L=" + L.ToString());
        for (uint32_t i = 0; i + L.size() < k; ++i) {
          r.Record(ThetaVanishingCheck(prof, L, i),
                   "theta d=" + MatrixString(d) + " L=" + L.ToString() + " i=" + std::to_string(i));
        }
      }
    });
  }
  return r;
}

SuiteResult RunPropFinalSuite(uint32_t kmax, uint64_t seed, uint32_t reps) {
  SuiteResult r{"prop_final"};
  Rng rng = MakeRng(seed, 0x5f);
  constexpr uint32_t kCols = 2, kMaxEntry = 3, kMaxAlphaLen = 3;
  for (uint32_t k = 2; k <= kmax; ++k) {
    for (const auto& L : PartitionLattice::Get(k).all()) {
      if (L.size() >= k) continue;
      std::vector<uint32_t> cur;
      ForEachAlpha(k - L.size() - 1, kMaxAlphaLen, cur, [&](const std::vector<uint32_t>& alpha) {
        for (uint32_t t = 0; t < reps; ++t) {
          std::vector<std::vector<uint32_t>> d(k, std::vector<uint32_t>(kCols));
          for (auto& rw : d) {
            for (auto& x : rw) x = static_cast<uint32_t>(UniformIndex(rng, kMaxEntry + 1));
          }
          const auto rep = VerifyPropFinal(d, L, alpha);
          std::string a;
          for (uint32_t x : alpha) a += std::to_string(x) + ' ';
          r.Record(rep.holds, "d=" + MatrixString(d) + " L=" + L.ToString() + " alpha=" + a);
        }
      });
    }
  }
  return r;
}

Monomial RandomConsistentMonomial(Rng& rng, uint32_t terms, uint32_t max_vertex,
                                  uint32_t c) {
  if (max_vertex < 2 || c == 0) throw std::invalid_argument("random monomial: bad range");
  while (true) {
    std::vector<Term> ts;
    for (uint32_t i = 0; i < terms; ++i) {
      const auto u = static_cast<uint32_t>(UniformIndex(rng, max_vertex));
      auto v = static_cast<uint32_t>(UniformIndex(rng, max_vertex - 1));
      if (v >= u) ++v;
      ts.push_back({u, v, 1 + static_cast<uint32_t>(UniformIndex(rng, c))});
    }
    Monomial m(ts);
    if (m.degree() == terms && m.IsMatchingConsistent()) return m;
  }
}

SuiteResult RunMultiplicitySuite(uint64_t seed, uint32_t per_degree) {
  SuiteResult r{"denominator_multiplicity"};
  Rng rng = MakeRng(seed, 0x6d);
  for (uint32_t deg : {2u, 4u, 6u, 8u}) {
    for (uint32_t t = 0; t < per_degree; ++t) {
      const uint32_t span = deg + 1 + static_cast<uint32_t>(UniformIndex(rng, 3));
      const Monomial p = RandomConsistentMonomial(rng, deg, span, 3);
      const auto rep = DenominatorMultiplicityCheck(p, deg / 2);
      r.Record(rep.ok, p.ToString());
    }
  }
  return r;
}

std::vector<Monomial> ExpectationGridMonomials() {
  return {
      Monomial({{1, 2, 1}}),
      Monomial({{1, 2, 1}, {2, 3, 2}}),
      Monomial({{1, 2, 1}, {3, 4, 1}}),
      Monomial({{1, 2, 1}, {3, 4, 2}}),
      Monomial({{1, 2, 1}, {1, 2, 2}}),
      Monomial({{1, 2, 1}, {2, 3, 2}, {3, 4, 1}}),
      Monomial({{1, 2, 1}, {2, 3, 2}, {1, 3, 3}}),
      Monomial({{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {1, 4, 2}}),
      Monomial({{1, 2, 1}, {1, 2, 2}, {3, 4, 1}, {3, 4, 2}}),
      Monomial({{1, 2, 1}, {1, 3, 2}, {1, 4, 3}}),
      Monomial({{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {1, 4, 2}, {1, 3, 3}}),
      Monomial({{1, 2, 1}, {2, 3, 2}, {3, 4, 3}}),
      Monomial({{1, 2, 1}, {1, 3, 1}}),  // inconsistent
  };
}

std::vector<std::pair<uint64_t, uint32_t>> ExpectationGridHosts() {
  return {{10, 1}, {10, 2}, {12, 3}};
}

GridReport RunExpectationGrid(uint64_t samples, uint64_t seed,
                              const std::vector<std::pair<uint64_t, uint32_t>>& hosts) {
  GridReport rep;
  rep.summary.name = "expectation_grid";
  const auto monos = ExpectationGridMonomials();
  std::vector<BivariateRational> exact;
  for (const auto& p : monos) exact.push_back(ExactExpectation(p));
  for (size_t h = 0; h < hosts.size(); ++h) {
    const auto [M, l] = hosts[h];
    std::vector<Estimate> est;
    std::string why;
    try {
      Rng rng = MakeRng(seed, h);
      est = MonteCarloExpectations(monos, M, l, samples, rng);
    } catch (const std::invalid_argument& e) {
      why = e.what();
    }
    for (size_t m = 0; m < monos.size(); ++m) {
      GridCell cell;
      cell.monomial = monos[m].ToString();
      cell.M = M;
      cell.l = l;
      cell.denominator = exact[m].denominator().ToString();
      bool defined = true;
      try {
        const Rational e = exact[m].Eval(M, l);
        cell.exact = RationalString(e);
        cell.exact_value = static_cast<double>(e);
      } catch (const std::domain_error&) {
        defined = false;
        cell.note = "exact value undefined at this host";
      }
      if (est.empty()) {
        cell.realizable = false;
        cell.note = why;
      } else if (defined) {
        cell.mc = est[m];
        const double p = cell.exact_value;
        cell.sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
        cell.passed = std::fabs(cell.mc.mean - p) <= 3 * cell.sigma;
      }
      rep.summary.Record(cell.passed, cell.monomial + " M=" + std::to_string(M) +
                                          " l=" + std::to_string(l) +
                                          (cell.note.empty() ? "" : ": " + cell.note));
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace bdprop::lb
