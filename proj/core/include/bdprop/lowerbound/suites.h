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


#ifndef BDPROP_LOWERBOUND_SUITES_H_
#define BDPROP_LOWERBOUND_SUITES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bdprop/lowerbound/expectation.h"
#include "bdprop/lowerbound/monomial.h"
#include "bdprop/rng.h"

namespace bdprop::lb {

// Regression suites shared by the CLI and the acceptance runner.
struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  uint64_t checked = 0;
  uint64_t failures = 0;
  std::vector<std::string> notes;  // first few failures

  void Record(bool ok, const std::string& what);
};

SuiteResult RunPropPartSuite(uint32_t kmax);
SuiteResult RunMobiusSuite(uint32_t kmax);
// Divisibility and theta vanishing over every d-matrix with c columns and
// entries in 0..dmax (rows nonzero), for k <= kmax, all partitions.
SuiteResult RunProp2GridSuite(uint32_t kmax, uint32_t c = 2, uint32_t dmax = 3);
SuiteResult RunPropFinalSuite(uint32_t kmax, uint64_t seed, uint32_t reps = 20);
SuiteResult RunMultiplicitySuite(uint64_t seed, uint32_t per_degree = 100);

Monomial RandomConsistentMonomial(Rng& rng, uint32_t terms, uint32_t max_vertex,
                                  uint32_t c);

struct GridCell {
  std::string monomial;
  uint64_t M = 0;
  uint32_t l = 0;
  std::string exact;        // "p/q" at (M, l), empty if undefined
  std::string denominator;  // factored, e.g. "(M-1l)^2 (M-3l)^1"
  double exact_value = 0;
  bool realizable = true;   // false when M/l is odd
  Estimate mc;
  double sigma = 0;         // sqrt(p(1-p)/n) at the exact p
  bool passed = false;
  std::string note;
};

struct GridReport {
  std::vector<GridCell> cells;
  SuiteResult summary;
};

std::vector<Monomial> ExpectationGridMonomials();
std::vector<std::pair<uint64_t, uint32_t>> ExpectationGridHosts();
GridReport RunExpectationGrid(
    uint64_t samples, uint64_t seed,
    const std::vector<std::pair<uint64_t, uint32_t>>& hosts = ExpectationGridHosts());

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_SUITES_H_
