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

#ifndef BDPROP_LOWERBOUND_MONOMIAL_H_
#define BDPROP_LOWERBOUND_MONOMIAL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace bdprop::lb {

// x_{u,v,j}: (u, v) is an edge of matching j. j is 1-based.
struct Term {
  uint32_t u = 0;
  uint32_t v = 0;
  uint32_t j = 1;

  auto operator<=>(const Term&) const = default;
};

class Monomial {
 public:
  Monomial() = default;
  // Orients every term as u < v and drops duplicates. Throws
  // std::invalid_argument on u == v or j == 0.
  explicit Monomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t degree() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::vector<uint32_t> vertices() const;  // sorted, distinct
  uint32_t max_matching() const;

  // False if some vertex has two different partners in one matching; such a
  // monomial has expectation 0 since no perfect matching contains it.
  bool IsMatchingConsistent() const;

  std::string ToString() const;

 private:
  std::vector<Term> terms_;
};

// Components of the term graph, ordered by smallest vertex label.
struct ComponentProfile {
  uint32_t k = 0;                           // number of components
  uint32_t c = 0;                           // matchings indexed (max j)
  std::vector<uint32_t> v;                  // v_i
  std::vector<std::vector<uint32_t>> d;     // d[i][j-1]
  std::vector<std::vector<uint32_t>> members;  // sorted vertex labels

  uint32_t total_vertices() const;
  uint32_t total_edges() const;
};

ComponentProfile ComponentProfileOf(const Monomial& p);

// Profile given directly by its d-matrix (k rows, c columns); v_i is set to
// the tree-bound-compatible value sum_j d_{i,j} + 1 unless provided.
ComponentProfile ProfileFromMatrix(const std::vector<std::vector<uint32_t>>& d,
                                   std::vector<uint32_t> v = {});

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_MONOMIAL_H_
