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

#ifndef BDPROP_COLLISION_H_
#define BDPROP_COLLISION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bdprop/rng.h"

namespace bdprop {

struct CodomainPoint {
  uint64_t key = 0;
  uint32_t tag = 0;

  bool operator==(const CodomainPoint&) const = default;
};

// Symmetric relation on codomain points. Every supported relation only
// relates points with equal keys, which lets the finder bucket by key.
class CollisionRelation {
 public:
  using Predicate = std::function<bool(const CodomainPoint&, const CodomainPoint&)>;

  static CollisionRelation SameKey();
  static CollisionRelation SameKeyDistinctTag();
  // `pred` is only consulted for pairs with equal keys and must be symmetric.
  static CollisionRelation Custom(Predicate pred);

  bool operator()(const CodomainPoint& a, const CodomainPoint& b) const;

  enum class Kind { kSameKey, kSameKeyDistinctTag, kCustom };
  Kind kind() const { return kind_; }

 private:
  explicit CollisionRelation(Kind kind) : kind_(kind) {}
  Kind kind_;
  Predicate pred_;
};

using Pair = std::pair<uint64_t, uint64_t>;

// Set of already-found ordered pairs, kept closed under swapping.
class ExcludeSet {
 public:
  void Add(uint64_t x, uint64_t y) {
    pairs_.emplace(x, y);
    pairs_.emplace(y, x);
  }
  bool Contains(uint64_t x, uint64_t y) const { return pairs_.count({x, y}) > 0; }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::set<Pair>& pairs() const { return pairs_; }
  bool IsSwapClosed() const;

 private:
  std::set<Pair> pairs_;
};

struct CollisionQuery {
  uint64_t domain_size = 0;
  uint64_t codomain_size = 1;
  std::function<CodomainPoint(uint64_t)> evaluator;
  CollisionRelation relation = CollisionRelation::SameKey();
  double injected_failure = 0.0;  // in [0, 1)
  double log_power = 1.0;         // exponent on the log factor of the cost
};

struct CollisionReport {
  std::optional<Pair> found;  // first < second
  uint64_t classical_evals = 0;
  uint64_t modeled_quantum_queries = 0;
};

// ceil(X^{2/3}) * ceil(log2(Y + 1))^log_power. Sizes must be >= 1.
uint64_t ModeledQuantumCost(uint64_t domain_size, uint64_t codomain_size,
                            double log_power = 1.0);

// Classical stand-in for the quantum finder: evaluates the whole domain and
// returns the lexicographically smallest colliding pair outside `exclude`.
// A found pair is dropped with probability q.injected_failure. The modeled
// quantum cost is charged on every call.
CollisionReport FindCollision(const CollisionQuery& q, const ExcludeSet& exclude,
                              Rng& rng);

struct CountReport {
  bool at_least = false;
  uint64_t collisions_found = 0;
  uint64_t finder_calls = 0;
  uint64_t classical_evals = 0;
  uint64_t modeled_quantum_queries = 0;
  ExcludeSet exclude;
};

inline uint32_t DefaultRetries(uint64_t threshold) {
  // ceil(log2(3M)) + 1
  uint64_t x = 3 * threshold;
  uint32_t c = 0;
  while ((uint64_t{1} << c) < x) ++c;
  return c + 1;
}

// Thresholded counting: for i = 1..M, up to t finder calls with a growing
// exclude set; false as soon as one round comes up empty. Sound for any
// failure rate; exact when injected_failure = 0. t = 0 selects the default.
CountReport CountAtLeast(const CollisionQuery& q, uint64_t threshold, Rng& rng,
                         uint32_t retries = 0);

// Number of unordered colliding pairs, by bucketing.
uint64_t CountCollisionsExact(const CollisionQuery& q);

}  // namespace bdprop

#endif  // BDPROP_COLLISION_H_
