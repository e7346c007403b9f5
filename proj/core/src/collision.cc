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

#include "bdprop/collision.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace bdprop {

CollisionRelation CollisionRelation::SameKey() {
  return CollisionRelation(Kind::kSameKey);
}

CollisionRelation CollisionRelation::SameKeyDistinctTag() {
  return CollisionRelation(Kind::kSameKeyDistinctTag);
}

CollisionRelation CollisionRelation::Custom(Predicate pred) {
  CollisionRelation r(Kind::kCustom);
  r.pred_ = std::move(pred);
  return r;
}

bool CollisionRelation::operator()(const CodomainPoint& a,
                                   const CodomainPoint& b) const {
  if (a.key != b.key) return false;
  switch (kind_) {
    case Kind::kSameKey:
      return true;
    case Kind::kSameKeyDistinctTag:
      return a.tag != b.tag;
    case Kind::kCustom:
      return pred_(a, b);
  }
  return false;
}

bool ExcludeSet::IsSwapClosed() const {
  for (const auto& [x, y] : pairs_) {
    if (!pairs_.count({y, x})) return false;
  }
  return true;
}

namespace {

// Smallest c with c^3 >= v.
uint64_t CeilCubeRoot(unsigned __int128 v) {
  uint64_t lo = 0, hi = 1;
  while (static_cast<unsigned __int128>(hi) * hi * hi < v) hi *= 2;
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid * mid >= v) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

struct Evaluated {
  std::vector<CodomainPoint> points;
  std::vector<uint64_t> order;  // indices sorted by (key, index)
};

Evaluated EvaluateAll(const CollisionQuery& q) {
  Evaluated e;
  e.points.resize(q.domain_size);
  for (uint64_t x = 0; x < q.domain_size; ++x) e.points[x] = q.evaluator(x);
  e.order.resize(q.domain_size);
  for (uint64_t x = 0; x < q.domain_size; ++x) e.order[x] = x;
  std::stable_sort(e.order.begin(), e.order.end(), [&](uint64_t a, uint64_t b) {
    return e.points[a].key < e.points[b].key;
  });
  return e;
}

// Lexicographically smallest non-excluded related pair inside one bucket
// (indices ascending).
std::optional<Pair> BucketMin(const CollisionQuery& q, const Evaluated& e,
                              const uint64_t* bucket, size_t size,
                              const ExcludeSet& exclude) {
  using Kind = CollisionRelation::Kind;
  if (q.relation.kind() == Kind::kSameKeyDistinctTag) {
    // next_diff[a]: first position after a whose tag differs from a's.
    std::vector<size_t> next_diff(size, size);
    for (size_t a = size - 1; a-- > 0;) {
      next_diff[a] = e.points[bucket[a + 1]].tag != e.points[bucket[a]].tag
                         ? a + 1
                         : next_diff[a + 1];
    }
    for (size_t a = 0; a + 1 < size; ++a) {
      const uint64_t x = bucket[a];
      for (size_t b = next_diff[a]; b < size; ++b) {
        const uint64_t y = bucket[b];
        if (e.points[y].tag == e.points[x].tag) continue;
        if (!exclude.Contains(x, y)) return Pair{x, y};
      }
    }
    return std::nullopt;
  }
  for (size_t a = 0; a + 1 < size; ++a) {
    const uint64_t x = bucket[a];
    for (size_t b = a + 1; b < size; ++b) {
      const uint64_t y = bucket[b];
      if (q.relation.kind() == Kind::kCustom && !q.relation(e.points[x], e.points[y])) {
        continue;
      }
      if (!exclude.Contains(x, y)) return Pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

uint64_t ModeledQuantumCost(uint64_t domain_size, uint64_t codomain_size,
                            double log_power) {
  if (domain_size < 1 || codomain_size < 1) {
    throw std::invalid_argument("modeled_quantum_cost: sizes must be >= 1");
  }
  const unsigned __int128 x = domain_size;
  const uint64_t root = CeilCubeRoot(x * x);
  const uint64_t lg = static_cast<uint64_t>(std::bit_width(codomain_size));
  if (log_power == 1.0) return root * lg;
  return static_cast<uint64_t>(
      std::ceil(static_cast<double>(root) * std::pow(static_cast<double>(lg), log_power)));
}

CollisionReport FindCollision(const CollisionQuery& q, const ExcludeSet& exclude,
                              Rng& rng) {
  if (q.domain_size < 2) {
    throw std::invalid_argument("find_collision: domain must have >= 2 points");
  }
  if (!(q.injected_failure >= 0.0 && q.injected_failure < 1.0)) {
    throw std::invalid_argument("find_collision: injected_failure must be in [0,1)");
  }
  CollisionReport report;
  report.modeled_quantum_queries =
      ModeledQuantumCost(q.domain_size, q.codomain_size, q.log_power);
  Evaluated e = EvaluateAll(q);
  report.classical_evals = q.domain_size;

  std::optional<Pair> best;
  size_t start = 0;
  while (start < e.order.size()) {
    size_t end = start + 1;
    const uint64_t key = e.points[e.order[start]].key;
    while (end < e.order.size() && e.points[e.order[end]].key == key) ++end;
    if (end - start >= 2) {
      auto cand = BucketMin(q, e, e.order.data() + start, end - start, exclude);
      if (cand && (!best || *cand < *best)) best = cand;
    }
    start = end;
  }
  if (best && q.injected_failure > 0.0 && Uniform01(rng) < q.injected_failure) {
    best.reset();
  }
  report.found = best;
  return report;
}

CountReport CountAtLeast(const CollisionQuery& q, uint64_t threshold, Rng& rng,
                         uint32_t retries) {
  if (threshold < 1) throw std::invalid_argument("count_at_least: M must be >= 1");
  const uint32_t t = retries ? retries : DefaultRetries(threshold);
  CountReport out;
  for (uint64_t i = 0; i < threshold; ++i) {
    bool got = false;
    for (uint32_t attempt = 0; attempt < t && !got; ++attempt) {
      CollisionReport r = FindCollision(q, out.exclude, rng);
      ++out.finder_calls;
      out.classical_evals += r.classical_evals;
      out.modeled_quantum_queries += r.modeled_quantum_queries;
      if (r.found) {
        out.exclude.Add(r.found->first, r.found->second);
        ++out.collisions_found;
        got = true;
      }
    }
    if (!got) return out;
  }
  out.at_least = true;
  return out;
}

uint64_t CountCollisionsExact(const CollisionQuery& q) {
  Evaluated e = EvaluateAll(q);
  uint64_t total = 0;
  size_t start = 0;
  while (start < e.order.size()) {
    size_t end = start + 1;
    const uint64_t key = e.points[e.order[start]].key;
    while (end < e.order.size() && e.points[e.order[end]].key == key) ++end;
    const uint64_t* b = e.order.data() + start;
    const size_t size = end - start;
    switch (q.relation.kind()) {
      case CollisionRelation::Kind::kSameKey:
        total += size * (size - 1) / 2;
        break;
      case CollisionRelation::Kind::kSameKeyDistinctTag: {
        std::vector<uint32_t> tags(size);
        for (size_t i = 0; i < size; ++i) tags[i] = e.points[b[i]].tag;
        std::sort(tags.begin(), tags.end());
        uint64_t same = 0;
        for (size_t i = 0; i < size;) {
          size_t j = i;
          while (j < size && tags[j] == tags[i]) ++j;
          same += (j - i) * (j - i - 1) / 2;
          i = j;
        }
        total += size * (size - 1) / 2 - same;
        break;
      }
      case CollisionRelation::Kind::kCustom:
        for (size_t i = 0; i < size; ++i) {
          for (size_t j = i + 1; j < size; ++j) {
            if (q.relation(e.points[b[i]], e.points[b[j]])) ++total;
          }
        }
        break;
    }
    start = end;
  }
  return total;
}

}  // namespace bdprop
