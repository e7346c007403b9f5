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

#include "bdprop/hard_instances.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bdprop {

void PmlParams::Validate() const {
  if (N < 1) throw std::invalid_argument("pml: N must be >= 1");
  if (l < 1) throw std::invalid_argument("pml: l must be >= 1");
  if (c < 1) throw std::invalid_argument("pml: c must be >= 1");
  if (M % l != 0) {
    throw std::invalid_argument("pml: l=" + std::to_string(l) +
                                " does not divide M=" + std::to_string(M));
  }
  if (M < N) throw std::invalid_argument("pml: M must be >= N");
  if ((M / l) % 2 != 0) {
    throw std::invalid_argument("pml: block size M/l=" + std::to_string(M / l) +
                                " is odd; no perfect matching exists");
  }
  if (M >= kBottom) throw std::invalid_argument("pml: M too large");
}

uint64_t DefaultHostSize(uint64_t n, uint32_t l) {
  if (n < 1 || l < 1) throw std::invalid_argument("pml: N, l must be >= 1");
  const long double target =
      n * (1.0L + std::pow(static_cast<long double>(n), -0.1L));
  const uint64_t step = 2ULL * l;
  uint64_t m = static_cast<uint64_t>(std::ceil(target / step)) * step;
  while (m < target) m += step;
  while (m >= step && m - step >= target) m -= step;
  return m;
}

BoundedDegreeGraph MatchingUnionGraph::ToGraph() const {
  std::vector<std::vector<Vertex>> adj(params.M);
  for (const auto& mate : partner) {
    for (Vertex v = 0; v < params.M; ++v) {
      auto& row = adj[v];
      if (std::find(row.begin(), row.end(), mate[v]) == row.end()) {
        row.push_back(mate[v]);
      }
    }
  }
  return BoundedDegreeGraph(params.c, adj);
}

MatchingUnionGraph SampleMatchingUnion(const PmlParams& p, Rng& rng) {
  p.Validate();
  MatchingUnionGraph g;
  g.params = p;
  g.partner.assign(p.c, std::vector<Vertex>(p.M));
  const uint64_t bs = p.block_size();
  std::vector<Vertex> pool(bs);
  std::vector<uint64_t> pos(bs);
  std::vector<uint8_t> matched(bs);
  auto remove = [&](uint64_t local) {
    const uint64_t at = pos[local];
    const Vertex last = pool.back();
    pool[at] = last;
    pos[last] = at;
    pool.pop_back();
  };
  for (uint32_t j = 0; j < p.c; ++j) {
    for (uint32_t b = 0; b < p.l; ++b) {
      const Vertex base = static_cast<Vertex>(b * bs);
      pool.resize(bs);
      for (uint64_t i = 0; i < bs; ++i) {
        pool[i] = static_cast<Vertex>(i);
        pos[i] = i;
        matched[i] = 0;
      }
      for (uint64_t u = 0; u < bs; ++u) {
        if (matched[u]) continue;
        remove(u);
        const Vertex w = pool[UniformIndex(rng, pool.size())];
        remove(w);
        matched[u] = matched[w] = 1;
        g.partner[j][base + u] = base + w;
        g.partner[j][base + w] = static_cast<Vertex>(base + u);
      }
    }
  }
  return g;
}

namespace {

// Shared selection loop; free vertices per block kept in swap-remove pools.
Selection Select(const PmlParams& p, Rng& rng) {
  Selection s;
  s.block_counts.assign(p.l, 0);
  const uint64_t bs = p.block_size();
  std::vector<std::vector<Vertex>> free(p.l);
  s.chosen.reserve(p.N);
  for (uint64_t i = 0; i < p.N; ++i) {
    const uint32_t b = static_cast<uint32_t>(UniformIndex(rng, p.l));
    auto& f = free[b];
    if (s.block_counts[b] == 0) {
      f.resize(bs);
      for (uint64_t k = 0; k < bs; ++k) f[k] = static_cast<Vertex>(b * bs + k);
    }
    if (s.block_counts[b] == bs) {
      s.failed = true;
      return s;
    }
    const uint64_t r = UniformIndex(rng, f.size());
    s.chosen.push_back(f[r]);
    f[r] = f.back();
    f.pop_back();
    ++s.block_counts[b];
  }
  return s;
}

}  // namespace

Selection SampleSelection(const PmlParams& p, Rng& rng) {
  p.Validate();
  return Select(p, rng);
}

InducedSample SampleInduced(const MatchingUnionGraph& host, Rng& rng) {
  const PmlParams& p = host.params;
  p.Validate();
  Selection sel = Select(p, rng);
  InducedSample out;
  out.chosen = std::move(sel.chosen);
  out.block_counts = std::move(sel.block_counts);
  out.failed = sel.failed;
  if (out.failed) return out;
  std::vector<Vertex> label(p.M, kBottom);
  for (Vertex i = 0; i < out.chosen.size(); ++i) label[out.chosen[i]] = i;
  std::vector<std::vector<Vertex>> adj(p.N);
  for (Vertex i = 0; i < p.N; ++i) {
    for (const auto& mate : host.partner) {
      const Vertex other = label[mate[out.chosen[i]]];
      if (other == kBottom) continue;
      auto& row = adj[i];
      if (std::find(row.begin(), row.end(), other) == row.end()) row.push_back(other);
    }
  }
  out.induced.emplace(p.c, adj);
  return out;
}

double ChernoffFailureBound(uint64_t n, uint32_t l, double c_exp) {
  if (n < 1 || l < 1) throw std::invalid_argument("chernoff: N, l must be >= 1");
  if (!(c_exp > 0.0)) throw std::invalid_argument("chernoff: c_exp must be > 0");
  const double nn = static_cast<double>(n);
  const double eps = std::pow(nn, -c_exp);
  return l * std::exp(-eps * eps * (nn / l) / 3.0);
}

bool CoefficientBoundCheck(const std::function<double(uint32_t)>& f, uint32_t k,
                           double* coefficient) {
  if (k > 20) throw SizeCapError("coefficient_bound_check: k > 20");
  long double coef = 0;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    const double v = f(mask);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("coefficient_bound_check: evaluator left [0,1]");
    }
    const bool odd = ((k - std::popcount(mask)) & 1) != 0;
    coef += odd ? -v : v;
  }
  if (coefficient) *coefficient = static_cast<double>(coef);
  return std::fabs(coef) <= std::ldexp(1.0L, static_cast<int>(k));
}

double NeighborEventBound(uint64_t M, uint64_t N, uint64_t i, double alpha,
                          uint32_t c) {
  if (N < 1 || M < N) throw std::invalid_argument("neighbor_event: need M >= N >= 1");
  if (i < 1) throw std::invalid_argument("neighbor_event: i must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("neighbor_event: alpha < 0");
  if ((1.0 + alpha) * i > static_cast<double>(M)) {
    throw std::invalid_argument("neighbor_event: (1+alpha) i exceeds M");
  }
  const double nn = static_cast<double>(N);
  const double base = static_cast<double>(M - N) / nn + (1.0 + alpha) * i / nn;
  if (base >= 1.0) return 1.0;
  return std::pow(base, c * static_cast<double>(i) / 2.0);
}

ExpanderRateReport EmpiricalExpanderRate(const PmlParams& p, double alpha,
                                         uint64_t trials, Rng& rng) {
  p.Validate();
  ExpanderRateReport r;
  r.spectral = p.N > kExactExpansionCap;
  uint64_t good = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    MatchingUnionGraph host = SampleMatchingUnion(p, rng);
    InducedSample s = SampleInduced(host, rng);
    if (s.failed) {
      ++r.failed;
      continue;
    }
    ++r.samples;
    if (p.N < 2) continue;
    if (r.spectral) {
      good += SpectralExpansion(*s.induced).expansion_lower_bound >= alpha;
    } else {
      good += VertexExpansionExact(*s.induced).value() >= alpha;
    }
  }
  r.rate = r.samples ? static_cast<double>(good) / r.samples : 0.0;
  return r;
}

}  // namespace bdprop
