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

#include "bdprop/walk.h"

#include <stdexcept>
#include <string>

#include "bdprop/rng.h"

namespace bdprop {

WalkCoins WalkCoins::FullyRandom(uint64_t seed, uint64_t walk_index,
                                 uint32_t length, uint32_t alphabet) {
  if (alphabet < 2) throw std::invalid_argument("walk: alphabet must be >= 2");
  WalkCoins c(Kind::kRandom, length, alphabet);
  c.stream_key_ = DeriveSeed(seed, walk_index);
  return c;
}

WalkCoins WalkCoins::KWise(const KWiseFamily& fam, uint64_t walk_index,
                           uint32_t length, uint32_t alphabet) {
  if (alphabet < 2) throw std::invalid_argument("walk: alphabet must be >= 2");
  WalkCoins c(Kind::kKWise, length, alphabet);
  c.fam_ = &fam;
  c.walk_index_ = walk_index;
  return c;
}

WalkCoins WalkCoins::Fixed(std::vector<uint32_t> coins, uint32_t alphabet) {
  if (alphabet < 2) throw std::invalid_argument("walk: alphabet must be >= 2");
  for (uint32_t c : coins) {
    if (c >= alphabet) throw std::out_of_range("walk: fixed coin out of range");
  }
  WalkCoins c(Kind::kFixed, static_cast<uint32_t>(coins.size()), alphabet);
  c.fixed_ = std::move(coins);
  return c;
}

uint32_t WalkCoins::Coin(uint32_t j) const {
  switch (kind_) {
    case Kind::kRandom: {
      // Multiply-shift reduction; bias at most alphabet / 2^64.
      const unsigned __int128 x = Mix64(stream_key_ ^ Mix64(j));
      return static_cast<uint32_t>((x * alphabet_) >> 64);
    }
    case Kind::kKWise:
      return fam_->EvalSymbol(walk_index_ * length_ + j, alphabet_);
    case Kind::kFixed:
      return fixed_.at(j);
  }
  return 0;
}

Vertex LazyStep(const BoundedDegreeGraph& g, Vertex v, uint32_t coin,
                QueryLedger& ledger) {
  const uint32_t d = g.degree_bound();
  if (coin >= 2 * d && !(d == 0 && coin < 2)) {
    throw std::out_of_range("lazy_step: coin " + std::to_string(coin) +
                            " outside [0, 2d)");
  }
  if (coin >= d) return v;
  Vertex u = NeighborQuery(g, v, coin + 1, ledger);
  return u == kBottom ? v : u;
}

WalkTrace RunWalk(const BoundedDegreeGraph& g, Vertex s, const WalkCoins& coins,
                  QueryLedger& ledger) {
  if (s >= g.num_vertices()) throw std::out_of_range("run_walk: bad start");
  WalkTrace t;
  t.visited.push_back(s);
  auto end = WalkWithVisitor(g, s, coins, ledger,
                             [&](uint32_t, Vertex v, uint8_t) {
                               if (v != t.visited.back()) t.visited.push_back(v);
                             });
  t.moves = t.visited.size() - 1;
  t.endpoint = end.vertex;
  return t;
}

ParityEndpoint EndpointParity(const BoundedDegreeGraph& g, Vertex s,
                              const WalkCoins& coins, QueryLedger& ledger) {
  if (s >= g.num_vertices()) throw std::out_of_range("walk: bad start");
  return WalkWithVisitor(g, s, coins, ledger, [](uint32_t, Vertex, uint8_t) {});
}

Vertex Endpoint(const BoundedDegreeGraph& g, Vertex s, const WalkCoins& coins,
                QueryLedger& ledger) {
  return EndpointParity(g, s, coins, ledger).vertex;
}

}  // namespace bdprop
