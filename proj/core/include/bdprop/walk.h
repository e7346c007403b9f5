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

#ifndef BDPROP_WALK_H_
#define BDPROP_WALK_H_

#include <cstdint>
#include <vector>

#include "bdprop/graph.h"
#include "bdprop/kwise.h"

namespace bdprop {

// The L coin symbols of one walk. Symbol j of walk i is a pure function of
// (source, i, j) for every source kind, so walks can be replayed or run in
// any order.
class WalkCoins {
 public:
  // Counter-based stream keyed by (seed, walk_index).
  static WalkCoins FullyRandom(uint64_t seed, uint64_t walk_index,
                               uint32_t length, uint32_t alphabet);
  // Symbol j is fam.EvalSymbol(walk_index * length + j, alphabet).
  static WalkCoins KWise(const KWiseFamily& fam, uint64_t walk_index,
                         uint32_t length, uint32_t alphabet);
  static WalkCoins Fixed(std::vector<uint32_t> coins, uint32_t alphabet);

  uint32_t length() const { return length_; }
  uint32_t alphabet() const { return alphabet_; }
  uint32_t Coin(uint32_t j) const;

 private:
  enum class Kind { kRandom, kKWise, kFixed };
  WalkCoins(Kind kind, uint32_t length, uint32_t alphabet)
      : kind_(kind), length_(length), alphabet_(alphabet) {}

  Kind kind_;
  uint32_t length_;
  uint32_t alphabet_;
  uint64_t stream_key_ = 0;
  uint64_t walk_index_ = 0;
  const KWiseFamily* fam_ = nullptr;
  std::vector<uint32_t> fixed_;
};

struct WalkTrace {
  std::vector<Vertex> visited;  // consecutive repeats omitted
  uint64_t moves = 0;
  Vertex endpoint = 0;
};

struct ParityEndpoint {
  Vertex vertex = 0;
  uint8_t parity = 0;

  bool operator==(const ParityEndpoint&) const = default;
};

// One lazy step with coin in [0, 2d). A coin c < d asks the oracle for
// neighbor c+1 (one query) and moves there unless the answer is BOTTOM. A
// coin c >= d stays put without a query. This realizes "move to each
// neighbor w.p. 1/(2d), else stay" while charging at most one query.
Vertex LazyStep(const BoundedDegreeGraph& g, Vertex v, uint32_t coin,
                QueryLedger& ledger);

// Calls visit(j, vertex, parity) after each coin j = 1..L, where parity is
// the number of real moves so far mod 2.
template <typename Visit>
ParityEndpoint WalkWithVisitor(const BoundedDegreeGraph& g, Vertex s,
                               const WalkCoins& coins, QueryLedger& ledger,
                               Visit&& visit) {
  Vertex v = s;
  uint8_t parity = 0;
  for (uint32_t j = 0; j < coins.length(); ++j) {
    Vertex next = LazyStep(g, v, coins.Coin(j), ledger);
    if (next != v) parity ^= 1;
    v = next;
    visit(j + 1, v, parity);
  }
  ledger.walk_steps += coins.length();
  return ParityEndpoint{v, parity};
}

WalkTrace RunWalk(const BoundedDegreeGraph& g, Vertex s, const WalkCoins& coins,
                  QueryLedger& ledger);
ParityEndpoint EndpointParity(const BoundedDegreeGraph& g, Vertex s,
                              const WalkCoins& coins, QueryLedger& ledger);
Vertex Endpoint(const BoundedDegreeGraph& g, Vertex s, const WalkCoins& coins,
                QueryLedger& ledger);

}  // namespace bdprop

#endif  // BDPROP_WALK_H_
