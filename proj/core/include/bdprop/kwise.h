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

#ifndef BDPROP_KWISE_H_
#define BDPROP_KWISE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "bdprop/gf2m.h"
#include "bdprop/rng.h"

namespace bdprop {

// k-wise independent bits from a random polynomial of degree < k over
// GF(2^m), m = max(1, ceil(log2 n)). Variable j is the low bit of the
// polynomial evaluated at the field element j. Seed length is k*m bits;
// coefficient t occupies seed bits [t*m, (t+1)*m), little-endian, where seed
// bit i is bit (i % 8) of byte (i / 8).
//
// This is a polynomial-evaluation family rather than a BCH-code family; the
// seed is O(k log n) bits either way.
class KWiseFamily {
 public:
  // Throws std::invalid_argument when k > n, k == 0, or the seed is not
  // exactly ceil(k*m/8) bytes with zero padding bits.
  KWiseFamily(uint64_t n, uint32_t k, std::vector<uint8_t> seed);

  static KWiseFamily Random(uint64_t n, uint32_t k, Rng& rng);
  static KWiseFamily FromHex(uint64_t n, uint32_t k, const std::string& hex);

  static int FieldBits(uint64_t n);
  static uint64_t SeedBits(uint64_t n, uint32_t k) {
    return uint64_t{k} * static_cast<uint64_t>(FieldBits(n));
  }

  uint64_t n() const { return n_; }
  uint32_t k() const { return k_; }
  int field_bits() const { return field_.m(); }
  uint64_t field_order() const { return field_.order(); }
  uint64_t seed_bits() const { return SeedBits(n_, k_); }
  const std::vector<uint8_t>& seed() const { return seed_; }
  std::string SeedHex() const;

  // Polynomial value at field point j. Throws std::out_of_range for j >= n.
  uint64_t EvalElement(uint64_t j) const;
  bool EvalBit(uint64_t j) const { return EvalElement(j) & 1; }

  // Symbol j in [0, alphabet) built from the bits of variables
  // [j*stride, (j+1)*stride). Power-of-two alphabets use b = ceil(log2
  // alphabet) bits exactly. Otherwise up to 41 rounds of b bits are drawn
  // and the first word below `alphabet` wins; if all are rejected the last
  // word is reduced modulo `alphabet`. The per-round acceptance rate exceeds
  // 1/2, so the modulo bias is below 2^-41.
  uint32_t EvalSymbol(uint64_t j, uint32_t alphabet) const;

  static inline constexpr uint32_t kRejectionRounds = 41;
  static uint32_t SymbolBits(uint32_t alphabet);
  static uint64_t SymbolStride(uint32_t alphabet);

 private:
  uint64_t n_;
  uint32_t k_;
  Gf2m field_;
  std::vector<uint8_t> seed_;
  std::vector<uint64_t> coeff_;  // coeff_[t] multiplies x^t
};

// Enumerates all 2^(k*m) seeds of the (n, k) family and checks that every
// set of between 1 and `subset_size` variables is exactly uniform on
// {0,1}^|set|. subset_size = 0 means k. Throws SizeCapError when
// k*m > 24 or n > 64.
bool VerifyKWiseExhaustive(uint64_t n, uint32_t k, uint32_t subset_size = 0);

}  // namespace bdprop

#endif  // BDPROP_KWISE_H_
