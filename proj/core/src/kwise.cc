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

#include "bdprop/kwise.h"

#include <bit>
#include <stdexcept>

#include "bdprop/graph.h"

namespace bdprop {

int KWiseFamily::FieldBits(uint64_t n) {
  if (n <= 2) return 1;
  int m = std::bit_width(n - 1);
  if (m > kMaxFieldBits) {
    throw std::invalid_argument("kwise: n too large for GF(2^32)");
  }
  return m;
}

KWiseFamily::KWiseFamily(uint64_t n, uint32_t k, std::vector<uint8_t> seed)
    : n_(n), k_(k), field_(FieldBits(n)), seed_(std::move(seed)) {
  if (k_ == 0) throw std::invalid_argument("kwise: k must be >= 1");
  if (k_ > n_) {
    throw std::invalid_argument("kwise: k=" + std::to_string(k_) +
                                " exceeds n=" + std::to_string(n_));
  }
  const uint64_t bits = seed_bits();
  if (seed_.size() != (bits + 7) / 8) {
    throw std::invalid_argument("kwise: seed must be " + std::to_string(bits) +
                                " bits (" + std::to_string((bits + 7) / 8) +
                                " bytes), got " + std::to_string(seed_.size()) +
                                " bytes");
  }
  if (bits % 8 != 0 && (seed_.back() >> (bits % 8)) != 0) {
    throw std::invalid_argument("kwise: seed has nonzero padding bits");
  }
  const int m = field_.m();
  coeff_.assign(k_, 0);
  for (uint32_t t = 0; t < k_; ++t) {
    uint64_t c = 0;
    for (int b = 0; b < m; ++b) {
      uint64_t i = uint64_t{t} * m + b;
      c |= uint64_t{(seed_[i / 8] >> (i % 8)) & 1u} << b;
    }
    coeff_[t] = c;
  }
}

KWiseFamily KWiseFamily::Random(uint64_t n, uint32_t k, Rng& rng) {
  const uint64_t bits = SeedBits(n, k);
  std::vector<uint8_t> seed((bits + 7) / 8);
  for (auto& byte : seed) byte = static_cast<uint8_t>(rng() & 0xff);
  if (bits % 8) seed.back() &= static_cast<uint8_t>((1u << (bits % 8)) - 1);
  return KWiseFamily(n, k, std::move(seed));
}

KWiseFamily KWiseFamily::FromHex(uint64_t n, uint32_t k,
                                 const std::string& hex) {
  // Byte i is hex characters [2i, 2i+2).
  if (hex.size() % 2) throw std::invalid_argument("kwise: odd-length hex seed");
  std::vector<uint8_t> seed(hex.size() / 2);
  for (size_t i = 0; i < seed.size(); ++i) {
    if (hex.find_first_not_of("0123456789abcdefABCDEF", 2 * i) < 2 * i + 2) {
      throw std::invalid_argument("kwise: bad hex digit in seed");
    }
    seed[i] = static_cast<uint8_t>(std::stoul(hex.substr(2 * i, 2), nullptr, 16));
  }
  return KWiseFamily(n, k, std::move(seed));
}

std::string KWiseFamily::SeedHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : seed_) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

uint64_t KWiseFamily::EvalElement(uint64_t j) const {
  if (j >= n_) {
    throw std::out_of_range("kwise: variable " + std::to_string(j) +
                            " out of range n=" + std::to_string(n_));
  }
  uint64_t r = 0;
  if (field_.has_tables()) {
    if (j == 0) return coeff_[0];
    const uint32_t lx = field_.Log(j);
    for (uint32_t t = k_; t-- > 0;) r = field_.MulByLog(r, lx) ^ coeff_[t];
  } else {
    for (uint32_t t = k_; t-- > 0;) r = field_.MulSlow(r, j) ^ coeff_[t];
  }
  return r;
}

uint32_t KWiseFamily::SymbolBits(uint32_t alphabet) {
  if (alphabet < 2) throw std::invalid_argument("kwise: alphabet must be >= 2");
  return static_cast<uint32_t>(std::bit_width(alphabet - 1));
}

uint64_t KWiseFamily::SymbolStride(uint32_t alphabet) {
  const uint32_t b = SymbolBits(alphabet);
  return std::has_single_bit(alphabet) ? b : uint64_t{b} * kRejectionRounds;
}

uint32_t KWiseFamily::EvalSymbol(uint64_t j, uint32_t alphabet) const {
  const uint32_t b = SymbolBits(alphabet);
  const uint64_t stride = SymbolStride(alphabet);
  if (j >= n_ / stride) {
    throw std::out_of_range("kwise: symbol " + std::to_string(j) +
                            " needs variables beyond n=" + std::to_string(n_));
  }
  const uint64_t base = j * stride;
  const uint32_t rounds = std::has_single_bit(alphabet) ? 1 : kRejectionRounds;
  uint32_t word = 0;
  for (uint32_t r = 0; r < rounds; ++r) {
    word = 0;
    for (uint32_t i = 0; i < b; ++i) {
      word |= static_cast<uint32_t>(EvalBit(base + uint64_t{r} * b + i)) << i;
    }
    if (word < alphabet) return word;
  }
  return word % alphabet;
}

bool VerifyKWiseExhaustive(uint64_t n, uint32_t k, uint32_t subset_size) {
  if (subset_size == 0) subset_size = k;
  const uint64_t bits = KWiseFamily::SeedBits(n, k);
  if (bits > 24 || n > 64 || subset_size > 20) {
    throw SizeCapError("verify_kwise_exhaustive: seed space 2^" +
                       std::to_string(bits) + " or n=" + std::to_string(n) +
                       " over enumeration cap");
  }
  const uint64_t seeds = uint64_t{1} << bits;
  const size_t bytes = (bits + 7) / 8;
  std::vector<uint64_t> outcome(seeds);  // bit j = variable j under seed s
  for (uint64_t s = 0; s < seeds; ++s) {
    std::vector<uint8_t> seed(bytes);
    for (size_t i = 0; i < bytes; ++i) seed[i] = static_cast<uint8_t>(s >> (8 * i));
    KWiseFamily fam(n, k, std::move(seed));
    uint64_t mask = 0;
    for (uint64_t j = 0; j < n; ++j) mask |= uint64_t{fam.EvalBit(j)} << j;
    outcome[s] = mask;
  }
  // Walk every subset of size 1..subset_size in lexicographic order.
  std::vector<uint32_t> idx;
  std::vector<uint64_t> tally;
  for (uint32_t size = 1; size <= subset_size && size <= n; ++size) {
    idx.resize(size);
    for (uint32_t i = 0; i < size; ++i) idx[i] = i;
    const uint64_t expected = seeds >> size;
    if (expected << size != seeds) return false;
    while (true) {
      tally.assign(uint64_t{1} << size, 0);
      for (uint64_t s = 0; s < seeds; ++s) {
        uint64_t pattern = 0;
        for (uint32_t i = 0; i < size; ++i) pattern |= ((outcome[s] >> idx[i]) & 1) << i;
        ++tally[pattern];
      }
      for (uint64_t c : tally) {
        if (c != expected) return false;
      }
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (uint32_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return true;
}

}  // namespace bdprop
