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

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "bdprop/graph.h"

namespace bdprop {
namespace {

// Carry-less multiply then reduce, bit by bit.
uint64_t ClmulMod(uint64_t a, uint64_t b, uint64_t poly, int m) {
  unsigned __int128 prod = 0;
  for (int i = 0; i < m; ++i) {
    if (b >> i & 1) prod ^= static_cast<unsigned __int128>(a) << i;
  }
  for (int i = 2 * m - 2; i >= m; --i) {
    if (prod >> i & 1) prod ^= static_cast<unsigned __int128>(poly) << (i - m);
  }
  return static_cast<uint64_t>(prod);
}

TEST(Gf2m, ModulusHasDegreeM) {
  for (int m = 1; m <= kMaxFieldBits; ++m) {
    EXPECT_EQ(std::bit_width(FieldModulus(m)), m + 1) << m;
  }
  EXPECT_THROW(FieldModulus(0), std::out_of_range);
  EXPECT_THROW(FieldModulus(33), std::out_of_range);
}

TEST(Gf2m, XGeneratesMultiplicativeGroup) {
  for (int m = 2; m <= 16; ++m) {
    const uint64_t poly = FieldModulus(m);
    const uint64_t order = (uint64_t{1} << m) - 1;
    uint64_t x = 1;
    uint64_t first_return = 0;
    for (uint64_t e = 1; e <= order; ++e) {
      x = ClmulMod(x, 2, poly, m);
      if (x == 1) {
        first_return = e;
        break;
      }
    }
    EXPECT_EQ(first_return, order) << "m=" << m;
  }
}

TEST(Gf2m, TableMulMatchesCarrylessReference) {
  Rng rng(1);
  for (int m : {1, 2, 3, 5, 8, 13, 20, 21, 32}) {
    Gf2m f(m);
    for (int rep = 0; rep < 2000; ++rep) {
      const uint64_t a = rng() & (f.order() - 1);
      const uint64_t b = rng() & (f.order() - 1);
      const uint64_t ref = ClmulMod(a, b, f.modulus(), m);
      ASSERT_EQ(f.MulSlow(a, b), ref);
      ASSERT_EQ(f.Mul(a, b), ref);
    }
  }
}

TEST(KWise, BuildErrors) {
  EXPECT_THROW(KWiseFamily(7, 8, {0x00, 0x00, 0x00}), std::invalid_argument);
  EXPECT_THROW(KWiseFamily(7, 3, {0x00}), std::invalid_argument);
  EXPECT_THROW(KWiseFamily(7, 3, {0x00, 0x02}), std::invalid_argument);  // padding
  EXPECT_THROW(KWiseFamily(7, 0, {}), std::invalid_argument);
  EXPECT_THROW(KWiseFamily::FromHex(7, 3, "0g1"), std::invalid_argument);
  EXPECT_THROW(KWiseFamily::FromHex(7, 3, "zz01"), std::invalid_argument);
  EXPECT_NO_THROW(KWiseFamily(7, 3, {0xff, 0x01}));
}

TEST(KWise, SeedLengthIsOrderKLogN) {
  for (uint64_t n = 1; n < 5000; n = n * 3 + 1) {
    for (uint32_t k = 1; k <= std::min<uint64_t>(n, 40); k += 3) {
      const uint64_t log_n1 = std::bit_width(n);  // ceil(log2(n+1))
      EXPECT_LE(KWiseFamily::SeedBits(n, k), 2 * k * log_n1);
      EXPECT_GE(uint64_t{1} << KWiseFamily::FieldBits(n), n);
    }
  }
}

TEST(KWise, HexRoundTrip) {
  Rng rng(9);
  const auto f = KWiseFamily::Random(1000, 17, rng);
  const auto g = KWiseFamily::FromHex(1000, 17, f.SeedHex());
  for (uint64_t j = 0; j < 1000; ++j) ASSERT_EQ(f.EvalElement(j), g.EvalElement(j));
}

TEST(KWise, ZeroSeedGivesZeroBits) {
  const KWiseFamily f(100, 5, std::vector<uint8_t>(5, 0));
  for (uint64_t j = 0; j < 100; ++j) EXPECT_FALSE(f.EvalBit(j));
}

TEST(KWise, OddConstantGivesOneBits) {
  // m = 7; only coefficient 0 nonzero and odd.
  std::vector<uint8_t> seed((7 * 5 + 7) / 8, 0);
  seed[0] = 0x05;
  const KWiseFamily f(100, 5, seed);
  for (uint64_t j = 0; j < 100; ++j) EXPECT_TRUE(f.EvalBit(j));
}

TEST(KWise, Deterministic) {
  Rng rng(2);
  const auto f = KWiseFamily::Random(1 << 22, 9, rng);
  for (uint64_t j : {0ull, 1ull, 77ull, (1ull << 22) - 1}) {
    EXPECT_EQ(f.EvalElement(j), f.EvalElement(j));
  }
  EXPECT_THROW(f.EvalElement(1 << 22), std::out_of_range);
}

TEST(KWise, SlowAndTablePathsAgree) {
  // n above 2^20 uses MulSlow; compare against the reference Horner loop.
  Rng rng(3);
  const auto f = KWiseFamily::Random(uint64_t{1} << 24, 6, rng);
  std::vector<uint64_t> coeff(6, 0);
  for (uint32_t t = 0; t < 6; ++t) {
    for (int b = 0; b < 24; ++b) {
      const uint64_t i = uint64_t{t} * 24 + b;
      coeff[t] |= uint64_t{(f.seed()[i / 8] >> (i % 8)) & 1u} << b;
    }
  }
  for (int rep = 0; rep < 1000; ++rep) {
    const uint64_t j = rng() & ((1 << 24) - 1);
    uint64_t r = 0;
    for (int t = 5; t >= 0; --t) r = ClmulMod(r, j, FieldModulus(24), 24) ^ coeff[t];
    ASSERT_EQ(f.EvalElement(j), r);
  }
}

TEST(KWise, SymbolAlphabets) {
  EXPECT_EQ(KWiseFamily::SymbolStride(8), 3u);
  EXPECT_EQ(KWiseFamily::SymbolStride(6), 3u * KWiseFamily::kRejectionRounds);
  Rng rng(4);
  const auto f = KWiseFamily::Random(4096, 8, rng);
  for (uint64_t j = 0; j < 4096; ++j) EXPECT_EQ(f.EvalSymbol(j, 2), f.EvalBit(j) ? 1u : 0u);
  for (uint64_t j = 0; j < 4096 / 3; ++j) {
    uint32_t w = 0;
    for (int i = 0; i < 3; ++i) w |= uint32_t{f.EvalBit(3 * j + i)} << i;
    EXPECT_EQ(f.EvalSymbol(j, 8), w);
  }
}

TEST(KWise, RejectionSkipsWordsSixAndSeven) {
  Rng rng(5);
  const auto f = KWiseFamily::Random(4096, 8, rng);
  const uint64_t stride = KWiseFamily::SymbolStride(6);
  for (uint64_t j = 0; j < 4096 / stride; ++j) {
    uint32_t expect = 0;
    for (uint32_t r = 0; r < KWiseFamily::kRejectionRounds; ++r) {
      uint32_t w = 0;
      for (int i = 0; i < 3; ++i) w |= uint32_t{f.EvalBit(j * stride + 3 * r + i)} << i;
      expect = w;
      if (w < 6) break;
    }
    EXPECT_EQ(f.EvalSymbol(j, 6), expect % 6);
  }
}

TEST(KWise, SymbolsUniformOnSixOverSeeds) {
  // 6 of 8 words accepted per round; marginal stays uniform.
  Rng rng(6);
  std::vector<uint64_t> tally(6, 0);
  const int reps = 60000;
  for (int rep = 0; rep < reps; ++rep) {
    const auto f = KWiseFamily::Random(256, 4, rng);
    ++tally[f.EvalSymbol(1, 6)];
  }
  const double p = 1.0 / 6, sd = std::sqrt(reps * p * (1 - p));
  for (uint64_t c : tally) EXPECT_NEAR(static_cast<double>(c), reps * p, 4 * sd);
}

TEST(KWise, ExhaustiveUniformity) {
  EXPECT_TRUE(VerifyKWiseExhaustive(7, 3));
  EXPECT_TRUE(VerifyKWiseExhaustive(8, 2));
  EXPECT_TRUE(VerifyKWiseExhaustive(12, 4));
  EXPECT_TRUE(VerifyKWiseExhaustive(2, 2));
  EXPECT_TRUE(VerifyKWiseExhaustive(7, 1));
}

TEST(KWise, SevenThreeNotFourWise) {
  EXPECT_FALSE(VerifyKWiseExhaustive(7, 3, 4));
}

TEST(KWise, FourFourJointOutcomesByDirectTally) {
  const uint64_t bits = KWiseFamily::SeedBits(4, 4);
  std::map<uint32_t, uint64_t> tally;
  for (uint64_t s = 0; s < (uint64_t{1} << bits); ++s) {
    const KWiseFamily f(4, 4, {static_cast<uint8_t>(s)});
    uint32_t pattern = 0;
    for (uint32_t j = 0; j < 4; ++j) pattern |= uint32_t{f.EvalBit(j)} << j;
    ++tally[pattern];
  }
  ASSERT_EQ(tally.size(), 16u);
  for (const auto& [pattern, c] : tally) EXPECT_EQ(c, (uint64_t{1} << bits) / 16);
}

TEST(KWise, KOneMarginalsUniformButPairsCorrelated) {
  // k = 1: every variable equals the constant coefficient.
  EXPECT_TRUE(VerifyKWiseExhaustive(8, 1, 1));
  EXPECT_FALSE(VerifyKWiseExhaustive(8, 1, 2));
}

TEST(KWise, EnumerationCap) {
  EXPECT_THROW(VerifyKWiseExhaustive(64, 5), SizeCapError);
}

}  // namespace
}  // namespace bdprop
