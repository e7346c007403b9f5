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

#include "bdprop/lowerbound/faulhaber.h"

#include <vector>

namespace bdprop::lb {
namespace {

BigInt Binom(uint32_t n, uint32_t k) {
  BigInt r = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

Rational Bernoulli(uint32_t n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 gives the B_1 = -1/2 sequence.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (uint32_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (uint32_t j = 0; j < m; ++j) acc += Rational(Binom(m + 1, j)) * b[j];
    b[m] = -acc / Rational(m + 1);
  }
  return n == 1 ? -b[1] : b[n];
}

Poly1 PowerSumPolynomial(uint32_t a) {
  std::vector<Rational> c(a + 2, 0);
  for (uint32_t j = 0; j <= a; ++j) {
    c[a + 1 - j] = Rational(Binom(a + 1, j)) * Bernoulli(j) / Rational(a + 1);
  }
  return Poly1(std::move(c));
}

Poly1 FaulhaberOdd(uint32_t a) {
  const Poly1 p = PowerSumPolynomial(a);
  const Rational two_a = Rational(BigInt(1) << a);
  return p.ScaleArgument(2) - p * two_a;
}

}  // namespace bdprop::lb
