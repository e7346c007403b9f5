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

#ifndef BDPROP_LOWERBOUND_FAULHABER_H_
#define BDPROP_LOWERBOUND_FAULHABER_H_

#include <cstdint>

#include "bdprop/lowerbound/poly.h"

namespace bdprop::lb {

// B_n with the B_1 = +1/2 convention.
Rational Bernoulli(uint32_t n);

// P_a(n) = 1^a + 2^a + ... + n^a as a polynomial in n.
Poly1 PowerSumPolynomial(uint32_t a);

// Q_a(s) = P_a(2s) - 2^a P_a(s), the sum of the a-th powers of the first s
// odd numbers. Degree a+1, zero constant term.
Poly1 FaulhaberOdd(uint32_t a);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_FAULHABER_H_
