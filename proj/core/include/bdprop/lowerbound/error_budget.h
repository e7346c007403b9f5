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

#ifndef BDPROP_LOWERBOUND_ERROR_BUDGET_H_
#define BDPROP_LOWERBOUND_ERROR_BUDGET_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace bdprop::lb {

using Decimal = boost::multiprecision::cpp_dec_float_50;

struct ErrorBudget {
  double N = 0, T = 0, l = 0, delta = 0, a = 0;
  uint32_t k = 0;
  double c_exp = 0.1;
  uint64_t degree_cap = 0;   // D = ceil(2T H(2T))
  Decimal first_factor;      // e^{-4 T^2 l / N}
  Decimal second_factor;     // ((aN + delta^{3/2}) / (aN))^D
  Decimal failure_term;      // N^{2k} 2^k e^{-N^{0.75-2c}/3}

  // 30 significant digits.
  static std::string Render(const Decimal& x);
};

// H(n) = 1 + 1/2 + ... + 1/n; H(0) = 0.
Decimal Harmonic(uint64_t n);

// Requires N, a > 0 and T, l, delta >= 0; throws std::invalid_argument.
ErrorBudget ComputeErrorBudget(double N, double T, double l, double delta,
                               double a, uint32_t k, double c_exp = 0.1);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_ERROR_BUDGET_H_
