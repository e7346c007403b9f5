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

#include "bdprop/lowerbound/error_budget.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bdprop::lb {

std::string ErrorBudget::Render(const Decimal& x) {
  std::ostringstream os;
  os.precision(30);
  os << x;
  return os.str();
}

Decimal Harmonic(uint64_t n) {
  Decimal h = 0;
  for (uint64_t i = 1; i <= n; ++i) h += Decimal(1) / Decimal(i);
  return h;
}

ErrorBudget ComputeErrorBudget(double N, double T, double l, double delta,
                               double a, uint32_t k, double c_exp) {
  if (!(N > 0) || !(a > 0) || !(T >= 0) || !(l >= 0) || !(delta >= 0)) {
    throw std::invalid_argument("error budget: N, a > 0 and T, l, delta >= 0 required");
  }
  if (T != std::floor(T)) throw std::invalid_argument("error budget: T must be an integer");
  ErrorBudget b;
  b.N = N;
  b.T = T;
  b.l = l;
  b.delta = delta;
  b.a = a;
  b.k = k;
  b.c_exp = c_exp;
  const Decimal dn(N), dt(T), dl(l), dd(delta), da(a);
  b.first_factor = exp(-Decimal(4) * dt * dt * dl / dn);

  const uint64_t two_t = static_cast<uint64_t>(2 * T);
  const Decimal cap = Decimal(two_t) * Harmonic(two_t);
  b.degree_cap = static_cast<uint64_t>(ceil(cap - Decimal("1e-40")));
  const Decimal an = da * dn;
  b.second_factor = pow((an + pow(dd, Decimal(1.5))) / an, Decimal(b.degree_cap));

  const Decimal dk(k);
  b.failure_term = pow(dn, Decimal(2) * dk) * pow(Decimal(2), dk) *
                   exp(-pow(dn, Decimal(0.75) - Decimal(2) * Decimal(c_exp)) / Decimal(3));
  return b;
}

}  // namespace bdprop::lb
