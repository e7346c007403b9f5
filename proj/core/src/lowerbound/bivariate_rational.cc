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

#include "bdprop/lowerbound/bivariate_rational.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bdprop::lb {

OddFactors OddFactors::Chain(uint32_t d) {
  OddFactors f;
  for (uint32_t j = 1; j <= d; ++j) f.Add(2 * j - 1);
  return f;
}

void OddFactors::Add(uint32_t k, uint32_t mult) {
  if (k % 2 == 0) throw std::invalid_argument("OddFactors: multiplier must be odd");
  if (mult) f_[k] += mult;
}

uint32_t OddFactors::multiplicity(uint32_t k) const {
  auto it = f_.find(k);
  return it == f_.end() ? 0 : it->second;
}

uint32_t OddFactors::degree() const {
  uint32_t d = 0;
  for (const auto& [k, t] : f_) d += t;
  return d;
}

OddFactors OddFactors::operator+(const OddFactors& o) const {
  OddFactors r = *this;
  for (const auto& [k, t] : o.f_) r.f_[k] += t;
  return r;
}

bool OddFactors::Contains(const OddFactors& o) const {
  for (const auto& [k, t] : o.f_) {
    if (multiplicity(k) < t) return false;
  }
  return true;
}

OddFactors OddFactors::operator-(const OddFactors& o) const {
  if (!Contains(o)) throw std::invalid_argument("OddFactors: difference of non-subset");
  OddFactors r = *this;
  for (const auto& [k, t] : o.f_) {
    auto it = r.f_.find(k);
    it->second -= t;
    if (it->second == 0) r.f_.erase(it);
  }
  return r;
}

OddFactors OddFactors::Lcm(const OddFactors& a, const OddFactors& b) {
  OddFactors r = a;
  for (const auto& [k, t] : b.f_) r.f_[k] = std::max(r.multiplicity(k), t);
  return r;
}

Poly2 OddFactors::Expand() const {
  Poly2 p = Poly2::Constant(1);
  for (const auto& [k, t] : f_) {
    const Poly2 lin = Poly2::LinearFactor(k);
    for (uint32_t i = 0; i < t; ++i) p = p * lin;
  }
  return p;
}

Rational OddFactors::Eval(const Rational& M, const Rational& l) const {
  Rational r = 1;
  for (const auto& [k, t] : f_) {
    const Rational x = M - Rational(k) * l;
    for (uint32_t i = 0; i < t; ++i) r *= x;
  }
  return r;
}

std::string OddFactors::ToString() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : f_) {
    if (!first) os << ' ';
    os << "(M-" << k << "l)^" << t;
    first = false;
  }
  return os.str();
}

BivariateRational BivariateRational::OverDenominator(const OddFactors& target) const {
  return BivariateRational(num_ * (target - den_).Expand(), target);
}

BivariateRational BivariateRational::operator+(const BivariateRational& o) const {
  const OddFactors common = OddFactors::Lcm(den_, o.den_);
  return BivariateRational(
      OverDenominator(common).num_ + o.OverDenominator(common).num_, common);
}

BivariateRational BivariateRational::operator-(const BivariateRational& o) const {
  return *this + o * Rational(-1);
}

BivariateRational BivariateRational::operator*(const BivariateRational& o) const {
  return BivariateRational(num_ * o.num_, den_ + o.den_);
}

BivariateRational BivariateRational::operator*(const Rational& c) const {
  return BivariateRational(num_ * c, den_);
}

Rational BivariateRational::Eval(const Rational& M, const Rational& l) const {
  const Rational den = den_.Eval(M, l);
  if (den == 0) {
    throw std::domain_error("BivariateRational: denominator vanishes at this (M, l)");
  }
  return num_.Eval(M, l) / den;
}

bool BivariateRational::Equals(const BivariateRational& o) const {
  const OddFactors common = OddFactors::Lcm(den_, o.den_);
  return OverDenominator(common).num_ == o.OverDenominator(common).num_;
}

std::string BivariateRational::ToString() const {
  return "[" + num_.ToString() + "] / [" + den_.ToString() + "]";
}

BivariateRational RFactor(uint32_t d) {
  return BivariateRational(Poly2::Term(1, 0, d), OddFactors::Chain(d));
}

}  // namespace bdprop::lb
