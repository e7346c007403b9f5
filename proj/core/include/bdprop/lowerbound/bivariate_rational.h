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

#ifndef BDPROP_LOWERBOUND_BIVARIATE_RATIONAL_H_
#define BDPROP_LOWERBOUND_BIVARIATE_RATIONAL_H_

#include <cstdint>
#include <map>
#include <string>

#include "bdprop/lowerbound/poly.h"

namespace bdprop::lb {

// Multiset of odd multipliers k standing for prod (M - k l)^{mult}.
class OddFactors {
 public:
  OddFactors() = default;
  // {1, 3, ..., 2d-1}: the denominator of R_d.
  static OddFactors Chain(uint32_t d);

  void Add(uint32_t k, uint32_t mult = 1);
  uint32_t multiplicity(uint32_t k) const;
  uint32_t degree() const;
  const std::map<uint32_t, uint32_t>& factors() const { return f_; }

  OddFactors operator+(const OddFactors& o) const;  // multiset sum
  // Multiset difference; throws std::invalid_argument unless o is a subset.
  OddFactors operator-(const OddFactors& o) const;
  bool Contains(const OddFactors& o) const;
  static OddFactors Lcm(const OddFactors& a, const OddFactors& b);

  Poly2 Expand() const;
  Rational Eval(const Rational& M, const Rational& l) const;
  // "(M-1l)^2 (M-3l)^1"; "1" when empty.
  std::string ToString() const;

  bool operator==(const OddFactors&) const = default;
  bool operator<(const OddFactors& o) const { return f_ < o.f_; }

 private:
  std::map<uint32_t, uint32_t> f_;
};

// numerator / prod (M - k l)^{t_k}, denominator never expanded.
class BivariateRational {
 public:
  BivariateRational() = default;
  BivariateRational(Poly2 numerator, OddFactors denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  static BivariateRational Constant(Rational c) {
    return BivariateRational(Poly2::Constant(std::move(c)), {});
  }

  const Poly2& numerator() const { return num_; }
  const OddFactors& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Rewrites over a denominator that contains the current one.
  BivariateRational OverDenominator(const OddFactors& target) const;

  BivariateRational operator+(const BivariateRational& o) const;
  BivariateRational operator-(const BivariateRational& o) const;
  BivariateRational operator*(const BivariateRational& o) const;
  BivariateRational operator*(const Rational& c) const;
  BivariateRational ShiftL(int e) const { return {num_.ShiftL(e), den_}; }

  // Throws std::domain_error at a zero of the denominator.
  Rational Eval(const Rational& M, const Rational& l) const;
  // Cross-multiplied comparison (denominators may differ).
  bool Equals(const BivariateRational& o) const;

  std::string ToString() const;

 private:
  Poly2 num_;
  OddFactors den_;
};

// R_d = prod_{j=1..d} l / (M - (2j-1) l); R_0 = 1.
BivariateRational RFactor(uint32_t d);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_BIVARIATE_RATIONAL_H_
