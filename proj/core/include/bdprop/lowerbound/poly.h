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

#ifndef BDPROP_LOWERBOUND_POLY_H_
#define BDPROP_LOWERBOUND_POLY_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdprop::lb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial; coeff[i] multiplies s^i. Trailing zeros are
// trimmed so the zero polynomial has no coefficients.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeff);
  static Poly1 Monomial(Rational c, uint32_t power);

  const std::vector<Rational>& coeff() const { return coeff_; }
  Rational coeff(uint32_t i) const { return i < coeff_.size() ? coeff_[i] : Rational(0); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }

  Rational Eval(const Rational& s) const;
  // p(c * s)
  Poly1 ScaleArgument(const Rational& c) const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator*(const Rational& c) const;
  bool operator==(const Poly1& o) const { return coeff_ == o.coeff_; }

  std::string ToString(const std::string& var = "s") const;

 private:
  void Trim();
  std::vector<Rational> coeff_;
};

// Sparse polynomial in (M, l); key (i, j) is the coefficient of M^i l^j.
class Poly2 {
 public:
  using Key = std::pair<uint32_t, uint32_t>;

  Poly2() = default;
  static Poly2 Constant(Rational c);
  static Poly2 Term(Rational c, uint32_t m_power, uint32_t l_power);
  // M - k l
  static Poly2 LinearFactor(uint32_t k);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  // Smallest l-exponent over the terms; the polynomial is divisible by
  // l^e exactly when e <= min_l_power(). Zero polynomial: UINT32_MAX.
  uint32_t min_l_power() const;

  Rational Eval(const Rational& M, const Rational& l) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rational& c) const;
  Poly2& operator+=(const Poly2& o);
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

  // Multiplies by l^e (e may be negative only when every term has enough l).
  Poly2 ShiftL(int e) const;

  std::string ToString() const;

 private:
  void Add(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_POLY_H_
