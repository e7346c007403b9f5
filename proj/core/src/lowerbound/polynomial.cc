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

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bdprop/lowerbound/poly.h"

namespace bdprop::lb {

Poly1::Poly1(std::vector<Rational> coeff) : coeff_(std::move(coeff)) { Trim(); }

Poly1 Poly1::Monomial(Rational c, uint32_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return Poly1(std::move(v));
}

void Poly1::Trim() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Rational Poly1::Eval(const Rational& s) const {
  Rational r = 0;
  for (size_t i = coeff_.size(); i-- > 0;) r = r * s + coeff_[i];
  return r;
}

Poly1 Poly1::ScaleArgument(const Rational& c) const {
  std::vector<Rational> v(coeff_);
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return Poly1(std::move(v));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Rational> v(std::max(coeff_.size(), o.coeff_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Poly1(std::move(v));
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + o * Rational(-1); }

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Rational> v(coeff_.size() + o.coeff_.size() - 1);
  for (size_t i = 0; i < coeff_.size(); ++i) {
    for (size_t j = 0; j < o.coeff_.size(); ++j) v[i + j] += coeff_[i] * o.coeff_[j];
  }
  return Poly1(std::move(v));
}

Poly1 Poly1::operator*(const Rational& c) const {
  std::vector<Rational> v(coeff_);
  for (auto& x : v) x *= c;
  return Poly1(std::move(v));
}

std::string Poly1::ToString(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeff_.size(); i-- > 0;) {
    if (coeff_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeff_[i] << ")";
    if (i > 0) os << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

Poly2 Poly2::Constant(Rational c) { return Term(std::move(c), 0, 0); }

Poly2 Poly2::Term(Rational c, uint32_t m_power, uint32_t l_power) {
  Poly2 p;
  p.Add({m_power, l_power}, c);
  return p;
}

Poly2 Poly2::LinearFactor(uint32_t k) {
  Poly2 p = Term(1, 1, 0);
  p.Add({0, 1}, Rational(-static_cast<int64_t>(k)));
  return p;
}

void Poly2::Add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first + k.second));
  return d;
}

uint32_t Poly2::min_l_power() const {
  uint32_t e = std::numeric_limits<uint32_t>::max();
  for (const auto& [k, c] : terms_) e = std::min(e, k.second);
  return e;
}

Rational Poly2::Eval(const Rational& M, const Rational& l) const {
  Rational r = 0;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (uint32_t i = 0; i < k.first; ++i) t *= M;
    for (uint32_t i = 0; i < k.second; ++i) t *= l;
    r += t;
  }
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 p = *this;
  p += o;
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [k, c] : o.terms_) Add(k, c);
  return *this;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o * Rational(-1); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 p;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      p.Add({a.first + b.first, a.second + b.second}, ca * cb);
    }
  }
  return p;
}

Poly2 Poly2::operator*(const Rational& c) const {
  Poly2 p;
  if (c == 0) return p;
  for (const auto& [k, v] : terms_) p.terms_.emplace(k, v * c);
  return p;
}

Poly2 Poly2::ShiftL(int e) const {
  Poly2 p;
  for (const auto& [k, c] : terms_) {
    const int64_t ne = static_cast<int64_t>(k.second) + e;
    if (ne < 0) throw std::domain_error("Poly2::ShiftL: not divisible by l^" + std::to_string(-e));
    p.terms_.emplace(Key{k.first, static_cast<uint32_t>(ne)}, c);
  }
  return p;
}

std::string Poly2::ToString() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (k.first) os << "*M^" << k.first;
    if (k.second) os << "*l^" << k.second;
    first = false;
  }
  return os.str();
}

}  // namespace bdprop::lb
