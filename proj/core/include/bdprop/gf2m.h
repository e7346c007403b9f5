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

#ifndef BDPROP_GF2M_H_
#define BDPROP_GF2M_H_

#include <cstdint>
#include <vector>

namespace bdprop {

inline constexpr int kMaxFieldBits = 32;

// Modulus of GF(2^m) for m in [1, 32], bit m set. Each entry is the
// lexicographically smallest primitive trinomial, or pentanomial when no
// primitive trinomial exists, so that x generates the multiplicative group.
uint64_t FieldModulus(int m);

// Arithmetic in GF(2^m). Elements are the low m bits of a uint64_t.
class Gf2m {
 public:
  explicit Gf2m(int m);

  int m() const { return m_; }
  uint64_t modulus() const { return poly_; }
  uint64_t order() const { return uint64_t{1} << m_; }

  // Carry-less shift-and-add with reduction after every shift.
  uint64_t MulSlow(uint64_t a, uint64_t b) const;

  // Log/antilog tables when m is small enough, else MulSlow.
  uint64_t Mul(uint64_t a, uint64_t b) const;

  bool has_tables() const { return tables_ != nullptr; }
  // Valid only when has_tables(); a must be nonzero.
  uint32_t Log(uint64_t a) const { return tables_->log[a]; }
  uint64_t MulByLog(uint64_t a, uint32_t log_b) const {
    return a == 0 ? 0 : tables_->exp[tables_->log[a] + log_b];
  }

 private:
  struct Tables {
    std::vector<uint32_t> log;  // log[0] unused
    std::vector<uint32_t> exp;  // length 2*(2^m - 1)
  };
  Gf2m(int m, bool with_tables);
  static const Tables* TablesFor(int m);

  int m_;
  uint64_t poly_;
  const Tables* tables_ = nullptr;
};

}  // namespace bdprop

#endif  // BDPROP_GF2M_H_
