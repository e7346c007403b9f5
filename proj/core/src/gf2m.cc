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

#include "bdprop/gf2m.h"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bdprop {
namespace {

constexpr std::array<uint64_t, kMaxFieldBits + 1> kModuli = {
    0x0,        0x3,        0x7,         0xb,        0x13,       0x25,
    0x43,       0x83,       0x11d,       0x211,      0x409,      0x805,
    0x1053,     0x201b,     0x402b,      0x8003,     0x1002d,    0x20009,
    0x40081,    0x80027,    0x100009,    0x200005,   0x400003,   0x800021,
    0x100001b,  0x2000009,  0x4000047,   0x8000027,  0x10000009, 0x20000005,
    0x40000053, 0x80000009, 0x1000000c5,
};

// 2^20 entries per table; larger fields use the slow path.
constexpr int kMaxTableBits = 20;

}  // namespace

uint64_t FieldModulus(int m) {
  if (m < 1 || m > kMaxFieldBits) {
    throw std::out_of_range("GF(2^m): m=" + std::to_string(m) +
                            " outside [1, 32]");
  }
  return kModuli[m];
}

Gf2m::Gf2m(int m) : Gf2m(m, true) {}

Gf2m::Gf2m(int m, bool with_tables) : m_(m), poly_(FieldModulus(m)) {
  if (with_tables && m_ <= kMaxTableBits) tables_ = TablesFor(m_);
}

uint64_t Gf2m::MulSlow(uint64_t a, uint64_t b) const {
  const uint64_t top = uint64_t{1} << m_;
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly_;
  }
  return r;
}

uint64_t Gf2m::Mul(uint64_t a, uint64_t b) const {
  if (!tables_) return MulSlow(a, b);
  if (a == 0 || b == 0) return 0;
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}

const Gf2m::Tables* Gf2m::TablesFor(int m) {
  static std::array<std::unique_ptr<Tables>, kMaxTableBits + 1> cache;
  static std::array<std::once_flag, kMaxTableBits + 1> once;
  std::call_once(once[m], [m] {
    const Gf2m slow(m, /*with_tables=*/false);
    auto t = std::make_unique<Tables>();
    const uint64_t group = (uint64_t{1} << m) - 1;
    t->log.assign(group + 1, 0);
    t->exp.assign(2 * group, 0);
    // x generates the group for the primitive moduli above (for m = 1 the
    // group is trivial and x reduces to 1).
    const uint64_t gen = m == 1 ? 1 : 2;
    uint64_t e = 1;
    for (uint64_t i = 0; i < group; ++i) {
      t->exp[i] = static_cast<uint32_t>(e);
      t->exp[i + group] = static_cast<uint32_t>(e);
      t->log[e] = static_cast<uint32_t>(i);
      e = slow.MulSlow(e, gen);
    }
    cache[m] = std::move(t);
  });
  return cache[m].get();
}

}  // namespace bdprop
