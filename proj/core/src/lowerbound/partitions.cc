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

#include "bdprop/lowerbound/partitions.h"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "bdprop/graph.h"

namespace bdprop::lb {

SetPartition::SetPartition(const std::vector<uint32_t>& labels) {
  std::map<uint32_t, uint32_t> remap;
  block_.reserve(labels.size());
  for (uint32_t x : labels) {
    auto [it, inserted] = remap.emplace(x, num_classes_);
    if (inserted) ++num_classes_;
    block_.push_back(it->second);
  }
}

SetPartition SetPartition::Finest(uint32_t k) {
  std::vector<uint32_t> v(k);
  for (uint32_t i = 0; i < k; ++i) v[i] = i;
  return SetPartition(v);
}

SetPartition SetPartition::Coarsest(uint32_t k) {
  return SetPartition(std::vector<uint32_t>(k, 0));
}

std::vector<std::vector<uint32_t>> SetPartition::classes() const {
  std::vector<std::vector<uint32_t>> out(num_classes_);
  for (uint32_t i = 0; i < block_.size(); ++i) out[block_[i]].push_back(i);
  return out;
}

bool SetPartition::Refines(const SetPartition& other) const {
  if (other.k() != k()) return false;
  std::vector<int64_t> image(num_classes_, -1);
  for (uint32_t i = 0; i < block_.size(); ++i) {
    int64_t& img = image[block_[i]];
    if (img < 0) {
      img = other.block_[i];
    } else if (img != other.block_[i]) {
      return false;
    }
  }
  return true;
}

SetPartition SetPartition::Quotient(const SetPartition& other) const {
  std::vector<uint32_t> labels(num_classes_);
  for (uint32_t i = 0; i < block_.size(); ++i) labels[block_[i]] = other.block_[i];
  return SetPartition(labels);
}

std::string SetPartition::ToString() const {
  std::ostringstream os;
  for (const auto& cls : classes()) {
    os << '{';
    for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
    os << '}';
  }
  return os.str();
}

uint64_t BellNumber(uint32_t k) {
  // Bell triangle.
  std::vector<uint64_t> row{1};
  for (uint32_t i = 0; i < k; ++i) {
    std::vector<uint64_t> next{row.back()};
    for (uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<SetPartition> EnumeratePartitions(uint32_t k) {
  if (k > kMaxPartitionSize) {
    throw SizeCapError("partitions: k=" + std::to_string(k) + " exceeds cap " +
                       std::to_string(kMaxPartitionSize) + " (Bell(" +
                       std::to_string(k) + ")=" + std::to_string(BellNumber(k)) + ")");
  }
  std::vector<SetPartition> out;
  std::vector<uint32_t> rgs(k, 0);
  // Iterate restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  while (true) {
    out.emplace_back(rgs);
    int i = static_cast<int>(k) - 1;
    for (; i >= 1; --i) {
      uint32_t mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        for (uint32_t j = i + 1; j < k; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i < 1) break;
  }
  return out;
}

PartitionLattice::PartitionLattice(uint32_t k) : k_(k), parts_(EnumeratePartitions(k)) {}

size_t PartitionLattice::IndexOf(const SetPartition& p) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), p,
                             [](const SetPartition& a, const SetPartition& b) {
                               return a.rgs() < b.rgs();
                             });
  if (it == parts_.end() || it->rgs() != p.rgs()) {
    throw std::invalid_argument("partition not in lattice");
  }
  return static_cast<size_t>(it - parts_.begin());
}

const PartitionLattice& PartitionLattice::Get(uint32_t k) {
  if (k > kMaxPartitionSize) EnumeratePartitions(k);  // throws with Bell bound
  static std::array<std::unique_ptr<PartitionLattice>, kMaxPartitionSize + 1> cache;
  static std::array<std::once_flag, kMaxPartitionSize + 1> once;
  std::call_once(once[k], [k] { cache[k] = std::make_unique<PartitionLattice>(k); });
  return *cache[k];
}

const std::vector<int64_t>& ChainRow(uint32_t j) {
  static std::array<std::vector<int64_t>, kMaxPartitionSize + 1> rows;
  static std::array<std::once_flag, kMaxPartitionSize + 1> once;
  const PartitionLattice& lat = PartitionLattice::Get(j);
  std::call_once(once[j], [j, &lat] {
    const size_t n = lat.size();
    std::vector<int64_t> row(n, 0);
    // Process targets from finest upward (more classes first) so every
    // strictly finer partition is already done.
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return lat[a].size() > lat[b].size();
    });
    for (size_t target : order) {
      if (lat[target].size() == j) {
        row[target] = 1;  // the finest partition itself
        continue;
      }
      int64_t sum = 0;
      for (size_t q = 0; q < n; ++q) {
        if (q != target && lat[q].size() > lat[target].size() &&
            lat[q].Refines(lat[target])) {
          sum += row[q];
        }
      }
      row[target] = -sum;
    }
    rows[j] = std::move(row);
  });
  return rows[j];
}

int64_t ChainCoefficient(const SetPartition& L, const SetPartition& Lp) {
  if (L.k() != Lp.k()) throw std::invalid_argument("chain: partitions of different sets");
  if (!L.Refines(Lp)) return 0;
  if (L == Lp) return 1;
  const SetPartition q = L.Quotient(Lp);
  const PartitionLattice& lat = PartitionLattice::Get(L.size());
  return ChainRow(L.size())[lat.IndexOf(q)];
}

bool VerifyPropPart(uint32_t k) {
  const PartitionLattice& lat = PartitionLattice::Get(k);
  const size_t n = lat.size();
  // c[a][b] for a <= b.
  std::vector<std::vector<int64_t>> c(n, std::vector<int64_t>(n, 0));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) c[a][b] = ChainCoefficient(lat[a], lat[b]);
  }
  for (size_t lo = 0; lo < n; ++lo) {
    for (size_t hi = 0; hi < n; ++hi) {
      if (lo == hi || !lat[lo].Refines(lat[hi])) continue;
      int64_t sum = 0;
      for (size_t mid = 0; mid < n; ++mid) {
        if (lat[lo].Refines(lat[mid]) && lat[mid].Refines(lat[hi])) sum += c[mid][hi];
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace bdprop::lb
