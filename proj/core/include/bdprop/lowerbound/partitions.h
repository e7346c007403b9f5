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

#ifndef BDPROP_LOWERBOUND_PARTITIONS_H_
#define BDPROP_LOWERBOUND_PARTITIONS_H_

#include <cstdint>
#include <string>
#include <vector>

namespace bdprop::lb {

inline constexpr uint32_t kMaxPartitionSize = 8;

// Set partition of {0..k-1} as a restricted growth string: block[i] is the
// class of element i, classes numbered in order of first appearance.
class SetPartition {
 public:
  SetPartition() = default;
  // Normalizes any labelling into restricted-growth form.
  explicit SetPartition(const std::vector<uint32_t>& labels);

  static SetPartition Finest(uint32_t k);
  static SetPartition Coarsest(uint32_t k);

  uint32_t k() const { return static_cast<uint32_t>(block_.size()); }
  uint32_t size() const { return num_classes_; }  // |L|
  uint32_t block(uint32_t i) const { return block_[i]; }
  const std::vector<uint32_t>& rgs() const { return block_; }
  std::vector<std::vector<uint32_t>> classes() const;

  // this <= other: every class of this lies inside a class of other.
  bool Refines(const SetPartition& other) const;

  // The partition of this's classes induced by a coarser `other`.
  SetPartition Quotient(const SetPartition& other) const;

  std::string ToString() const;  // e.g. "{0,2}{1}"

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<uint32_t> block_;
  uint32_t num_classes_ = 0;
};

// All partitions of {0..k-1}, k <= 8, in lexicographic restricted-growth
// order, with index lookup.
class PartitionLattice {
 public:
  // Throws SizeCapError for k > 8, naming Bell(k).
  explicit PartitionLattice(uint32_t k);

  uint32_t k() const { return k_; }
  size_t size() const { return parts_.size(); }
  const SetPartition& operator[](size_t i) const { return parts_[i]; }
  const std::vector<SetPartition>& all() const { return parts_; }
  size_t IndexOf(const SetPartition& p) const;
  size_t finest() const { return IndexOf(SetPartition::Finest(k_)); }
  size_t coarsest() const { return 0; }

  // Shared instance per k.
  static const PartitionLattice& Get(uint32_t k);

 private:
  uint32_t k_;
  std::vector<SetPartition> parts_;
};

std::vector<SetPartition> EnumeratePartitions(uint32_t k);
uint64_t BellNumber(uint32_t k);

// Signed chain count from L up to Lp: 1 if equal, 0 if L is not a refinement
// of Lp, otherwise -sum_{L <= L1 < Lp} c(L, L1). Since the interval [L, Lp]
// is isomorphic to [finest, Lp/L] in the lattice on |L| points, the
// recursion is evaluated once per row (finest of size j) and memoized.
int64_t ChainCoefficient(const SetPartition& L, const SetPartition& Lp);

// The memoized row: c(finest_j, P) for every P in PartitionLattice::Get(j).
const std::vector<int64_t>& ChainRow(uint32_t j);

// sum_{L'' <= L' <= L} c(L', L) == 0 for every strict pair L'' < L.
bool VerifyPropPart(uint32_t k);

}  // namespace bdprop::lb

#endif  // BDPROP_LOWERBOUND_PARTITIONS_H_
