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

#include "bdprop/lowerbound/monomial.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bdprop::lb {

Monomial::Monomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.u == t.v) throw std::invalid_argument("monomial: term with u == v");
    if (t.j == 0) throw std::invalid_argument("monomial: matching index is 1-based");
    if (t.u > t.v) std::swap(t.u, t.v);
  }
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

std::vector<uint32_t> Monomial::vertices() const {
  std::vector<uint32_t> out;
  for (const auto& t : terms_) {
    out.push_back(t.u);
    out.push_back(t.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

uint32_t Monomial::max_matching() const {
  uint32_t c = 0;
  for (const auto& t : terms_) c = std::max(c, t.j);
  return c;
}

bool Monomial::IsMatchingConsistent() const {
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> mate;  // (vertex, j) -> partner
  for (const auto& t : terms_) {
    for (auto [a, b] : {std::pair{t.u, t.v}, std::pair{t.v, t.u}}) {
      auto [it, inserted] = mate.emplace(std::pair{a, t.j}, b);
      if (!inserted && it->second != b) return false;
    }
  }
  return true;
}

std::string Monomial::ToString() const {
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ' ';
    os << "x(" << terms_[i].u << ',' << terms_[i].v << ';' << terms_[i].j << ')';
  }
  return terms_.empty() ? "1" : os.str();
}

uint32_t ComponentProfile::total_vertices() const {
  return std::accumulate(v.begin(), v.end(), 0u);
}

uint32_t ComponentProfile::total_edges() const {
  uint32_t s = 0;
  for (const auto& row : d) s = std::accumulate(row.begin(), row.end(), s);
  return s;
}

ComponentProfile ComponentProfileOf(const Monomial& p) {
  const auto verts = p.vertices();
  std::map<uint32_t, uint32_t> index;
  for (uint32_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::vector<uint32_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& t : p.terms()) {
    uint32_t a = find(index[t.u]), b = find(index[t.v]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ComponentProfile prof;
  prof.c = p.max_matching();
  std::map<uint32_t, uint32_t> comp_of_root;  // roots visited in label order
  for (uint32_t i = 0; i < verts.size(); ++i) {
    const uint32_t r = find(i);
    auto [it, inserted] = comp_of_root.emplace(r, prof.k);
    if (inserted) {
      ++prof.k;
      prof.members.emplace_back();
    }
    prof.members[it->second].push_back(verts[i]);
  }
  prof.v.resize(prof.k);
  for (uint32_t i = 0; i < prof.k; ++i) prof.v[i] = static_cast<uint32_t>(prof.members[i].size());
  prof.d.assign(prof.k, std::vector<uint32_t>(prof.c, 0));
  for (const auto& t : p.terms()) ++prof.d[comp_of_root[find(index[t.u])]][t.j - 1];
  return prof;
}

ComponentProfile ProfileFromMatrix(const std::vector<std::vector<uint32_t>>& d,
                                   std::vector<uint32_t> v) {
  ComponentProfile prof;
  prof.k = static_cast<uint32_t>(d.size());
  prof.c = d.empty() ? 0 : static_cast<uint32_t>(d[0].size());
  for (const auto& row : d) {
    if (row.size() != prof.c) throw std::invalid_argument("profile: ragged d-matrix");
  }
  prof.d = d;
  if (v.empty()) {
    for (const auto& row : d) v.push_back(std::accumulate(row.begin(), row.end(), 0u) + 1);
  }
  if (v.size() != prof.k) throw std::invalid_argument("profile: v has wrong length");
  prof.v = std::move(v);
  prof.members.resize(prof.k);
  return prof;
}

}  // namespace bdprop::lb
