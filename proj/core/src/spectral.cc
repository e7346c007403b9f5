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

#include <Eigen/Dense>

#include "bdprop/hard_instances.h"

namespace bdprop {

SpectralCertificate SpectralExpansion(const BoundedDegreeGraph& g) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.num_vertices());
  SpectralCertificate out;
  if (n < 2) return out;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) {
    for (auto* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
      adj(v, *p) += 1.0;
    }
  }
  Eigen::MatrixXd lap = -adj;
  for (Eigen::Index v = 0; v < n; ++v) lap(v, v) += adj.row(v).sum();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_lap(lap, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_adj(adj, Eigen::EigenvaluesOnly);
  // Eigenvalues come back in increasing order.
  out.lambda2_laplacian = std::max(0.0, es_lap.eigenvalues()(1));
  out.lambda2_adjacency = es_adj.eigenvalues()(n - 2);
  const uint32_t d = std::max<uint32_t>(g.degree_bound(), 1);
  out.expansion_lower_bound = out.lambda2_laplacian / (2.0 * d);
  return out;
}

}  // namespace bdprop
