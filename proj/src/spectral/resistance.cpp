// Copyright 2026 The WalkNN Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walknn/spectral/resistance.hpp"

#include <limits>

#include "walknn/common.hpp"
#include "walknn/spectral/laplacian.hpp"

namespace walknn::spectral {

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const double lmax = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
    const double cutoff = 1e-10 * lmax;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) > cutoff) inv(i) = 1.0 / lambda(i);
    }
    const Eigen::MatrixXd& q = solver.eigenvectors();
    return q * inv.asDiagonal() * q.transpose();
}

double effective_resistance(const UndirectedWeightedGraph& g, std::size_t u, std::size_t v) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw GraphError("vertex out of range");
    if (u == v) return 0.0;
    const auto labels = g.component_labels();
    if (labels[u] != labels[v]) return std::numeric_limits<double>::infinity();
    const Eigen::MatrixXd lp = pseudo_inverse(laplacian(g));
    const auto a = static_cast<Eigen::Index>(u);
    const auto b = static_cast<Eigen::Index>(v);
    return lp(a, a) + lp(b, b) - 2.0 * lp(a, b);
}

Eigen::MatrixXd resistance_matrix(const UndirectedWeightedGraph& g) {
    if (!g.is_connected()) throw GraphError("resistance_matrix: graph is disconnected");
    const Eigen::MatrixXd lp = pseudo_inverse(laplacian(g));
    const Eigen::Index n = lp.rows();
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = i == j ? 0.0 : lp(i, i) + lp(j, j) - 2.0 * lp(i, j);
    }
    return r;
}

}  // namespace walknn::spectral
