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

#include "walknn/spectral/laplacian.hpp"

namespace walknn::spectral {

Eigen::MatrixXd laplacian(const UndirectedWeightedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const WeightedEdge& e : g.edges()) {
        if (e.u == e.v) continue;
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        l(u, u) += e.weight;
        l(v, v) += e.weight;
        l(u, v) -= e.weight;
        l(v, u) -= e.weight;
    }
    return l;
}

namespace {

Eigen::Index non_loop_edges(const UndirectedWeightedGraph& g) {
    Eigen::Index m = 0;
    for (const WeightedEdge& e : g.edges()) m += e.u != e.v;
    return m;
}

}  // namespace

Eigen::MatrixXd incidence(const UndirectedWeightedGraph& g) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(non_loop_edges(g), static_cast<Eigen::Index>(g.vertex_count()));
    Eigen::Index row = 0;
    for (const WeightedEdge& e : g.edges()) {
        if (e.u == e.v) continue;
        b(row, static_cast<Eigen::Index>(e.u)) = 1.0;
        b(row, static_cast<Eigen::Index>(e.v)) = -1.0;
        ++row;
    }
    return b;
}

Eigen::VectorXd edge_weights(const UndirectedWeightedGraph& g) {
    Eigen::VectorXd w(non_loop_edges(g));
    Eigen::Index row = 0;
    for (const WeightedEdge& e : g.edges()) {
        if (e.u != e.v) w(row++) = e.weight;
    }
    return w;
}

Eigen::MatrixXd laplacian_factored(const UndirectedWeightedGraph& g) {
    const Eigen::MatrixXd b = incidence(g);
    const Eigen::VectorXd w = edge_weights(g);
    return b.transpose() * w.asDiagonal() * b;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace walknn::spectral
