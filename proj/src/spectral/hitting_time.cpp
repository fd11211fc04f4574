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

#include "walknn/spectral/hitting_time.hpp"

#include "walknn/common.hpp"
#include "walknn/spectral/laplacian.hpp"
#include "walknn/spectral/resistance.hpp"

namespace walknn::spectral {

namespace {

Eigen::VectorXd full_degrees(const UndirectedWeightedGraph& g) {
    const auto d = g.degrees();
    return Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
}

Eigen::MatrixXd direct(const UndirectedWeightedGraph& g) {
    // deg(u) h(u) - sum_{z != u} w(u,z) h(z) - loop(u) h(u) = deg(u), i.e. the
    // loop-free Laplacian with the target's row and column removed.
    const Eigen::MatrixXd l = laplacian(g);
    const Eigen::VectorXd deg = full_degrees(g);
    const Eigen::Index n = l.rows();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    if (n < 2) return h;
    Eigen::MatrixXd minor(n - 1, n - 1);
    Eigen::VectorXd rhs(n - 1);
    for (Eigen::Index v = 0; v < n; ++v) {
        for (Eigen::Index i = 0, a = 0; i < n; ++i) {
            if (i == v) continue;
            rhs(a) = deg(i);
            for (Eigen::Index j = 0, b = 0; j < n; ++j) {
                if (j == v) continue;
                minor(a, b++) = l(i, j);
            }
            ++a;
        }
        const Eigen::VectorXd x = minor.ldlt().solve(rhs);
        for (Eigen::Index i = 0, a = 0; i < n; ++i) {
            if (i != v) h(i, v) = x(a++);
        }
    }
    return h;
}

Eigen::MatrixXd tetali(const UndirectedWeightedGraph& g) {
    const Eigen::MatrixXd r = resistance_matrix(g);
    const Eigen::VectorXd deg = full_degrees(g);
    const Eigen::Index n = r.rows();
    const double total = deg.sum();
    // sum_z deg(z) R(v,z) and sum_z deg(z) R(u,z) as vectors.
    const Eigen::VectorXd weighted = r * deg;
    Eigen::MatrixXd h(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = 0; v < n; ++v) {
            h(u, v) = u == v ? 0.0 : 0.5 * (total * r(u, v) + weighted(v) - weighted(u));
        }
    }
    return h;
}

}  // namespace

Eigen::MatrixXd hitting_times(const UndirectedWeightedGraph& g, HittingMethod method) {
    if (!g.is_connected()) throw GraphError("hitting_times: graph is disconnected");
    return method == HittingMethod::direct ? direct(g) : tetali(g);
}

}  // namespace walknn::spectral
