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

#include "walknn/spectral/bound_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "walknn/common.hpp"
#include "walknn/spectral/expansion.hpp"
#include "walknn/spectral/hitting_time.hpp"
#include "walknn/spectral/laplacian.hpp"

namespace walknn::spectral {

namespace {

void require_same_vertices(const UndirectedWeightedGraph& g, const UndirectedWeightedGraph& h) {
    if (g.vertex_count() != h.vertex_count()) throw GraphError("bound check: vertex sets differ");
    if (!g.is_connected()) throw GraphError("bound check: source graph is disconnected");
}

}  // namespace

HittingBoundReport hitting_time_bound_check(const UndirectedWeightedGraph& g,
                                            const UndirectedWeightedGraph& g_prime) {
    require_same_vertices(g, g_prime);
    HittingBoundReport r;
    const Eigen::MatrixXd lg = laplacian(g);
    r.delta = (lg - laplacian(g_prime)).norm();
    r.phi = edge_expansion(g).phi;
    r.d_min = lg.diagonal().minCoeff();
    r.d_max = lg.diagonal().maxCoeff();
    r.total_weight = edge_weights(g).sum();
    const double gap = r.phi * r.phi / (2.0 * r.d_max) - r.delta;
    r.vacuous = !(gap > 0.0);
    r.prime_connected = g_prime.is_connected();
    if (r.vacuous || !r.prime_connected) return r;

    const Eigen::MatrixXd h = hitting_times(g, HittingMethod::direct);
    const Eigen::MatrixXd hp = hitting_times(g_prime, HittingMethod::direct);
    const double additive = 12.0 * r.delta / (gap * gap) * r.total_weight;
    r.lhs = (h - hp).cwiseAbs();
    r.rhs = (r.delta / r.d_min) * h;
    r.rhs.array() += additive;
    r.rhs.diagonal().setZero();
    r.min_margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index u = 0; u < h.rows(); ++u) {
        for (Eigen::Index v = 0; v < h.cols(); ++v) {
            if (u == v) continue;
            const double margin = r.rhs(u, v) - r.lhs(u, v);
            r.min_margin = std::min(r.min_margin, margin);
            if (margin < 0.0) ++r.violations;
        }
    }
    return r;
}

ClusterBoundReport single_cluster_bound_check(const UndirectedWeightedGraph& g,
                                              const UndirectedWeightedGraph& g_prime) {
    require_same_vertices(g, g_prime);
    ClusterBoundReport r;
    r.prime_connected = g_prime.is_connected();
    if (!r.prime_connected) return r;
    const Eigen::MatrixXd h = hitting_times(g, HittingMethod::direct);
    const Eigen::MatrixXd hp = hitting_times(g_prime, HittingMethod::direct);
    const auto n = static_cast<double>(g.vertex_count());
    for (Eigen::Index u = 0; u < h.rows(); ++u) {
        for (Eigen::Index v = 0; v < h.cols(); ++v) {
            if (u == v) continue;
            const double ratio = std::abs(h(u, v) - hp(u, v)) / std::sqrt(n * h(u, v));
            r.worst_ratio = std::max(r.worst_ratio, ratio);
            if (ratio > 1.0) ++r.violations;
        }
    }
    return r;
}

}  // namespace walknn::spectral
