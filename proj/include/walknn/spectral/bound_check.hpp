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

#pragma once

#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "walknn/graph/undirected_graph.hpp"

namespace walknn::spectral {

/// Hitting-time perturbation bound of a sparsifier G' against G:
///   |h_G(u,v) - h_G'(u,v)| <= delta / d_min * h_G(u,v)
///                             + 12 delta (phi^2 / (2 d_max) - delta)^-2 * sum_e w_e
/// with delta = ||L_G - L_G'||_F and phi, d_min, d_max, w taken from G. The
/// bound is vacuous once delta >= phi^2 / (2 d_max).
struct HittingBoundReport {
    bool vacuous = false;
    bool prime_connected = true;
    double delta = 0.0;
    double phi = 0.0;
    double d_min = 0.0;
    double d_max = 0.0;
    double total_weight = 0.0;
    /// |h_G - h_G'| and the right-hand side, per ordered pair.
    Eigen::MatrixXd lhs;
    Eigen::MatrixXd rhs;
    std::size_t violations = 0;
    /// min over pairs of rhs - lhs.
    double min_margin = 0.0;

    bool holds() const { return !vacuous && prime_connected && violations == 0; }
};

/// Requires a connected G with at most 24 vertices and a G' on the same
/// vertex set.
HittingBoundReport hitting_time_bound_check(const UndirectedWeightedGraph& g,
                                            const UndirectedWeightedGraph& g_prime);

struct ClusterBoundReport {
    bool prime_connected = true;
    std::size_t violations = 0;
    /// max over pairs of |h - h'| / sqrt(n h).
    double worst_ratio = 0.0;
    bool holds() const { return prime_connected && violations == 0; }
};

/// |h_G(u,v) - h_G'(u,v)| <= sqrt(n h_G(u,v)) for every ordered pair u != v.
ClusterBoundReport single_cluster_bound_check(const UndirectedWeightedGraph& g,
                                              const UndirectedWeightedGraph& g_prime);

}  // namespace walknn::spectral
