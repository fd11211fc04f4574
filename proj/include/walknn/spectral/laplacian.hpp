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

#include <Eigen/Dense>

#include "walknn/graph/undirected_graph.hpp"

namespace walknn::spectral {

/// L = D - A. Self-loops cancel and do not appear.
Eigen::MatrixXd laplacian(const UndirectedWeightedGraph& g);

/// One row per non-loop edge {u,v}, u < v: +1 at u, -1 at v.
Eigen::MatrixXd incidence(const UndirectedWeightedGraph& g);

/// Non-loop edge weights, aligned with the rows of incidence().
Eigen::VectorXd edge_weights(const UndirectedWeightedGraph& g);

/// B^T W B assembled from the factored form.
Eigen::MatrixXd laplacian_factored(const UndirectedWeightedGraph& g);

/// Ascending eigenvalues of a symmetric matrix.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m);

}  // namespace walknn::spectral
