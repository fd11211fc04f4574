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

#include <Eigen/Dense>

#include "walknn/graph/undirected_graph.hpp"

namespace walknn::spectral {

/// Moore-Penrose pseudo-inverse of a symmetric PSD matrix. Eigenvalues below
/// 1e-10 * lambda_max count as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& sym);

/// chi^T L^+ chi for chi = e_u - e_v. +infinity across components.
double effective_resistance(const UndirectedWeightedGraph& g, std::size_t u, std::size_t v);

/// All-pairs effective resistance of a connected graph. Throws GraphError
/// otherwise.
Eigen::MatrixXd resistance_matrix(const UndirectedWeightedGraph& g);

}  // namespace walknn::spectral
