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

enum class HittingMethod { direct, tetali };

/// h(u, v): expected steps of the weighted random walk from u to first reach
/// v; zero diagonal. `direct` solves the first-step equations per target;
/// `tetali` assembles h(u,v) = 1/2 sum_z deg(z) (R(u,v) + R(v,z) - R(u,z)).
/// Self-loops count toward deg and act as lazy steps. Throws GraphError on
/// disconnected graphs.
Eigen::MatrixXd hitting_times(const UndirectedWeightedGraph& g, HittingMethod method);

}  // namespace walknn::spectral
