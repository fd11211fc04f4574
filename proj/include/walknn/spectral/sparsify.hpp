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
#include <vector>

#include "walknn/graph/undirected_graph.hpp"
#include "walknn/index/params.hpp"

namespace walknn::spectral {

struct SparsifyOutcome {
    UndirectedWeightedGraph graph;
    std::size_t samples = 0;
    /// Frobenius norm of L(graph) - L(source).
    double frobenius_error = 0.0;
    /// Sum of source edge weights.
    double trace_w = 0.0;
};

/// p_e = w_e / sum(w), aligned with g.edges(). Self-loops get probability 0.
std::vector<double> sampling_probabilities(const UndirectedWeightedGraph& g);

/// s independent draws with replacement by p_e; each draw adds w_e / (p_e s)
/// to its edge in the output.
SparsifyOutcome row_norm_sparsify(const UndirectedWeightedGraph& g, std::size_t s, Rng& rng);

/// Draw count for a target relative error: ceil(200 / eps^2).
std::size_t draws_for_epsilon(double eps);

}  // namespace walknn::spectral
