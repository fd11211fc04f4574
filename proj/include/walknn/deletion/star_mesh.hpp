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
#include <map>
#include <utility>

#include "walknn/graph/undirected_graph.hpp"

namespace walknn {

enum class StarMeshMode { exact_with_selfloops, practical };

struct StarMeshResult {
    /// Keyed by (u, v) with u < v, both in N(p).
    std::map<std::pair<std::size_t, std::size_t>, double> new_weights;
    /// Exact mode only: w(u,p)^2 / deg(p) per neighbor u.
    std::map<std::size_t, double> self_loops;
};

/// w'(u,v) = w(u,v) + w(u,p) w(p,v) / deg(p) for every pair of distinct
/// neighbors of p. Throws GraphError when p is isolated or carries a
/// self-loop.
StarMeshResult star_mesh_weights(const UndirectedWeightedGraph& g, std::size_t p, StarMeshMode mode);

/// G with p's edges replaced by the mesh: p stays as an isolated vertex,
/// mesh pairs carry w', and exact-mode self-loops are added on top of any
/// existing ones.
UndirectedWeightedGraph apply_star_mesh(const UndirectedWeightedGraph& g, std::size_t p,
                                        const StarMeshResult& mesh);

}  // namespace walknn
