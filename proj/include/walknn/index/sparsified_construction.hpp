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

#include "walknn/index/params.hpp"
#include "walknn/index/vector_store.hpp"

namespace walknn {

/// Undirected single-layer graph; neighbors[u] lists u's neighbors.
struct SparsifiedLayer {
    std::vector<std::vector<NodeId>> neighbors;

    std::size_t edge_count() const;
    std::size_t max_degree() const;
    bool is_connected() const;
};

/// Experimental single-layer constructor. Points arrive in store order. Each
/// arrival is densified against every earlier point with Gaussian-kernel
/// weights, a softmax walk from node 0 collects the visited set over the
/// current sparse edges, m neighbors are sampled from it without replacement
/// in proportion to the kernel weight, and any neighbor left with more than m
/// edges is re-sampled down to m. Kernel scales are r_hat over the mean
/// distance of the set being weighted.
SparsifiedLayer construct_layer_sparsified(const VectorStore& points, std::size_t m, double r_hat,
                                           Rng& rng);

}  // namespace walknn
