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

#include "walknn/graph/undirected_graph.hpp"
#include "walknn/index/params.hpp"

namespace walknn::spectral {

UndirectedWeightedGraph complete_graph(std::size_t n, double weight = 1.0);

/// Each pair joins with probability p; weights uniform on [w_lo, w_hi].
UndirectedWeightedGraph erdos_renyi(std::size_t n, double p, double w_lo, double w_hi, Rng& rng);

/// erdos_renyi redrawn until connected (at most 1000 attempts, then a path
/// of weight w_lo is overlaid).
UndirectedWeightedGraph connected_erdos_renyi(std::size_t n, double p, double w_lo, double w_hi, Rng& rng);

/// `clusters` complete blocks of `size` vertices with intra-cluster weight
/// `intra`; every inter-cluster pair gets weight inter / n.
UndirectedWeightedGraph planted_clusters(std::size_t clusters, std::size_t size, double intra, double inter);

}  // namespace walknn::spectral
