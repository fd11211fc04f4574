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

namespace walknn::spectral {

inline constexpr std::size_t kMaxExpansionVertices = 24;

struct ExpansionResult {
    double phi = 0.0;
    /// A minimizing set S, sorted; never the larger side.
    std::vector<std::size_t> witness;
};

/// min over nonempty proper S of cut(S) / min(|S|, |V \ S|), by exhaustive
/// Gray-code enumeration. Requires 2 <= n <= 24; self-loops are ignored.
ExpansionResult edge_expansion(const UndirectedWeightedGraph& g);

struct CheegerReport {
    double lambda2 = 0.0;
    double phi = 0.0;
    double d_max = 0.0;
    /// phi^2 / (2 d_max) and 2 phi.
    double lower = 0.0;
    double upper = 0.0;
    bool holds = false;
};

/// Second-smallest Laplacian eigenvalue against both Cheeger bounds, with a
/// 1e-9 relative slack for rounding.
CheegerReport cheeger_check(const UndirectedWeightedGraph& g);

}  // namespace walknn::spectral
