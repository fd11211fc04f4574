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
#include <functional>
#include <span>
#include <vector>

#include "walknn/common.hpp"
#include "walknn/index/params.hpp"

namespace walknn {

/// A node with its squared distance to some query. Ordered by distance, ties
/// by lowest id.
struct Candidate {
    float dist = 0.0f;
    NodeId id = kInvalidNode;

    friend bool operator<(const Candidate& a, const Candidate& b) {
        return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
    }
    friend bool operator>(const Candidate& a, const Candidate& b) { return b < a; }
    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Squared distance between two stored nodes.
using PairDistance = std::function<float(NodeId, NodeId)>;

/// top_m: the m nearest candidates. heuristic: scan in ascending order and
/// keep c unless some already-kept s has d(c, s) < d(c, q). Output is sorted
/// ascending; `pair_dist` is only consulted by the heuristic.
std::vector<Candidate> select_neighbors(std::span<const Candidate> candidates, std::size_t m,
                                        NeighborSelection method, const PairDistance& pair_dist = {});

}  // namespace walknn
