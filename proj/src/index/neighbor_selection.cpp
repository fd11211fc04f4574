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

#include "walknn/index/neighbor_selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace walknn {

std::vector<Candidate> select_neighbors(std::span<const Candidate> candidates, std::size_t m,
                                        NeighborSelection method, const PairDistance& pair_dist) {
    std::vector<Candidate> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    if (method == NeighborSelection::top_m) {
        if (sorted.size() > m) sorted.resize(m);
        return sorted;
    }
    if (!pair_dist) throw std::invalid_argument("heuristic selection needs a pair distance");
    std::vector<Candidate> kept;
    kept.reserve(std::min(m, sorted.size()));
    for (const Candidate& c : sorted) {
        if (kept.size() >= m) break;
        const bool diverse = std::none_of(kept.begin(), kept.end(), [&](const Candidate& s) {
            return pair_dist(c.id, s.id) < c.dist;
        });
        if (diverse) kept.push_back(c);
    }
    return kept;
}

}  // namespace walknn
