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
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "walknn/common.hpp"

namespace walknn {

using Rng = std::mt19937_64;

enum class WalkMode { greedy, softmax };
enum class NeighborSelection { top_m, heuristic };

std::string_view to_string(WalkMode mode);
WalkMode parse_walk_mode(std::string_view name);
std::string_view to_string(NeighborSelection selection);
NeighborSelection parse_neighbor_selection(std::string_view name);

struct SearchParams {
    WalkMode mode = WalkMode::greedy;
    std::size_t ef = 64;
    /// Dimensionless softmax sharpness r * mu; softmax mode only.
    double r_hat = 15.0;
    std::size_t k = 10;
    /// Seeds the per-query RNG in softmax mode.
    std::uint64_t seed = 0;
    /// Invoked once per distance evaluation when set.
    std::function<void()> on_distance;

    /// Throws std::invalid_argument unless ef >= k >= 1 and r_hat > 0.
    void validate() const;
};

struct BuildParams {
    std::size_t m = 32;
    std::size_t m_max_upper = 32;
    std::size_t m_max_bottom = 64;
    std::size_t ef_construction = 100;
    double level_multiplier = 32.0;
    NeighborSelection selection = NeighborSelection::top_m;
    std::uint64_t seed = 42;

    /// Defaults derived from m: caps m / 2m, level multiplier m.
    static BuildParams for_degree(std::size_t m);

    /// Throws std::invalid_argument unless m_max_bottom >= m_max_upper >= m >= 2,
    /// ef_construction >= m, and level_multiplier > 1.
    void validate() const;
};

struct QueryResult {
    std::vector<NodeId> ids;
    /// Squared Euclidean distances, non-decreasing, aligned with `ids`.
    std::vector<float> distances;
    std::uint64_t distance_computations = 0;
    /// Pops across all layers that chose among at least two candidates, and
    /// how many of those took the nearest one (always equal in greedy mode).
    std::uint64_t pops = 0;
    std::uint64_t greedy_pops = 0;
    /// Sum over those pops of 1 / candidate-pool size.
    double uniform_pick_mass = 0.0;
};

}  // namespace walknn
