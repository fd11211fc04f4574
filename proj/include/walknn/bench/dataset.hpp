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
#include <string>

#include "walknn/bench/vecs_io.hpp"

namespace walknn::bench {

struct Dataset {
    std::string name;
    FloatMatrix base;
    FloatMatrix queries;
    /// Optional precomputed neighbor ids per query; rows == 0 when absent.
    IntMatrix ground_truth;

    std::size_t dim() const { return base.dim; }
};

/// Gaussian-mixture points on a low-dimensional latent space, linearly
/// embedded in `dim` dimensions with isotropic noise. Queries come from the
/// same mixture.
struct SyntheticSpec {
    std::size_t base = 10000;
    std::size_t queries = 1000;
    std::size_t dim = 128;
    std::size_t latent_dim = 12;
    std::size_t clusters = 32;
    double cluster_spread = 0.35;
    double ambient_noise = 0.02;
    std::uint64_t seed = 7;
};

Dataset synthetic_clustered(const SyntheticSpec& spec);

/// Loads base and query files (vecs formats by extension), keeping the first
/// `max_base` / `max_queries` rows when nonzero. `truth_path` may be empty.
Dataset load_dataset(const std::string& base_path, const std::string& query_path,
                     const std::string& truth_path, std::size_t max_base, std::size_t max_queries);

}  // namespace walknn::bench
