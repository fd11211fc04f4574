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
#include <vector>

#include "walknn/bench/dataset.hpp"
#include "walknn/deletion/strategies.hpp"
#include "walknn/index/params.hpp"

namespace walknn::bench {

struct ExperimentConfig {
    /// Empty base_path selects the synthetic generator.
    std::string base_path;
    std::string query_path;
    std::string truth_path;
    SyntheticSpec synthetic;
    /// Row limits when loading files; 0 keeps everything.
    std::size_t subsample = 10000;
    std::size_t query_count = 1000;

    double delete_fraction = 0.8;
    double batch_fraction = 0.008;
    std::size_t steady_rounds = 10;
    double steady_slice = 0.1;

    double turnover_horizon_s = 3600.0;
    double turnover_mean_lifetime_s = 600.0;
    double turnover_sample_every_s = 600.0;

    std::vector<double> rhat_values{1.0, 3.0, 7.0, 15.0, 30.0};
    std::size_t rhat_seeds = 5;
    /// Periodic-rebuild baseline instead of a deletion strategy: mass deletion
    /// and steady state rebuild a fresh index at every sample.
    bool rebuild = false;
    DeletionConfig deletion;
    BuildParams build;
    SearchParams search;
    std::size_t threads = 1;
    std::uint64_t seed = 1;
    std::string output;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Default spatch fan-out per dataset family, matched on a case-insensitive
/// substring of the name: sift 0.6, gist 0.4, mpnet and minilm 1.2, else 0.6.
double default_spatch_alpha(const std::string& dataset_name);
/// Same for the steady-state workload: sift and gist 0.5, mpnet and minilm
/// 1.2, mbread 1.6, else 0.5.
double default_steady_spatch_alpha(const std::string& dataset_name);
inline constexpr double kDefaultPruneAlpha = 1.2;

/// Loads files when base_path is set, otherwise generates the synthetic set.
Dataset load_experiment_dataset(const ExperimentConfig& cfg);

}  // namespace walknn::bench
