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

#include "walknn/bench/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace walknn::bench {

namespace {

bool in_unit(double x) { return x > 0.0 && x <= 1.0; }

}  // namespace

void ExperimentConfig::validate() const {
    if (!in_unit(delete_fraction)) throw std::invalid_argument("delete_fraction must lie in (0, 1]");
    if (!in_unit(batch_fraction)) throw std::invalid_argument("batch_fraction must lie in (0, 1]");
    if (!in_unit(steady_slice)) throw std::invalid_argument("steady_slice must lie in (0, 1]");
    if (steady_rounds == 0) throw std::invalid_argument("steady_rounds must be positive");
    if (!(turnover_horizon_s > 0.0) || !(turnover_mean_lifetime_s > 0.0) || !(turnover_sample_every_s > 0.0)) {
        throw std::invalid_argument("turnover times must be positive");
    }
    if (rhat_seeds == 0) throw std::invalid_argument("rhat_seeds must be positive");
    for (double r : rhat_values) {
        if (!(r > 0.0)) throw std::invalid_argument("r_hat values must be positive");
    }
    if (threads == 0) throw std::invalid_argument("threads must be positive");
    if (base_path.empty() != query_path.empty()) {
        throw std::invalid_argument("base and query paths must be given together");
    }
    deletion.validate();
    build.validate();
    search.validate();
}

namespace {

bool mentions(const std::string& lower, const char* family) { return lower.find(family) != std::string::npos; }

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

double default_spatch_alpha(const std::string& dataset_name) {
    const std::string lower = lowercase(dataset_name);
    if (mentions(lower, "gist")) return 0.4;
    if (mentions(lower, "mpnet") || mentions(lower, "minilm")) return 1.2;
    return 0.6;
}

double default_steady_spatch_alpha(const std::string& dataset_name) {
    const std::string lower = lowercase(dataset_name);
    if (mentions(lower, "mpnet") || mentions(lower, "minilm")) return 1.2;
    if (mentions(lower, "mbread")) return 1.6;
    return 0.5;
}

Dataset load_experiment_dataset(const ExperimentConfig& cfg) {
    if (cfg.base_path.empty()) return synthetic_clustered(cfg.synthetic);
    return load_dataset(cfg.base_path, cfg.query_path, cfg.truth_path, cfg.subsample, cfg.query_count);
}

}  // namespace walknn::bench
