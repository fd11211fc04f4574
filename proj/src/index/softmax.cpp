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

#include "walknn/index/softmax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace walknn {

SoftmaxScale adaptive_r(std::span<const double> distances, double r_hat) {
    if (distances.empty()) throw std::invalid_argument("adaptive_r: empty candidate set");
    const double mu =
        std::accumulate(distances.begin(), distances.end(), 0.0) / static_cast<double>(distances.size());
    if (!(mu > 0.0)) return {0.0, true};
    return {std::min(r_hat, kMaxRHat) / mu, false};
}

namespace {

// Fills `weights` with unnormalized weights, the maximum being exactly 1.
void fill_weights(std::span<const double> distances, double r_hat, std::vector<double>& weights) {
    weights.resize(distances.size());
    const SoftmaxScale scale = adaptive_r(distances, r_hat);
    const double d_min = *std::min_element(distances.begin(), distances.end());
    const double r2 = scale.r * scale.r;
    if (scale.deterministic || !std::isfinite(r2 * d_min * d_min)) {
        for (std::size_t i = 0; i < distances.size(); ++i) weights[i] = distances[i] == d_min ? 1.0 : 0.0;
        return;
    }
    const double max_logit = -r2 * d_min * d_min;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        const double logit = -r2 * distances[i] * distances[i];
        weights[i] = std::exp(logit - max_logit);
    }
}

}  // namespace

std::vector<double> softmax_probabilities(std::span<const double> distances, double r_hat) {
    std::vector<double> p;
    fill_weights(distances, r_hat, p);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= total;
    return p;
}

std::size_t sample_softmax(std::span<const double> distances, double r_hat, Rng& rng,
                           std::vector<double>& scratch) {
    fill_weights(distances, r_hat, scratch);
    const double total = std::accumulate(scratch.begin(), scratch.end(), 0.0);
    const double target = std::uniform_real_distribution<double>(0.0, total)(rng);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        if (scratch[i] <= 0.0) continue;
        acc += scratch[i];
        last_positive = i;
        if (target < acc) return i;
    }
    return last_positive;
}

}  // namespace walknn
