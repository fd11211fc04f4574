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
#include <span>
#include <vector>

#include "walknn/index/params.hpp"

namespace walknn {

/// Largest r_hat honoured; larger values are clamped so that r^2 * d^2 stays
/// finite in double precision.
inline constexpr double kMaxRHat = 1e100;

/// Result of adaptive_r. `deterministic` is the sentinel for a zero mean
/// distance, in which case the sampler picks uniformly among the argmin set.
struct SoftmaxScale {
    double r = 0.0;
    bool deterministic = false;
};

/// r = r_hat / mu with mu the mean of `distances` (Euclidean, not squared).
SoftmaxScale adaptive_r(std::span<const double> distances, double r_hat);

/// Transition probabilities proportional to exp(-r^2 d^2) with r from
/// adaptive_r, evaluated with a max-logit shift.
std::vector<double> softmax_probabilities(std::span<const double> distances, double r_hat);

/// Draws an index from softmax_probabilities(distances, r_hat). `scratch` is
/// reused between calls to avoid allocation.
std::size_t sample_softmax(std::span<const double> distances, double r_hat, Rng& rng,
                           std::vector<double>& scratch);

}  // namespace walknn
