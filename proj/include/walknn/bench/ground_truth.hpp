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

#include "walknn/common.hpp"

namespace walknn::bench {

/// Exact k nearest rows of `base` (row-major, `dim` columns) for each query
/// by squared Euclidean distance, ties by lowest id. Rows with alive[i] == 0
/// are skipped; an empty mask means all rows. Throws std::invalid_argument
/// when k exceeds the alive count.
std::vector<std::vector<NodeId>> brute_force_topk(std::span<const float> base, std::size_t dim,
                                                  std::span<const float> queries, std::size_t k,
                                                  std::span<const char> alive = {});

/// |result ∩ truth| / k over the first k entries of each. truth must hold k ids.
double recall_at_k(std::span<const NodeId> result, std::span<const NodeId> truth, std::size_t k);

}  // namespace walknn::bench
