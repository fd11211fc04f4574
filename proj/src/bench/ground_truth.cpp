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

#include "walknn/bench/ground_truth.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "walknn/simd/distance.hpp"

namespace walknn::bench {

std::vector<std::vector<NodeId>> brute_force_topk(std::span<const float> base, std::size_t dim,
                                                  std::span<const float> queries, std::size_t k,
                                                  std::span<const char> alive) {
    if (dim == 0) throw std::invalid_argument("brute_force_topk: dim must be positive");
    const std::size_t n = base.size() / dim;
    if (!alive.empty() && alive.size() != n) throw std::invalid_argument("brute_force_topk: mask size mismatch");
    const std::size_t live =
        alive.empty() ? n : static_cast<std::size_t>(std::count_if(alive.begin(), alive.end(), [](char a) {
            return a != 0;
        }));
    if (k > live) throw std::invalid_argument("brute_force_topk: k exceeds the alive count");

    const simd::L2SqFn l2 = simd::active_l2_sq();
    const std::size_t nq = queries.size() / dim;
    std::vector<std::vector<NodeId>> out(nq);
    std::vector<std::pair<float, NodeId>> scored;
    scored.reserve(live);
    for (std::size_t q = 0; q < nq; ++q) {
        scored.clear();
        const float* qp = queries.data() + q * dim;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive.empty() && !alive[i]) continue;
            scored.emplace_back(l2(qp, base.data() + i * dim, dim), static_cast<NodeId>(i));
        }
        std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end());
        out[q].reserve(k);
        for (std::size_t j = 0; j < k; ++j) out[q].push_back(scored[j].second);
    }
    return out;
}

double recall_at_k(std::span<const NodeId> result, std::span<const NodeId> truth, std::size_t k) {
    if (k == 0) throw std::invalid_argument("recall_at_k: k must be positive");
    if (truth.size() < k) throw std::invalid_argument("recall_at_k: truth holds fewer than k ids");
    const auto top = result.first(std::min(k, result.size()));
    std::size_t hits = 0;
    for (NodeId id : truth.first(k)) hits += std::find(top.begin(), top.end(), id) != top.end();
    return static_cast<double>(hits) / static_cast<double>(k);
}

}  // namespace walknn::bench
