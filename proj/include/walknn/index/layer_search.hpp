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
#include <vector>

#include "walknn/graph/layered_graph.hpp"
#include "walknn/index/neighbor_selection.hpp"
#include "walknn/index/params.hpp"
#include "walknn/index/vector_store.hpp"
#include "walknn/simd/distance.hpp"

namespace walknn {

/// Counts every query-to-node distance evaluation. One per query; not shared
/// between threads.
class DistanceEvaluator {
 public:
    DistanceEvaluator(const VectorStore& store, simd::L2SqFn kernel,
                      const std::function<void()>* hook = nullptr)
        : store_(store), kernel_(kernel), hook_(hook && *hook ? hook : nullptr) {}

    float operator()(const float* q, NodeId v) {
        ++count_;
        if (hook_) (*hook_)();
        return kernel_(q, store_.row(v), store_.dim());
    }

    std::uint64_t count() const { return count_; }

 private:
    const VectorStore& store_;
    simd::L2SqFn kernel_;
    const std::function<void()>* hook_;
    std::uint64_t count_ = 0;
};

/// Which traversed nodes may enter the result list. All nodes stay
/// traversable either way.
enum class RetainPolicy {
    any,
    /// Present at layer 0; used while descending so the next entry is valid.
    bottom_present,
    /// Present at layer 0 and not tombstoned.
    live,
};

struct LayerSearchOptions {
    WalkMode mode = WalkMode::greedy;
    std::size_t ef = 1;
    double r_hat = 15.0;
    RetainPolicy retain = RetainPolicy::live;
    /// Additionally excluded from the result (e.g. the node being linked).
    NodeId exclude = kInvalidNode;
    /// Required in softmax mode.
    Rng* rng = nullptr;
    /// Optional: expanded nodes in pop order.
    std::vector<NodeId>* trace = nullptr;
    /// Optional choice accounting, accumulated over pops made from a pool of
    /// at least two candidates: the pop count, how many of those took the
    /// nearest candidate, and the sum of 1 / pool size (the expected
    /// nearest-pick count of a uniform sampler).
    std::uint64_t* pops = nullptr;
    std::uint64_t* greedy_pops = nullptr;
    double* uniform_mass = nullptr;
};

/// Beam search over one layer. Greedy mode pops the nearest candidate;
/// softmax mode samples it with probability proportional to exp(-r^2 d^2),
/// r = r_hat / mean candidate distance. The walk stops once the popped
/// candidate is farther than the furthest retained node of a full result
/// list. Returns at most ef retained nodes, ascending.
std::vector<Candidate> layer_search(const LayeredGraph& g, DistanceEvaluator& dist, const float* q,
                                    int layer, NodeId entry, const LayerSearchOptions& options);

}  // namespace walknn
