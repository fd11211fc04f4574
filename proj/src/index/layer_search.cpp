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

#include "walknn/index/layer_search.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "walknn/index/softmax.hpp"

namespace walknn {

namespace {

// Epoch-stamped visited marks, one buffer per thread.
class VisitedMarks {
 public:
    void reset(std::size_t capacity) {
        if (marks_.size() < capacity) marks_.resize(capacity, 0);
        if (++epoch_ == 0) {
            std::fill(marks_.begin(), marks_.end(), 0);
            epoch_ = 1;
        }
    }
    bool insert(NodeId id) {
        if (marks_[id] == epoch_) return false;
        marks_[id] = epoch_;
        return true;
    }

 private:
    std::vector<std::uint32_t> marks_;
    std::uint32_t epoch_ = 0;
};

VisitedMarks& visited_marks() {
    thread_local VisitedMarks marks;
    return marks;
}

bool retained(const LayeredGraph& g, NodeId v, const LayerSearchOptions& opt) {
    if (v == opt.exclude) return false;
    switch (opt.retain) {
        case RetainPolicy::any: return true;
        case RetainPolicy::bottom_present: return g.contains(v, 0);
        case RetainPolicy::live: return g.is_live(v);
    }
    return false;
}

// Candidate pool for the softmax walk: sampling by weight, O(size) per pop.
class SoftmaxPool {
 public:
    void push(Candidate c) { items_.push_back(c); }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    Candidate pop(double r_hat, Rng& rng, bool& was_nearest) {
        dists_.resize(items_.size());
        std::size_t nearest = 0;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            dists_[i] = std::sqrt(static_cast<double>(items_[i].dist));
            if (items_[i] < items_[nearest]) nearest = i;
        }
        const std::size_t pick = sample_softmax(dists_, r_hat, rng, scratch_);
        was_nearest = pick == nearest;
        const Candidate c = items_[pick];
        items_[pick] = items_.back();
        items_.pop_back();
        return c;
    }

 private:
    std::vector<Candidate> items_;
    std::vector<double> dists_;
    std::vector<double> scratch_;
};

}  // namespace

std::vector<Candidate> layer_search(const LayeredGraph& g, DistanceEvaluator& dist, const float* q,
                                    int layer, NodeId entry, const LayerSearchOptions& opt) {
    if (opt.ef == 0) throw std::invalid_argument("layer_search: ef must be positive");
    if (!g.contains(entry, layer)) {
        throw GraphError("layer_search: entry " + std::to_string(entry) + " missing at layer " +
                         std::to_string(layer));
    }
    const bool softmax = opt.mode == WalkMode::softmax;
    if (softmax && opt.rng == nullptr) throw std::invalid_argument("layer_search: softmax needs an RNG");

    VisitedMarks& visited = visited_marks();
    visited.reset(g.capacity());

    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> greedy_pool;
    SoftmaxPool softmax_pool;
    std::priority_queue<Candidate> nbrs;  // top() is the furthest retained node

    const Candidate start{dist(q, entry), entry};
    visited.insert(entry);
    if (softmax) {
        softmax_pool.push(start);
    } else {
        greedy_pool.push(start);
    }
    if (retained(g, entry, opt)) nbrs.push(start);

    while (softmax ? !softmax_pool.empty() : !greedy_pool.empty()) {
        Candidate c;
        bool was_nearest = true;
        const std::size_t pool = softmax ? softmax_pool.size() : greedy_pool.size();
        if (softmax) {
            c = softmax_pool.pop(opt.r_hat, *opt.rng, was_nearest);
        } else {
            c = greedy_pool.top();
            greedy_pool.pop();
        }
        if (pool >= 2) {
            if (opt.pops) ++*opt.pops;
            if (opt.greedy_pops && was_nearest) ++*opt.greedy_pops;
            if (opt.uniform_mass) *opt.uniform_mass += 1.0 / static_cast<double>(pool);
        }
        if (nbrs.size() >= opt.ef && c.dist > nbrs.top().dist) break;
        if (opt.trace) opt.trace->push_back(c.id);

        for (NodeId v : g.out_neighbors(layer, c.id)) {
            if (!visited.insert(v)) continue;
            const float d = dist(q, v);
            if (nbrs.size() < opt.ef || d < nbrs.top().dist) {
                const Candidate cand{d, v};
                if (softmax) {
                    softmax_pool.push(cand);
                } else {
                    greedy_pool.push(cand);
                }
                if (retained(g, v, opt)) {
                    nbrs.push(cand);
                    if (nbrs.size() > opt.ef) nbrs.pop();
                }
            }
        }
    }

    std::vector<Candidate> result(nbrs.size());
    for (std::size_t i = result.size(); i-- > 0;) {
        result[i] = nbrs.top();
        nbrs.pop();
    }
    return result;
}

}  // namespace walknn
