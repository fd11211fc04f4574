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

#include "walknn/index/sparsified_construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "walknn/index/softmax.hpp"
#include "walknn/simd/distance.hpp"

namespace walknn {

std::size_t SparsifiedLayer::edge_count() const {
    std::size_t total = 0;
    for (const auto& n : neighbors) total += n.size();
    return total / 2;
}

std::size_t SparsifiedLayer::max_degree() const {
    std::size_t best = 0;
    for (const auto& n : neighbors) best = std::max(best, n.size());
    return best;
}

bool SparsifiedLayer::is_connected() const {
    if (neighbors.empty()) return true;
    std::vector<char> seen(neighbors.size(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : neighbors[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == neighbors.size();
}

namespace {

double euclidean(const VectorStore& points, NodeId a, NodeId b) {
    const float d2 = simd::active_l2_sq()(points.row(a), points.row(b), points.dim());
    return std::sqrt(static_cast<double>(d2));
}

// Weighted sampling of `count` items without replacement with weights
// exp(-r^2 d^2): the largest Gumbel-perturbed log weights win.
std::vector<std::size_t> sample_without_replacement(std::span<const double> distances, std::size_t count,
                                                    double r_hat, Rng& rng) {
    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), 0);
    if (distances.size() <= count) return order;
    const SoftmaxScale scale = adaptive_r(distances, r_hat);
    const double r2 = scale.deterministic ? 0.0 : scale.r * scale.r;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> keys(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        double u = 0.0;
        while (u <= 0.0) u = unif(rng);
        keys[i] = -r2 * distances[i] * distances[i] - std::log(-std::log(u));
    }
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end(),
                      [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    order.resize(count);
    return order;
}

void erase_value(std::vector<NodeId>& list, NodeId value) {
    list.erase(std::remove(list.begin(), list.end(), value), list.end());
}

}  // namespace

SparsifiedLayer construct_layer_sparsified(const VectorStore& points, std::size_t m, double r_hat,
                                           Rng& rng) {
    if (points.size() == 0) throw std::invalid_argument("construct_layer_sparsified: no points");
    if (m < 1) throw std::invalid_argument("construct_layer_sparsified: m must be positive");
    if (!(r_hat > 0.0)) throw std::invalid_argument("construct_layer_sparsified: r_hat must be positive");

    SparsifiedLayer layer;
    layer.neighbors.resize(points.size());
    std::vector<char> visited_mark(points.size(), 0);
    std::vector<double> scratch;

    for (NodeId i = 1; i < points.size(); ++i) {
        // Random walk over the edges among earlier points.
        std::fill(visited_mark.begin(), visited_mark.begin() + i, 0);
        std::vector<NodeId> visited{0};
        std::vector<NodeId> candidates{0};
        std::vector<double> cand_dist{euclidean(points, i, 0)};
        visited_mark[0] = 1;
        while (!candidates.empty()) {
            const std::size_t pick = sample_softmax(cand_dist, r_hat, rng, scratch);
            const NodeId c = candidates[pick];
            candidates[pick] = candidates.back();
            candidates.pop_back();
            cand_dist[pick] = cand_dist.back();
            cand_dist.pop_back();
            for (NodeId u : layer.neighbors[c]) {
                if (visited_mark[u]) continue;
                visited_mark[u] = 1;
                visited.push_back(u);
                candidates.push_back(u);
                cand_dist.push_back(euclidean(points, i, u));
            }
        }

        // Keep m of the densified edges.
        std::vector<double> vis_dist(visited.size());
        for (std::size_t j = 0; j < visited.size(); ++j) vis_dist[j] = euclidean(points, i, visited[j]);
        const auto kept = sample_without_replacement(vis_dist, m, r_hat, rng);
        std::vector<NodeId> sample;
        sample.reserve(kept.size());
        for (std::size_t j : kept) sample.push_back(visited[j]);
        std::sort(sample.begin(), sample.end());
        for (NodeId u : sample) {
            layer.neighbors[i].push_back(u);
            layer.neighbors[u].push_back(i);
        }

        for (NodeId u : sample) {
            auto& nb = layer.neighbors[u];
            if (nb.size() <= m) continue;
            std::vector<double> nb_dist(nb.size());
            for (std::size_t j = 0; j < nb.size(); ++j) nb_dist[j] = euclidean(points, u, nb[j]);
            const auto keep_idx = sample_without_replacement(nb_dist, m, r_hat, rng);
            std::vector<char> keep(nb.size(), 0);
            for (std::size_t j : keep_idx) keep[j] = 1;
            const std::vector<NodeId> old = nb;
            nb.clear();
            for (std::size_t j = 0; j < old.size(); ++j) {
                if (keep[j]) {
                    nb.push_back(old[j]);
                } else {
                    erase_value(layer.neighbors[old[j]], u);
                }
            }
        }
    }
    return layer;
}

}  // namespace walknn
