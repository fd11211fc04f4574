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

#include "walknn/graph/undirected_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "walknn/common.hpp"

namespace walknn {

void UndirectedWeightedGraph::check_vertex(std::size_t u) const {
    if (u >= n_) throw GraphError("vertex " + std::to_string(u) + " out of range");
}

void UndirectedWeightedGraph::add_edge(std::size_t u, std::size_t v, double weight) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop rejected; use add_self_loop");
    if (!(weight > 0.0)) throw GraphError("edge weight must be positive");
    const auto [it, inserted] = index_.emplace(key(u, v), edges_.size());
    if (!inserted) throw GraphError("duplicate edge");
    edges_.push_back({std::min(u, v), std::max(u, v), weight});
}

void UndirectedWeightedGraph::accumulate_edge(std::size_t u, std::size_t v, double weight) {
    check_vertex(u);
    check_vertex(v);
    if (!(weight > 0.0)) throw GraphError("edge weight must be positive");
    const auto it = index_.find(key(u, v));
    if (it != index_.end()) {
        edges_[it->second].weight += weight;
        return;
    }
    if (u == v) {
        add_self_loop(u, weight);
        return;
    }
    add_edge(u, v, weight);
}

void UndirectedWeightedGraph::add_self_loop(std::size_t u, double weight) {
    check_vertex(u);
    if (!(weight > 0.0)) throw GraphError("self-loop weight must be positive");
    const auto [it, inserted] = index_.emplace(key(u, u), edges_.size());
    if (!inserted) {
        edges_[it->second].weight += weight;
        return;
    }
    edges_.push_back({u, u, weight});
    ++self_loops_;
}

std::optional<double> UndirectedWeightedGraph::weight(std::size_t u, std::size_t v) const {
    const auto it = index_.find(key(u, v));
    if (it == index_.end()) return std::nullopt;
    return edges_[it->second].weight;
}

std::vector<double> UndirectedWeightedGraph::degrees() const {
    std::vector<double> deg(n_, 0.0);
    for (const auto& e : edges_) {
        deg[e.u] += e.weight;
        if (e.v != e.u) deg[e.v] += e.weight;
    }
    return deg;
}

double UndirectedWeightedGraph::total_weight() const {
    return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                           [](double acc, const WeightedEdge& e) { return acc + e.weight; });
}

std::vector<std::vector<std::pair<std::size_t, double>>> UndirectedWeightedGraph::adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].emplace_back(e.v, e.weight);
        if (e.v != e.u) adj[e.v].emplace_back(e.u, e.weight);
    }
    return adj;
}

std::vector<std::size_t> UndirectedWeightedGraph::component_labels() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges_) {
        const std::size_t a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> labels(n_);
    for (std::size_t i = 0; i < n_; ++i) labels[i] = find(i);
    return labels;
}

bool UndirectedWeightedGraph::is_connected() const {
    if (n_ <= 1) return true;
    const auto labels = component_labels();
    for (std::size_t i = 1; i < n_; ++i) {
        if (labels[i] != labels[0]) return false;
    }
    return true;
}

}  // namespace walknn
