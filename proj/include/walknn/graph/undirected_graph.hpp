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
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace walknn {

struct WeightedEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 0.0;
};

/// Simple weighted undirected graph on vertices 0..n-1. At most one edge per
/// unordered pair; self-loops only when added through add_self_loop.
class UndirectedWeightedGraph {
 public:
    UndirectedWeightedGraph() = default;
    explicit UndirectedWeightedGraph(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    /// Inserts {u,v}. Throws GraphError on u == v, out-of-range vertices,
    /// non-positive weight, or an existing edge.
    void add_edge(std::size_t u, std::size_t v, double weight);

    /// Adds `weight` to {u,v}, creating the edge if needed.
    void accumulate_edge(std::size_t u, std::size_t v, double weight);

    void add_self_loop(std::size_t u, double weight);

    std::optional<double> weight(std::size_t u, std::size_t v) const;
    bool has_self_loops() const { return self_loops_ > 0; }

    /// Weighted degree; a self-loop contributes its weight once.
    std::vector<double> degrees() const;
    double total_weight() const;

    /// (neighbor, weight) lists; self-loops appear once in their own list.
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency() const;

    std::vector<std::size_t> component_labels() const;
    bool is_connected() const;

 private:
    static std::uint64_t key(std::size_t u, std::size_t v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
    }
    void check_vertex(std::size_t u) const;

    std::size_t n_ = 0;
    std::size_t self_loops_ = 0;
    std::vector<WeightedEdge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace walknn
