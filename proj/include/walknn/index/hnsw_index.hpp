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
#include <optional>
#include <span>
#include <vector>

#include "walknn/graph/layered_graph.hpp"
#include "walknn/index/layer_search.hpp"
#include "walknn/index/neighbor_selection.hpp"
#include "walknn/index/params.hpp"
#include "walknn/index/vector_store.hpp"
#include "walknn/simd/distance.hpp"

namespace walknn {

/// floor(-ln(u) / ln(level_multiplier)); 0 is the bottom layer.
int layer_from_uniform(double u, double level_multiplier);

/// Draws u uniformly on (0, 1) and applies layer_from_uniform.
int assign_layer(Rng& rng, double level_multiplier);

/// Hierarchical navigable small-world index over squared Euclidean distance.
class HnswIndex {
 public:
    HnswIndex(std::size_t dim, BuildParams params);

    /// Wraps an existing graph (e.g. read from a snapshot) over `vectors`.
    /// Throws IndexError when the graph references rows the store lacks.
    static HnswIndex adopt(VectorStore vectors, LayeredGraph graph, BuildParams params);

    std::size_t dim() const { return vectors_.dim(); }
    std::size_t size() const { return vectors_.size(); }
    const BuildParams& build_params() const { return params_; }
    const LayeredGraph& graph() const { return graph_; }
    LayeredGraph& graph() { return graph_; }
    const VectorStore& vectors() const { return vectors_; }

    /// Inserts at a layer drawn from the index RNG.
    NodeId insert(std::span<const float> point);
    /// Inserts at a caller-chosen top layer.
    NodeId insert_at_level(std::span<const float> point, int level);

    /// Descends with ef = 1 from the entry point to layer 1, then searches
    /// layer 0 with max(ef, k). Throws IndexError when nothing is searchable.
    QueryResult search(std::span<const float> query, const SearchParams& params) const;

    /// Entry for layer `to_layer`, reached by an ef = 1 walk from the global
    /// entry point through layers above it.
    NodeId descend(const float* query, int to_layer, DistanceEvaluator& dist, WalkMode mode,
                   double r_hat, Rng* rng, std::uint64_t* pops = nullptr,
                   std::uint64_t* greedy_pops = nullptr, double* uniform_mass = nullptr) const;

    /// Rebuilds the layer-0 out-list of a live node the way insertion links a
    /// new node: construction-time search, neighbor selection, reverse edges,
    /// degree-cap re-pruning.
    void relink_bottom(NodeId id);

    /// Re-prunes u's out-list at `layer` to the layer's degree cap.
    void shrink_to_cap(NodeId u, int layer);

    std::size_t degree_cap(int layer) const {
        return layer == 0 ? params_.m_max_bottom : params_.m_max_upper;
    }

    float distance(NodeId a, NodeId b) const { return kernel_(vectors_.row(a), vectors_.row(b), dim()); }
    PairDistance pair_distance() const {
        return [this](NodeId a, NodeId b) { return distance(a, b); };
    }

    simd::L2SqFn kernel() const { return kernel_; }
    /// Replaces the distance kernel, e.g. with an instrumented wrapper.
    void set_kernel(simd::L2SqFn kernel) { kernel_ = kernel; }

 private:
    void link_new_node(NodeId id, const float* point, int level, EntryPoint start);
    void connect(NodeId id, int layer, std::span<const Candidate> candidates);

    BuildParams params_;
    VectorStore vectors_;
    LayeredGraph graph_;
    Rng rng_;
    simd::L2SqFn kernel_;
};

}  // namespace walknn
