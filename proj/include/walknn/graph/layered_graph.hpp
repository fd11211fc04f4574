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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walknn/common.hpp"
#include "walknn/graph/undirected_graph.hpp"

namespace walknn {

enum class RemovalMode { tombstone, hard };

/// Scope of a hard removal. `bottom_layer` removes the node and its edges at
/// layer 0 only and tombstones whatever remains above.
enum class RemovalScope { all_layers, bottom_layer };

struct EntryPoint {
    NodeId node = kInvalidNode;
    int layer = 0;
    friend bool operator==(const EntryPoint&, const EntryPoint&) = default;
};

struct RemovalSummary {
    /// Incident edges (in + out) removed per layer, indexed by layer.
    std::vector<std::size_t> removed_edges;
    bool entry_repaired = false;
};

/// Multi-layer directed adjacency store.
///
/// Every edge u->v at layer l is mirrored by u in in(v) at layer l. A node
/// occupies a contiguous layer range [bottom, top]; the range starts at 0 for
/// every node that is still searchable. Bottom-only removal keeps the node in
/// the upper layers as a tombstone, so nesting holds for non-tombstoned nodes.
///
/// Single writer: mutation requires exclusive access, const methods may run
/// concurrently.
class LayeredGraph {
 public:
    using DistanceFn = std::function<float(NodeId, NodeId)>;

    /// Ensures `id` exists at layers 0..top_layer. Idempotent; a higher
    /// top_layer extends the node upward. Throws for removed ids.
    void upsert_node(NodeId id, int top_layer);

    /// Adds u->v at `layer`; duplicate inserts are no-ops. Throws on self-loops
    /// or when either endpoint is missing at the layer.
    void add_edge(int layer, NodeId u, NodeId v);
    bool has_edge(int layer, NodeId u, NodeId v) const;
    bool remove_edge(int layer, NodeId u, NodeId v);

    /// Replaces the out-list of u at `layer`, keeping the given order.
    void replace_out_neighbors(int layer, NodeId u, std::span<const NodeId> targets);

    /// Tombstone mode flags the node only. Hard mode removes incident edges in
    /// the given scope and repairs the entry point when it was `id`: the
    /// nearest live out-neighbor at the entry layer is promoted (nearest by
    /// `dist` when provided, ties by lowest id), otherwise the lowest live id
    /// at the highest populated layer.
    RemovalSummary remove_node(NodeId id, RemovalMode mode,
                               RemovalScope scope = RemovalScope::all_layers,
                               const DistanceFn& dist = {});

    bool contains(NodeId id) const;
    bool contains(NodeId id, int layer) const;
    bool is_tombstoned(NodeId id) const;
    /// Present at layer 0 and not tombstoned.
    bool is_live(NodeId id) const;
    /// Hard-removed from every layer.
    bool is_removed(NodeId id) const;
    int top_layer(NodeId id) const;
    int bottom_layer(NodeId id) const;

    std::span<const NodeId> out_neighbors(int layer, NodeId u) const;
    std::span<const NodeId> in_neighbors(int layer, NodeId u) const;

    int num_layers() const { return static_cast<int>(layers_.size()); }
    /// One past the largest id ever upserted.
    std::size_t capacity() const { return nodes_.size(); }
    std::size_t edge_count(int layer) const;
    std::size_t node_count(int layer) const;
    std::size_t total_vertex_count() const;
    std::size_t total_edge_count() const;
    std::size_t live_count() const { return live_; }

    std::optional<EntryPoint> entry_point() const { return entry_; }
    void set_entry_point(std::optional<EntryPoint> entry);

    /// Full scan of mirror, nesting, hygiene, and edge-count invariants.
    bool check_invariants(std::string* why = nullptr) const;

 private:
    struct NodeState {
        signed char bottom = -1;
        signed char top = -1;
        bool tombstone = false;
        bool removed = false;
    };
    struct Layer {
        std::vector<std::vector<NodeId>> out;
        std::vector<std::vector<NodeId>> in;
        std::size_t edges = 0;
        std::size_t nodes = 0;
    };

    void require_present(NodeId id, int layer, const char* what) const;
    std::size_t detach(NodeId id, int layer);
    std::optional<EntryPoint> choose_replacement_entry(NodeId leaving, const DistanceFn& dist) const;

    std::vector<NodeState> nodes_;
    std::vector<Layer> layers_;
    std::optional<EntryPoint> entry_;
    std::size_t live_ = 0;
};

/// Undirected view of one layer over the nodes present there. Vertex i of
/// `graph` is `node_ids[i]`.
struct LayerSnapshot {
    UndirectedWeightedGraph graph;
    std::vector<NodeId> node_ids;
};

/// (u,v) and (v,u) coalesce into one undirected edge; `weight_fn` is called
/// once per unordered pair and must return a positive weight.
LayerSnapshot snapshot_undirected(const LayeredGraph& g, int layer,
                                  const std::function<double(NodeId, NodeId)>& weight_fn);

}  // namespace walknn
