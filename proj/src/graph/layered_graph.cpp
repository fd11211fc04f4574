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

#include "walknn/graph/layered_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace walknn {

namespace {

void erase_swap(std::vector<NodeId>& list, NodeId value) {
    const auto it = std::find(list.begin(), list.end(), value);
    if (it != list.end()) {
        *it = list.back();
        list.pop_back();
    }
}

bool erase_ordered(std::vector<NodeId>& list, NodeId value) {
    const auto it = std::find(list.begin(), list.end(), value);
    if (it == list.end()) return false;
    list.erase(it);
    return true;
}

}  // namespace

void LayeredGraph::upsert_node(NodeId id, int top_layer) {
    if (id == kInvalidNode) throw GraphError("invalid node id");
    if (top_layer < 0 || top_layer > 100) throw GraphError("top layer out of range");
    if (id >= nodes_.size()) nodes_.resize(static_cast<std::size_t>(id) + 1);
    NodeState& st = nodes_[id];
    if (st.removed || st.bottom > 0) {
        throw GraphError("node " + std::to_string(id) + " was removed; ids are never reused");
    }
    if (static_cast<int>(layers_.size()) <= top_layer) layers_.resize(top_layer + 1);
    const int first_new = st.top + 1;
    if (st.top < 0) {
        st.bottom = 0;
        if (!st.tombstone) ++live_;
    }
    for (int l = first_new; l <= top_layer; ++l) {
        Layer& layer = layers_[l];
        if (layer.out.size() <= id) {
            layer.out.resize(nodes_.size());
            layer.in.resize(nodes_.size());
        }
        ++layer.nodes;
    }
    st.top = static_cast<signed char>(std::max<int>(st.top, top_layer));
    if (!entry_ || entry_->layer < top_layer) entry_ = EntryPoint{id, top_layer};
}

void LayeredGraph::require_present(NodeId id, int layer, const char* what) const {
    if (!contains(id, layer)) {
        throw GraphError(std::string(what) + ": node " + std::to_string(id) +
                         " not present at layer " + std::to_string(layer));
    }
}

void LayeredGraph::add_edge(int layer, NodeId u, NodeId v) {
    if (u == v) throw GraphError("add_edge: self-loop rejected");
    require_present(u, layer, "add_edge");
    require_present(v, layer, "add_edge");
    Layer& l = layers_[layer];
    auto& out = l.out[u];
    if (std::find(out.begin(), out.end(), v) != out.end()) return;
    out.push_back(v);
    l.in[v].push_back(u);
    ++l.edges;
}

bool LayeredGraph::has_edge(int layer, NodeId u, NodeId v) const {
    if (!contains(u, layer)) return false;
    const auto& out = layers_[layer].out[u];
    return std::find(out.begin(), out.end(), v) != out.end();
}

bool LayeredGraph::remove_edge(int layer, NodeId u, NodeId v) {
    if (!contains(u, layer)) return false;
    Layer& l = layers_[layer];
    if (!erase_ordered(l.out[u], v)) return false;
    erase_swap(l.in[v], u);
    --l.edges;
    return true;
}

void LayeredGraph::replace_out_neighbors(int layer, NodeId u, std::span<const NodeId> targets) {
    require_present(u, layer, "replace_out_neighbors");
    for (NodeId v : targets) {
        if (v == u) throw GraphError("replace_out_neighbors: self-loop rejected");
        require_present(v, layer, "replace_out_neighbors");
    }
    Layer& l = layers_[layer];
    for (NodeId v : l.out[u]) erase_swap(l.in[v], u);
    l.edges -= l.out[u].size();
    l.out[u].clear();
    for (NodeId v : targets) {
        if (std::find(l.out[u].begin(), l.out[u].end(), v) != l.out[u].end()) continue;
        l.out[u].push_back(v);
        l.in[v].push_back(u);
        ++l.edges;
    }
}

std::size_t LayeredGraph::detach(NodeId id, int layer) {
    Layer& l = layers_[layer];
    std::size_t removed = 0;
    for (NodeId v : l.out[id]) {
        erase_swap(l.in[v], id);
        ++removed;
    }
    l.edges -= l.out[id].size();
    l.out[id].clear();
    l.out[id].shrink_to_fit();
    for (NodeId u : l.in[id]) {
        if (erase_ordered(l.out[u], id)) {
            --l.edges;
            ++removed;
        }
    }
    l.in[id].clear();
    l.in[id].shrink_to_fit();
    --l.nodes;
    return removed;
}

std::optional<EntryPoint> LayeredGraph::choose_replacement_entry(NodeId leaving,
                                                                 const DistanceFn& dist) const {
    auto live_other = [&](NodeId v) { return v != leaving && is_live(v); };
    if (entry_ && entry_->node == leaving) {
        const int layer = entry_->layer;
        NodeId best = kInvalidNode;
        float best_dist = 0.0f;
        for (NodeId v : out_neighbors(layer, leaving)) {
            if (!live_other(v)) continue;
            const float d = dist ? dist(leaving, v) : 0.0f;
            if (best == kInvalidNode || d < best_dist || (d == best_dist && v < best)) {
                best = v;
                best_dist = d;
            }
        }
        if (best != kInvalidNode) return EntryPoint{best, top_layer(best)};
    }
    for (int layer = num_layers() - 1; layer >= 0; --layer) {
        if (node_count(layer) == 0) continue;
        for (NodeId v = 0; v < nodes_.size(); ++v) {
            if (contains(v, layer) && live_other(v)) return EntryPoint{v, top_layer(v)};
        }
    }
    return std::nullopt;
}

RemovalSummary LayeredGraph::remove_node(NodeId id, RemovalMode mode, RemovalScope scope,
                                         const DistanceFn& dist) {
    if (!contains(id)) throw GraphError("remove_node: unknown node " + std::to_string(id));
    RemovalSummary summary;
    summary.removed_edges.assign(layers_.size(), 0);
    NodeState& st = nodes_[id];

    if (mode == RemovalMode::tombstone) {
        if (!st.tombstone && st.bottom == 0) --live_;
        st.tombstone = true;
        return summary;
    }

    const bool entry_leaves = entry_ && entry_->node == id;
    std::optional<EntryPoint> replacement;
    if (entry_leaves) replacement = choose_replacement_entry(id, dist);

    const bool was_live = st.bottom == 0 && !st.tombstone;
    if (scope == RemovalScope::all_layers) {
        for (int l = st.bottom; l <= st.top; ++l) summary.removed_edges[l] = detach(id, l);
        st.bottom = st.top = -1;
        st.removed = true;
    } else {
        if (st.bottom != 0) throw GraphError("remove_node: node already absent at layer 0");
        summary.removed_edges[0] = detach(id, 0);
        if (st.top == 0) {
            st.bottom = st.top = -1;
            st.removed = true;
        } else {
            st.bottom = 1;
        }
        st.tombstone = true;
    }
    if (was_live) --live_;

    if (entry_leaves) {
        entry_ = replacement;
        summary.entry_repaired = true;
    }
    return summary;
}

bool LayeredGraph::contains(NodeId id) const {
    return id < nodes_.size() && nodes_[id].top >= 0;
}

bool LayeredGraph::contains(NodeId id, int layer) const {
    if (id >= nodes_.size()) return false;
    const NodeState& st = nodes_[id];
    return st.top >= 0 && layer >= st.bottom && layer <= st.top;
}

bool LayeredGraph::is_tombstoned(NodeId id) const {
    return id < nodes_.size() && nodes_[id].tombstone;
}

bool LayeredGraph::is_live(NodeId id) const {
    return id < nodes_.size() && nodes_[id].bottom == 0 && !nodes_[id].tombstone;
}

bool LayeredGraph::is_removed(NodeId id) const {
    return id < nodes_.size() && nodes_[id].removed;
}

int LayeredGraph::top_layer(NodeId id) const { return id < nodes_.size() ? nodes_[id].top : -1; }

int LayeredGraph::bottom_layer(NodeId id) const {
    return id < nodes_.size() ? nodes_[id].bottom : -1;
}

std::span<const NodeId> LayeredGraph::out_neighbors(int layer, NodeId u) const {
    require_present(u, layer, "out_neighbors");
    return layers_[layer].out[u];
}

std::span<const NodeId> LayeredGraph::in_neighbors(int layer, NodeId u) const {
    require_present(u, layer, "in_neighbors");
    return layers_[layer].in[u];
}

std::size_t LayeredGraph::edge_count(int layer) const {
    return layer >= 0 && layer < num_layers() ? layers_[layer].edges : 0;
}

std::size_t LayeredGraph::node_count(int layer) const {
    return layer >= 0 && layer < num_layers() ? layers_[layer].nodes : 0;
}

std::size_t LayeredGraph::total_vertex_count() const {
    std::size_t total = 0;
    for (const auto& l : layers_) total += l.nodes;
    return total;
}

std::size_t LayeredGraph::total_edge_count() const {
    std::size_t total = 0;
    for (const auto& l : layers_) total += l.edges;
    return total;
}

void LayeredGraph::set_entry_point(std::optional<EntryPoint> entry) {
    if (entry) require_present(entry->node, entry->layer, "set_entry_point");
    entry_ = entry;
}

bool LayeredGraph::check_invariants(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int l = 0; l < num_layers(); ++l) {
        const Layer& layer = layers_[l];
        std::size_t edges = 0, nodes = 0;
        for (NodeId u = 0; u < layer.out.size(); ++u) {
            const bool present = contains(u, l);
            if (present) ++nodes;
            if (!present && (!layer.out[u].empty() || !layer.in[u].empty())) {
                return fail("absent node " + std::to_string(u) + " has adjacency at layer " +
                            std::to_string(l));
            }
            edges += layer.out[u].size();
            for (NodeId v : layer.out[u]) {
                if (!contains(v, l)) return fail("edge to absent node " + std::to_string(v));
                if (v == u) return fail("self-loop at " + std::to_string(u));
                const auto& in = layer.in[v];
                if (std::find(in.begin(), in.end(), u) == in.end()) {
                    return fail("mirror violated for edge " + std::to_string(u) + "->" +
                                std::to_string(v));
                }
            }
            for (NodeId w : layer.in[u]) {
                const auto& out = layer.out[w];
                if (std::find(out.begin(), out.end(), u) == out.end()) {
                    return fail("in-list of " + std::to_string(u) + " has stale " + std::to_string(w));
                }
            }
        }
        if (edges != layer.edges) return fail("edge count mismatch at layer " + std::to_string(l));
        if (nodes != layer.nodes) return fail("node count mismatch at layer " + std::to_string(l));
    }
    std::size_t live = 0;
    for (NodeId u = 0; u < nodes_.size(); ++u) {
        const NodeState& st = nodes_[u];
        if (st.top < 0) continue;
        if (st.bottom != 0 && !st.tombstone) return fail("non-tombstoned node missing layer 0");
        if (st.bottom == 0 && !st.tombstone) ++live;
    }
    if (live != live_) return fail("live count mismatch");
    if (entry_ && !contains(entry_->node, 0)) return fail("entry point absent at layer 0");
    return true;
}

LayerSnapshot snapshot_undirected(const LayeredGraph& g, int layer,
                                  const std::function<double(NodeId, NodeId)>& weight_fn) {
    LayerSnapshot snap;
    std::unordered_map<NodeId, std::size_t> index;
    for (NodeId u = 0; u < g.capacity(); ++u) {
        if (g.contains(u, layer)) {
            index.emplace(u, snap.node_ids.size());
            snap.node_ids.push_back(u);
        }
    }
    snap.graph = UndirectedWeightedGraph(snap.node_ids.size());
    for (NodeId u : snap.node_ids) {
        for (NodeId v : g.out_neighbors(layer, u)) {
            const std::size_t a = index.at(u), b = index.at(v);
            if (snap.graph.weight(a, b)) continue;
            snap.graph.add_edge(a, b, weight_fn(std::min(u, v), std::max(u, v)));
        }
    }
    return snap;
}

}  // namespace walknn
