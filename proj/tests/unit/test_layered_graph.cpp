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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "walknn/graph/layered_graph.hpp"
#include "walknn/graph/snapshot.hpp"
#include "walknn/graph/undirected_graph.hpp"

namespace {

using namespace walknn;

bool contains_id(std::span<const NodeId> ids, NodeId v) {
    return std::find(ids.begin(), ids.end(), v) != ids.end();
}

void expect_valid(const LayeredGraph& g) {
    std::string why;
    EXPECT_TRUE(g.check_invariants(&why)) << why;
}

// Independent full scans used as oracles.
std::size_t recount_edges(const LayeredGraph& g, int layer) {
    std::size_t n = 0;
    for (NodeId u = 0; u < g.capacity(); ++u) {
        if (g.contains(u, layer)) n += g.out_neighbors(layer, u).size();
    }
    return n;
}

bool mirror_holds(const LayeredGraph& g) {
    for (int l = 0; l < g.num_layers(); ++l) {
        for (NodeId u = 0; u < g.capacity(); ++u) {
            if (!g.contains(u, l)) continue;
            for (NodeId v : g.out_neighbors(l, u)) {
                if (!contains_id(g.in_neighbors(l, v), u)) return false;
            }
            for (NodeId w : g.in_neighbors(l, u)) {
                if (!contains_id(g.out_neighbors(l, w), u)) return false;
            }
        }
    }
    return true;
}

bool referenced_anywhere(const LayeredGraph& g, NodeId id) {
    for (int l = 0; l < g.num_layers(); ++l) {
        for (NodeId u = 0; u < g.capacity(); ++u) {
            if (!g.contains(u, l)) continue;
            if (contains_id(g.out_neighbors(l, u), id) || contains_id(g.in_neighbors(l, u), id)) return true;
        }
    }
    return false;
}

TEST(LayeredGraph, FirstUpsertBecomesEntry) {
    LayeredGraph g;
    g.upsert_node(0, 2);
    for (int l = 0; l <= 2; ++l) EXPECT_TRUE(g.contains(0, l));
    ASSERT_TRUE(g.entry_point());
    EXPECT_EQ(*g.entry_point(), (EntryPoint{0, 2}));
}

TEST(LayeredGraph, LowerUpsertKeepsEntry) {
    LayeredGraph g;
    g.upsert_node(0, 2);
    g.upsert_node(1, 0);
    EXPECT_EQ(*g.entry_point(), (EntryPoint{0, 2}));
    EXPECT_FALSE(g.contains(1, 1));
}

TEST(LayeredGraph, UpsertIsIdempotent) {
    LayeredGraph g;
    g.upsert_node(0, 2);
    g.upsert_node(1, 2);
    g.add_edge(1, 0, 1);
    g.upsert_node(0, 2);
    EXPECT_EQ(g.node_count(0), 2u);
    EXPECT_EQ(g.node_count(2), 2u);
    EXPECT_EQ(g.out_neighbors(1, 0).size(), 1u);
    expect_valid(g);
}

TEST(LayeredGraph, UpsertExtendsUpward) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.upsert_node(1, 3);
    EXPECT_EQ(g.top_layer(1), 3);
    EXPECT_EQ(*g.entry_point(), (EntryPoint{1, 3}));
    expect_valid(g);
}

TEST(LayeredGraph, AddEdgeMirrors) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.add_edge(0, 0, 1);
    EXPECT_TRUE(contains_id(g.out_neighbors(0, 0), 1));
    EXPECT_TRUE(contains_id(g.in_neighbors(0, 1), 0));
    EXPECT_FALSE(g.has_edge(0, 1, 0));
}

TEST(LayeredGraph, DuplicateEdgeIsNoop) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 0, 1);
    EXPECT_EQ(g.edge_count(0), 1u);
    EXPECT_EQ(g.in_neighbors(0, 1).size(), 1u);
}

TEST(LayeredGraph, RejectsSelfLoopAndMissingEndpoint) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    EXPECT_THROW(g.add_edge(0, 0, 0), GraphError);
    EXPECT_THROW(g.add_edge(1, 0, 1), GraphError);
    EXPECT_THROW(g.add_edge(0, 0, 7), GraphError);
}

TEST(LayeredGraph, TombstoneKeepsAdjacency) {
    LayeredGraph g;
    for (NodeId i = 0; i < 3; ++i) g.upsert_node(i, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 1, 2);
    g.remove_node(1, RemovalMode::tombstone);
    EXPECT_TRUE(g.is_tombstoned(1));
    EXPECT_FALSE(g.is_live(1));
    EXPECT_TRUE(g.contains(1, 0));
    EXPECT_EQ(g.edge_count(0), 2u);
    EXPECT_EQ(g.live_count(), 2u);
    expect_valid(g);
}

TEST(LayeredGraph, HardRemovalOnPath) {
    // a=0, b=1, c=2 with both directions on each link.
    LayeredGraph g;
    for (NodeId i = 0; i < 3; ++i) g.upsert_node(i, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 1, 0);
    g.add_edge(0, 1, 2);
    g.add_edge(0, 2, 1);
    const auto summary = g.remove_node(0, RemovalMode::hard);
    EXPECT_EQ(summary.removed_edges.at(0), 2u);
    EXPECT_FALSE(g.has_edge(0, 1, 0));
    EXPECT_TRUE(g.has_edge(0, 1, 2));
    EXPECT_TRUE(g.has_edge(0, 2, 1));
    EXPECT_TRUE(g.is_removed(0));
    EXPECT_FALSE(referenced_anywhere(g, 0));
    expect_valid(g);
}

TEST(LayeredGraph, RemovedIdCannotReturn) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.remove_node(0, RemovalMode::hard);
    EXPECT_THROW(g.upsert_node(0, 0), GraphError);
    EXPECT_THROW(g.remove_node(0, RemovalMode::hard), GraphError);
    EXPECT_THROW(g.remove_node(9, RemovalMode::tombstone), GraphError);
}

TEST(LayeredGraph, EntryRepairPrefersNearestLiveOutNeighbor) {
    LayeredGraph g;
    g.upsert_node(0, 2);
    g.upsert_node(1, 2);
    g.upsert_node(2, 2);
    g.upsert_node(3, 0);
    g.add_edge(2, 0, 1);
    g.add_edge(2, 0, 2);
    const auto dist = [](NodeId a, NodeId b) { return static_cast<float>(a == 0 && b == 2 ? 1.0 : 5.0); };
    const auto summary = g.remove_node(0, RemovalMode::hard, RemovalScope::all_layers, dist);
    EXPECT_TRUE(summary.entry_repaired);
    EXPECT_EQ(*g.entry_point(), (EntryPoint{2, 2}));
}

TEST(LayeredGraph, EntryRepairTiesByLowestId) {
    LayeredGraph g;
    for (NodeId i = 0; i < 4; ++i) g.upsert_node(i, 1);
    g.add_edge(1, 0, 3);
    g.add_edge(1, 0, 2);
    g.remove_node(0, RemovalMode::hard);
    EXPECT_EQ(*g.entry_point(), (EntryPoint{2, 1}));
}

TEST(LayeredGraph, EntryRepairFallsBackToHighestPopulatedLayer) {
    LayeredGraph g;
    g.upsert_node(0, 3);
    g.upsert_node(1, 0);
    g.upsert_node(2, 1);
    g.upsert_node(3, 1);
    g.remove_node(0, RemovalMode::hard);
    ASSERT_TRUE(g.entry_point());
    EXPECT_EQ(*g.entry_point(), (EntryPoint{2, 1}));
    g.remove_node(2, RemovalMode::hard);
    g.remove_node(3, RemovalMode::hard);
    EXPECT_EQ(*g.entry_point(), (EntryPoint{1, 0}));
    g.remove_node(1, RemovalMode::hard);
    EXPECT_FALSE(g.entry_point());
}

TEST(LayeredGraph, BottomScopeLeavesUpperTombstone) {
    LayeredGraph g;
    for (NodeId i = 0; i < 3; ++i) g.upsert_node(i, 1);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 2, 0);
    g.add_edge(1, 0, 1);
    g.add_edge(1, 1, 0);
    g.remove_node(0, RemovalMode::hard, RemovalScope::bottom_layer);
    EXPECT_FALSE(g.contains(0, 0));
    EXPECT_TRUE(g.contains(0, 1));
    EXPECT_TRUE(g.is_tombstoned(0));
    EXPECT_EQ(g.edge_count(0), 0u);
    EXPECT_EQ(g.edge_count(1), 2u);
    EXPECT_FALSE(g.is_removed(0));
    EXPECT_TRUE(g.contains(g.entry_point()->node, 0));
    expect_valid(g);
}

TEST(LayeredGraph, BottomScopeRemovesBottomOnlyNode) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.remove_node(1, RemovalMode::hard, RemovalScope::bottom_layer);
    EXPECT_TRUE(g.is_removed(1));
    EXPECT_EQ(g.total_vertex_count(), 1u);
}

TEST(LayeredGraph, ReplaceOutNeighbors) {
    LayeredGraph g;
    for (NodeId i = 0; i < 4; ++i) g.upsert_node(i, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 0, 2);
    const std::vector<NodeId> next{3, 2, 3};
    g.replace_out_neighbors(0, 0, next);
    const auto out = g.out_neighbors(0, 0);
    EXPECT_EQ(std::vector<NodeId>(out.begin(), out.end()), (std::vector<NodeId>{3, 2}));
    EXPECT_TRUE(g.in_neighbors(0, 1).empty());
    expect_valid(g);
}

TEST(LayeredGraph, RandomOperationsKeepInvariants) {
    std::mt19937 rng(11);
    LayeredGraph g;
    std::set<NodeId> removed;
    const NodeId n = 60;
    for (NodeId i = 0; i < n; ++i) g.upsert_node(i, static_cast<int>(rng() % 3));
    for (int step = 0; step < 4000; ++step) {
        const NodeId u = rng() % n, v = rng() % n;
        const int layer = static_cast<int>(rng() % 3);
        const unsigned op = rng() % 100;
        if (op < 70) {
            if (u != v && g.contains(u, layer) && g.contains(v, layer)) g.add_edge(layer, u, v);
        } else if (op < 90) {
            g.remove_edge(layer, u, v);
        } else if (op < 95 && g.contains(u) && !removed.count(u)) {
            g.remove_node(u, RemovalMode::hard);
            removed.insert(u);
        } else if (g.contains(u, 0)) {
            g.remove_node(u, RemovalMode::tombstone);
        }
    }
    expect_valid(g);
    EXPECT_TRUE(mirror_holds(g));
    for (int l = 0; l < g.num_layers(); ++l) EXPECT_EQ(g.edge_count(l), recount_edges(g, l));
    for (NodeId id : removed) EXPECT_FALSE(referenced_anywhere(g, id));
    for (NodeId u = 0; u < n; ++u) {
        for (int l = 1; l <= g.top_layer(u); ++l) {
            if (g.contains(u, l) && !g.is_tombstoned(u)) EXPECT_TRUE(g.contains(u, l - 1));
        }
    }
}

TEST(Snapshot, CoalescesBothDirections) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.add_edge(0, 0, 1);
    g.add_edge(0, 1, 0);
    int calls = 0;
    const auto snap = snapshot_undirected(g, 0, [&](NodeId, NodeId) {
        ++calls;
        return 2.0;
    });
    EXPECT_EQ(snap.graph.edge_count(), 1u);
    EXPECT_EQ(calls, 1);
    EXPECT_EQ(*snap.graph.weight(0, 1), 2.0);
}

TEST(Snapshot, SymmetrizesSingleDirection) {
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.add_edge(0, 1, 0);
    const auto snap = snapshot_undirected(g, 0, [](NodeId, NodeId) { return 1.0; });
    EXPECT_EQ(snap.graph.edge_count(), 1u);
}

TEST(Snapshot, EmptyLayerKeepsVertices) {
    LayeredGraph g;
    for (NodeId i = 0; i < 5; ++i) g.upsert_node(i, 0);
    const auto snap = snapshot_undirected(g, 0, [](NodeId, NodeId) { return 1.0; });
    EXPECT_EQ(snap.graph.vertex_count(), 5u);
    EXPECT_EQ(snap.graph.edge_count(), 0u);
}

TEST(Snapshot, BinaryRoundTrip) {
    std::mt19937 rng(5);
    LayeredGraph g;
    const NodeId n = 40;
    for (NodeId i = 0; i < n; ++i) g.upsert_node(i, static_cast<int>(rng() % 3));
    for (int e = 0; e < 400; ++e) {
        const NodeId u = rng() % n, v = rng() % n;
        const int l = static_cast<int>(rng() % 3);
        if (u != v && g.contains(u, l) && g.contains(v, l)) g.add_edge(l, u, v);
    }
    // Make every node's top layer recoverable from its edges.
    for (NodeId u = 0; u < n; ++u) {
        const int top = g.top_layer(u);
        if (g.out_neighbors(top, u).empty() && g.in_neighbors(top, u).empty()) {
            for (NodeId v = 0; v < n; ++v) {
                if (v != u && g.contains(v, top)) {
                    g.add_edge(top, u, v);
                    break;
                }
            }
        }
    }
    std::stringstream buf;
    write_snapshot(g, buf);
    const std::string bytes = buf.str();
    EXPECT_EQ(bytes.substr(0, 4), "WNNG");
    EXPECT_EQ(static_cast<unsigned char>(bytes[4]), kSnapshotVersion);

    const LayeredGraph back = read_snapshot(buf);
    ASSERT_EQ(back.num_layers(), g.num_layers());
    for (int l = 0; l < g.num_layers(); ++l) {
        EXPECT_EQ(back.edge_count(l), g.edge_count(l));
        for (NodeId u = 0; u < n; ++u) {
            if (!g.contains(u, l)) continue;
            ASSERT_TRUE(back.contains(u, l));
            const auto a = g.out_neighbors(l, u);
            const auto b = back.out_neighbors(l, u);
            EXPECT_EQ(std::vector<NodeId>(a.begin(), a.end()), std::vector<NodeId>(b.begin(), b.end()));
        }
    }
    EXPECT_EQ(back.entry_point()->layer, g.entry_point()->layer);
    expect_valid(back);
}

TEST(Snapshot, RejectsCorruptInput) {
    std::stringstream bad("XXXX");
    EXPECT_THROW(read_snapshot(bad), GraphError);
    LayeredGraph g;
    g.upsert_node(0, 0);
    g.upsert_node(1, 0);
    g.add_edge(0, 0, 1);
    std::stringstream buf;
    write_snapshot(g, buf);
    std::string bytes = buf.str();
    bytes.resize(bytes.size() - 3);
    std::stringstream truncated(bytes);
    EXPECT_THROW(read_snapshot(truncated), GraphError);
}

TEST(UndirectedGraph, BasicContracts) {
    UndirectedWeightedGraph g(3);
    g.add_edge(0, 1, 2.0);
    EXPECT_THROW(g.add_edge(1, 0, 1.0), GraphError);
    EXPECT_THROW(g.add_edge(1, 1, 1.0), GraphError);
    EXPECT_THROW(g.add_edge(1, 2, 0.0), GraphError);
    EXPECT_THROW(g.add_edge(1, 5, 1.0), GraphError);
    g.accumulate_edge(1, 0, 1.5);
    EXPECT_DOUBLE_EQ(*g.weight(0, 1), 3.5);
    EXPECT_FALSE(g.is_connected());
    g.add_edge(1, 2, 1.0);
    EXPECT_TRUE(g.is_connected());
    g.add_self_loop(2, 0.5);
    EXPECT_TRUE(g.has_self_loops());
    const auto deg = g.degrees();
    EXPECT_DOUBLE_EQ(deg[0], 3.5);
    EXPECT_DOUBLE_EQ(deg[2], 1.5);
}

}  // namespace
