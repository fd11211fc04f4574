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
#include <span>
#include <string_view>
#include <vector>

#include "walknn/index/hnsw_index.hpp"

namespace walknn {

/// Every strategy except `tombstone` hard-removes the node at layer 0 and
/// leaves it tombstoned in the layers above.
enum class DeletionStrategy {
    tombstone,
    nopatch,
    local,
    fresh,
    spatch_global,
    spatch_pernode,
    clique,
    global_reconnect,
};

std::string_view to_string(DeletionStrategy strategy);
DeletionStrategy parse_deletion_strategy(std::string_view name);
std::span<const DeletionStrategy> all_deletion_strategies();

struct DeletionConfig {
    DeletionStrategy strategy = DeletionStrategy::spatch_pernode;
    /// Fan-out multiplier for spatch, prune slack for fresh.
    double alpha = 1.2;
    double r_hat_delete = 1.0;
    /// spatch: only add the selected edges, never drop existing ones.
    bool keep_existing = true;

    void validate() const;
};

struct DeletionSummary {
    std::size_t edges_added = 0;
    std::size_t edges_removed = 0;
    /// Patching was skipped because N_in(p) or N_out(p) was empty.
    bool degraded = false;
    /// Nodes whose layer-0 out-list was rebuilt (global reconnect).
    std::size_t relinked = 0;
};

struct PatchEdge {
    NodeId from = kInvalidNode;
    NodeId to = kInvalidNode;
    double log_weight = 0.0;
    friend bool operator==(const PatchEdge&, const PatchEdge&) = default;
};

/// Edges spatch would create for p, in selection order. Weights are
/// exp(-r^2 |a-b|^2) with r = r_hat_delete / mean evaluated distance, all in
/// log domain. Empty with `degraded` set when either neighborhood is empty.
std::vector<PatchEdge> spatch_plan(const HnswIndex& index, NodeId p, const DeletionConfig& cfg,
                                   bool* degraded = nullptr);

/// alpha-pruning: scan `candidates` nearest-first from u, accept the nearest
/// survivor c and discard every c' with alpha * d(c, c') <= d(u, c'), up to
/// `cap` accepted.
std::vector<NodeId> robust_prune(const HnswIndex& index, NodeId u, std::span<const NodeId> candidates,
                                 double alpha, std::size_t cap);

DeletionSummary delete_tombstone(HnswIndex& index, NodeId p);
DeletionSummary delete_nopatch(HnswIndex& index, NodeId p);
DeletionSummary delete_local_reconnect(HnswIndex& index, NodeId p);
DeletionSummary delete_freshdiskann(HnswIndex& index, NodeId p, double alpha);
DeletionSummary delete_clique(HnswIndex& index, NodeId p);
DeletionSummary delete_global_reconnect(HnswIndex& index, NodeId p);
DeletionSummary delete_spatch(HnswIndex& index, NodeId p, const DeletionConfig& cfg);

/// Dispatches on cfg.strategy. Throws GraphError when p is not live.
DeletionSummary delete_point(HnswIndex& index, NodeId p, const DeletionConfig& cfg);

}  // namespace walknn
