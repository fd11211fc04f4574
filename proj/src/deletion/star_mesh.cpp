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

#include "walknn/deletion/star_mesh.hpp"

#include <string>
#include <vector>

#include "walknn/common.hpp"

namespace walknn {

StarMeshResult star_mesh_weights(const UndirectedWeightedGraph& g, std::size_t p, StarMeshMode mode) {
    if (p >= g.vertex_count()) throw GraphError("star_mesh_weights: vertex out of range");
    if (g.weight(p, p)) throw GraphError("star_mesh_weights: self-loop at the removed vertex");
    std::vector<std::pair<std::size_t, double>> star;
    double deg_p = 0.0;
    for (const WeightedEdge& e : g.edges()) {
        if (e.u == p || e.v == p) {
            star.emplace_back(e.u == p ? e.v : e.u, e.weight);
            deg_p += e.weight;
        }
    }
    if (star.empty() || !(deg_p > 0.0)) {
        throw GraphError("star_mesh_weights: vertex " + std::to_string(p) + " is isolated");
    }

    StarMeshResult out;
    for (std::size_t i = 0; i < star.size(); ++i) {
        const auto [u, wu] = star[i];
        for (std::size_t j = i + 1; j < star.size(); ++j) {
            const auto [v, wv] = star[j];
            const double base = g.weight(u, v).value_or(0.0);
            out.new_weights[{std::min(u, v), std::max(u, v)}] = base + wu * wv / deg_p;
        }
        if (mode == StarMeshMode::exact_with_selfloops) out.self_loops[u] = wu * wu / deg_p;
    }
    return out;
}

UndirectedWeightedGraph apply_star_mesh(const UndirectedWeightedGraph& g, std::size_t p,
                                        const StarMeshResult& mesh) {
    UndirectedWeightedGraph h(g.vertex_count());
    for (const WeightedEdge& e : g.edges()) {
        if (e.u == p || e.v == p) continue;
        if (mesh.new_weights.count({std::min(e.u, e.v), std::max(e.u, e.v)})) continue;
        if (e.u == e.v) {
            h.add_self_loop(e.u, e.weight);
        } else {
            h.add_edge(e.u, e.v, e.weight);
        }
    }
    for (const auto& [key, w] : mesh.new_weights) h.add_edge(key.first, key.second, w);
    for (const auto& [u, w] : mesh.self_loops) h.add_self_loop(u, w);
    return h;
}

}  // namespace walknn
