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

#include "walknn/spectral/sparsify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "walknn/spectral/laplacian.hpp"

namespace walknn::spectral {

std::vector<double> sampling_probabilities(const UndirectedWeightedGraph& g) {
    std::vector<double> p(g.edge_count(), 0.0);
    double total = 0.0;
    for (const WeightedEdge& e : g.edges()) total += e.u != e.v ? e.weight : 0.0;
    if (!(total > 0.0)) throw std::invalid_argument("row_norm_sparsify: graph has no edges");
    for (std::size_t i = 0; i < p.size(); ++i) {
        const WeightedEdge& e = g.edges()[i];
        if (e.u != e.v) p[i] = e.weight / total;
    }
    return p;
}

SparsifyOutcome row_norm_sparsify(const UndirectedWeightedGraph& g, std::size_t s, Rng& rng) {
    if (s < 1) throw std::invalid_argument("row_norm_sparsify: s must be positive");
    const std::vector<double> p = sampling_probabilities(g);
    std::discrete_distribution<std::size_t> pick(p.begin(), p.end());
    SparsifyOutcome out;
    out.graph = UndirectedWeightedGraph(g.vertex_count());
    out.samples = s;
    for (std::size_t k = 0; k < s; ++k) {
        const std::size_t i = pick(rng);
        const WeightedEdge& e = g.edges()[i];
        out.graph.accumulate_edge(e.u, e.v, e.weight / (p[i] * static_cast<double>(s)));
    }
    for (const WeightedEdge& e : g.edges()) out.trace_w += e.u != e.v ? e.weight : 0.0;
    out.frobenius_error = (laplacian(out.graph) - laplacian(g)).norm();
    return out;
}

std::size_t draws_for_epsilon(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
    return static_cast<std::size_t>(std::ceil(200.0 / (eps * eps)));
}

}  // namespace walknn::spectral
