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

#include "walknn/spectral/generators.hpp"

#include <random>
#include <stdexcept>

namespace walknn::spectral {

UndirectedWeightedGraph complete_graph(std::size_t n, double weight) {
    UndirectedWeightedGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v, weight);
    }
    return g;
}

UndirectedWeightedGraph erdos_renyi(std::size_t n, double p, double w_lo, double w_hi, Rng& rng) {
    if (!(w_lo > 0.0) || w_hi < w_lo) throw std::invalid_argument("erdos_renyi: bad weight range");
    std::bernoulli_distribution coin(p);
    std::uniform_real_distribution<double> weight(w_lo, w_hi);
    UndirectedWeightedGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v, weight(rng));
        }
    }
    return g;
}

UndirectedWeightedGraph connected_erdos_renyi(std::size_t n, double p, double w_lo, double w_hi, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto g = erdos_renyi(n, p, w_lo, w_hi, rng);
        if (g.is_connected()) return g;
    }
    auto g = erdos_renyi(n, p, w_lo, w_hi, rng);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        if (!g.weight(u, u + 1)) g.add_edge(u, u + 1, w_lo);
    }
    return g;
}

UndirectedWeightedGraph planted_clusters(std::size_t clusters, std::size_t size, double intra, double inter) {
    const std::size_t n = clusters * size;
    UndirectedWeightedGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            g.add_edge(u, v, u / size == v / size ? intra : inter / static_cast<double>(n));
        }
    }
    return g;
}

}  // namespace walknn::spectral
