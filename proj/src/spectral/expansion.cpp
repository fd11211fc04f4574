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

#include "walknn/spectral/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "walknn/common.hpp"
#include "walknn/spectral/laplacian.hpp"

namespace walknn::spectral {

ExpansionResult edge_expansion(const UndirectedWeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2 || n > kMaxExpansionVertices) {
        throw GraphError("edge_expansion: exhaustive scan needs 2 <= n <= 24");
    }
    std::vector<double> w(n * n, 0.0);
    for (const WeightedEdge& e : g.edges()) {
        if (e.u == e.v) continue;
        w[e.u * n + e.v] = e.weight;
        w[e.v * n + e.u] = e.weight;
    }
    // Vertex n-1 stays outside S; S and its complement give the same ratio.
    const std::uint32_t limit = 1u << (n - 1);
    std::vector<char> in(n, 0);
    double cut = 0.0;
    std::size_t size = 0;
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    std::uint32_t gray = 0;
    for (std::uint32_t k = 1; k < limit; ++k) {
        const std::uint32_t next = k ^ (k >> 1);
        const auto x = static_cast<std::size_t>(std::countr_zero(next ^ gray));
        gray = next;
        for (std::size_t y = 0; y < n; ++y) {
            const double wxy = w[x * n + y];
            if (wxy == 0.0 || y == x) continue;
            cut += in[y] == in[x] ? wxy : -wxy;
        }
        in[x] ^= 1;
        size += in[x] ? 1 : static_cast<std::size_t>(-1);
        const double ratio = std::max(cut, 0.0) / static_cast<double>(std::min(size, n - size));
        if (ratio < best) {
            best = ratio;
            best_mask = gray;
        }
    }
    ExpansionResult out;
    out.phi = best;
    std::vector<std::size_t> s, rest;
    for (std::size_t i = 0; i < n; ++i) ((best_mask >> i) & 1u && i != n - 1 ? s : rest).push_back(i);
    out.witness = s.size() <= rest.size() ? s : rest;
    return out;
}

CheegerReport cheeger_check(const UndirectedWeightedGraph& g) {
    CheegerReport r;
    r.phi = edge_expansion(g).phi;
    const Eigen::MatrixXd l = laplacian(g);
    const Eigen::VectorXd lambda = symmetric_eigenvalues(l);
    r.lambda2 = std::max(lambda(1), 0.0);
    r.d_max = l.diagonal().maxCoeff();
    r.lower = r.d_max > 0.0 ? r.phi * r.phi / (2.0 * r.d_max) : 0.0;
    r.upper = 2.0 * r.phi;
    const double slack = 1e-9 * std::max(1.0, r.upper);
    r.holds = r.lower <= r.lambda2 + slack && r.lambda2 <= r.upper + slack;
    return r;
}

}  // namespace walknn::spectral
