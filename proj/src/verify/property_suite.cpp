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

#include "walknn/verify/property_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "walknn/deletion/star_mesh.hpp"
#include "walknn/spectral/bound_check.hpp"
#include "walknn/spectral/expansion.hpp"
#include "walknn/spectral/generators.hpp"
#include "walknn/spectral/hitting_time.hpp"
#include "walknn/spectral/laplacian.hpp"
#include "walknn/spectral/resistance.hpp"
#include "walknn/spectral/sparsify.hpp"

namespace walknn::verify {

namespace {

using namespace walknn::spectral;

struct Context {
    Rng rng;
    double scale;
    std::size_t trials(std::size_t full) const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(full * scale)));
    }
    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

PropertyOutcome star_mesh_transitions(Context& ctx) {
    const std::size_t trials = ctx.trials(1000);
    double worst_p = 0.0, worst_deg = 0.0;
    std::size_t done = 0;
    while (done < trials) {
        const std::size_t n = ctx.uniform(3, 12);
        auto g = erdos_renyi(n, 0.6, 0.1, 5.0, ctx.rng);
        const std::size_t p = ctx.uniform(0, n - 1);
        const auto adj = g.adjacency();
        if (adj[p].empty()) continue;
        ++done;
        const auto deg = g.degrees();
        const auto mesh = star_mesh_weights(g, p, StarMeshMode::exact_with_selfloops);
        const auto h = apply_star_mesh(g, p, mesh);
        const auto deg2 = h.degrees();
        for (const auto& [u, wu] : adj[p]) {
            worst_deg = std::max(worst_deg, std::abs(deg2[u] - deg[u]) / deg[u]);
            for (const auto& [v, wv] : adj[p]) {
                const double before = g.weight(u, v).value_or(0.0) / deg[u] + (wu / deg[u]) * (wv / deg[p]);
                const double after = h.weight(u, v).value_or(0.0) / deg2[u];
                worst_p = std::max(worst_p, std::abs(after - before));
            }
        }
    }
    const bool ok = worst_p <= 1e-12 && worst_deg <= 1e-12;
    return {"star_mesh_transitions", ok,
            fmt("%.0f graphs, max transition error %.3g, max relative degree error %.3g", double(trials), worst_p,
                worst_deg)};
}

PropertyOutcome tetali_consistency(Context& ctx) {
    const std::size_t trials = ctx.trials(200);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = ctx.uniform(2, 16);
        const auto g = connected_erdos_renyi(n, 0.4, 0.1, 3.0, ctx.rng);
        const auto a = hitting_times(g, HittingMethod::direct);
        const auto b = hitting_times(g, HittingMethod::tetali);
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) {
                if (i != j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / std::abs(a(i, j)));
            }
        }
    }
    return {"tetali_consistency", worst <= 1e-8,
            fmt("%.0f graphs, max relative gap %.3g", double(trials), worst)};
}

PropertyOutcome sparsifier_frobenius(Context& ctx) {
    const std::size_t trials = ctx.trials(100);
    std::ostringstream detail;
    bool ok = true;
    for (double eps : {0.25, 0.5}) {
        std::size_t good = 0;
        const std::size_t s = draws_for_epsilon(eps);
        for (std::size_t t = 0; t < trials; ++t) {
            const auto g = connected_erdos_renyi(12, 0.5, 0.5, 2.0, ctx.rng);
            const auto out = row_norm_sparsify(g, s, ctx.rng);
            good += out.frobenius_error <= eps * out.trace_w;
        }
        const double rate = static_cast<double>(good) / static_cast<double>(trials);
        ok = ok && rate >= 0.9;
        detail << "eps=" << eps << " s=" << s << " success=" << rate << "; ";
    }
    return {"sparsifier_frobenius", ok, detail.str()};
}

PropertyOutcome sparsifier_unbiased(Context& ctx) {
    const std::size_t trials = ctx.trials(10000);
    const auto g = connected_erdos_renyi(6, 0.7, 0.5, 2.0, ctx.rng);
    const Eigen::MatrixXd l = laplacian(g);
    const std::size_t s = 20;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(l.rows(), l.cols());
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(l.rows(), l.cols());
    for (std::size_t t = 0; t < trials; ++t) {
        const Eigen::MatrixXd x = laplacian(row_norm_sparsify(g, s, ctx.rng).graph);
        sum += x;
        sq += x.cwiseProduct(x);
    }
    const double nt = static_cast<double>(trials);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        const double mean = sum(i, i) / nt;
        const double var = std::max(sq(i, i) / nt - mean * mean, 1e-300);
        worst = std::max(worst, std::abs(mean - l(i, i)) / std::sqrt(var / nt));
    }
    return {"sparsifier_unbiased", worst <= 3.0,
            fmt("%.0f trials, worst diagonal deviation %.3g sigma", nt, worst)};
}

PropertyOutcome hitting_time_bound(Context& ctx) {
    const std::size_t wanted = ctx.trials(50);
    std::size_t checked = 0, attempts = 0, failures = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    while (checked < wanted && attempts < 50 * wanted) {
        ++attempts;
        const std::size_t n = ctx.uniform(5, 10);
        const auto g = connected_erdos_renyi(n, 0.9, 0.5, 1.5, ctx.rng);
        const auto sparse = row_norm_sparsify(g, draws_for_epsilon(0.02), ctx.rng);
        const auto report = hitting_time_bound_check(g, sparse.graph);
        if (report.vacuous || !report.prime_connected) continue;
        ++checked;
        failures += report.violations > 0;
        worst_margin = std::min(worst_margin, report.min_margin);
    }
    const bool ok = checked == wanted && failures == 0;
    return {"hitting_time_bound", ok,
            fmt("%.0f non-vacuous pairs (%.0f drawn), min margin %.3g", double(checked), double(attempts),
                worst_margin)};
}

PropertyOutcome single_cluster(Context& ctx) {
    const std::size_t seeds = ctx.trials(20);
    const std::size_t n = 64;
    const auto g = complete_graph(n);
    const std::size_t s = (n - 1) * n;  // max hitting time of K_n is n - 1
    std::size_t good = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < seeds; ++t) {
        const auto sparse = row_norm_sparsify(g, s, ctx.rng);
        const auto report = single_cluster_bound_check(g, sparse.graph);
        good += report.holds();
        worst = std::max(worst, report.worst_ratio);
    }
    const double rate = static_cast<double>(good) / static_cast<double>(seeds);
    return {"single_cluster_hitting", rate >= 0.9,
            fmt("success %.3g over %.0f seeds, worst |h-h'|/sqrt(nh) %.3g", rate, double(seeds), worst)};
}

PropertyOutcome cheeger_sweep(Context& ctx) {
    const std::size_t trials = ctx.trials(100);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = connected_erdos_renyi(10, 0.4, 0.1, 2.0, ctx.rng);
        bad += !cheeger_check(g).holds;
    }
    return {"cheeger_inequality", bad == 0, fmt("%.0f graphs, %.0f violations", double(trials), double(bad))};
}

PropertyOutcome laplacian_forms(Context& ctx) {
    const std::size_t trials = ctx.trials(100);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = erdos_renyi(ctx.uniform(2, 20), 0.5, 0.1, 4.0, ctx.rng);
        const Eigen::MatrixXd l = laplacian(g);
        worst = std::max(worst, (l - laplacian_factored(g)).cwiseAbs().maxCoeff());
        worst = std::max(worst, l.rowwise().sum().cwiseAbs().maxCoeff());
    }
    return {"laplacian_forms", worst <= 1e-12, fmt("%.0f graphs, max deviation %.3g", double(trials), worst)};
}

PropertyOutcome resistance_metric(Context& ctx) {
    const std::size_t trials = ctx.trials(50);
    double worst = 0.0;
    bool zero_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = connected_erdos_renyi(ctx.uniform(3, 12), 0.5, 0.2, 3.0, ctx.rng);
        const auto r = resistance_matrix(g);
        const Eigen::Index n = r.rows();
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                worst = std::max(worst, std::abs(r(a, b) - r(b, a)));
                if (a != b && !(r(a, b) > 0.0)) zero_ok = false;
                for (Eigen::Index c = 0; c < n; ++c) worst = std::max(worst, r(a, c) - r(a, b) - r(b, c));
            }
        }
    }
    return {"resistance_metric", zero_ok && worst <= 1e-9,
            fmt("%.0f graphs, max symmetry/triangle excess %.3g", double(trials), worst)};
}

PropertyOutcome lambda2_perturbation(Context& ctx) {
    const std::size_t trials = ctx.trials(100);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = connected_erdos_renyi(ctx.uniform(4, 14), 0.6, 0.5, 2.0, ctx.rng);
        const auto out = row_norm_sparsify(g, ctx.uniform(10, 2000), ctx.rng);
        const Eigen::MatrixXd l = laplacian(g);
        const Eigen::MatrixXd lp = laplacian(out.graph);
        const double gap = std::abs(symmetric_eigenvalues(l)(1) - symmetric_eigenvalues(lp)(1));
        worst = std::max(worst, gap - (l - lp).norm());
    }
    return {"lambda2_perturbation", worst <= 1e-9,
            fmt("%.0f pairs, max |dlambda2| - ||dL||_F = %.3g", double(trials), worst)};
}

using Property = PropertyOutcome (*)(Context&);

struct Named {
    const char* name;
    Property run;
};

constexpr Named kProperties[] = {
    {"laplacian_forms", laplacian_forms},
    {"star_mesh_transitions", star_mesh_transitions},
    {"tetali_consistency", tetali_consistency},
    {"resistance_metric", resistance_metric},
    {"cheeger_inequality", cheeger_sweep},
    {"sparsifier_unbiased", sparsifier_unbiased},
    {"sparsifier_frobenius", sparsifier_frobenius},
    {"lambda2_perturbation", lambda2_perturbation},
    {"hitting_time_bound", hitting_time_bound},
    {"single_cluster_hitting", single_cluster},
};

}  // namespace

std::vector<std::string> spectral_property_names() {
    std::vector<std::string> names;
    for (const Named& p : kProperties) names.emplace_back(p.name);
    return names;
}

std::vector<PropertyOutcome> run_spectral_properties(const SuiteOptions& options,
                                                     const std::vector<std::string>& only,
                                                     const std::function<void(const PropertyOutcome&)>& on_done) {
    const auto names = spectral_property_names();
    for (const std::string& name : only) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw std::invalid_argument("unknown spectral property: " + name);
        }
    }
    std::vector<PropertyOutcome> out;
    std::size_t index = 0;
    for (const Named& p : kProperties) {
        ++index;
        if (!only.empty() && std::find(only.begin(), only.end(), p.name) == only.end()) continue;
        // Each property draws from its own stream so selections reproduce.
        Context ctx{Rng(options.seed * 1000003ULL + index), options.scale};
        const auto t0 = std::chrono::steady_clock::now();
        PropertyOutcome r = p.run(ctx);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_done) on_done(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string suite_json(const std::vector<PropertyOutcome>& outcomes, const SuiteOptions& options) {
    nlohmann::ordered_json doc;
    doc["passed"] = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
    doc["seed"] = options.seed;
    doc["scale"] = options.scale;
    doc["properties"] = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
        doc["properties"].push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail},
                                     {"seconds", o.seconds}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace walknn::verify
