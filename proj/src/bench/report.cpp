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

#include "walknn/bench/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace walknn::bench {

namespace {

constexpr const char* kHeader =
    "step,points_remaining,recall_at_10,distance_computations,deletion_seconds,bottom_layer_edges,vertex_count";

std::string real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

double round_to_report(double x) { return std::strtod(real(x).c_str(), nullptr); }

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format: " + std::string(name));
}

ReportFormat format_from_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? ReportFormat::json : ReportFormat::csv;
}

void write_report(std::ostream& out, const std::vector<MetricRow>& rows, ReportFormat format) {
    if (format == ReportFormat::csv) {
        out << kHeader << '\n';
        for (const MetricRow& r : rows) {
            out << r.step << ',' << r.points_remaining << ',' << real(r.recall_at_10) << ','
                << real(r.distance_computations) << ',' << real(r.deletion_seconds) << ',' << r.bottom_layer_edges
                << ',' << r.vertex_count << '\n';
        }
        return;
    }
    // Reals go out as the same 6-digit literals the CSV uses.
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const MetricRow& r = rows[i];
        out << (i ? ",\n " : "\n ") << "{\"step\": " << r.step << ", \"points_remaining\": " << r.points_remaining
            << ", \"recall_at_10\": " << real(r.recall_at_10)
            << ", \"distance_computations\": " << real(r.distance_computations)
            << ", \"deletion_seconds\": " << real(r.deletion_seconds)
            << ", \"bottom_layer_edges\": " << r.bottom_layer_edges << ", \"vertex_count\": " << r.vertex_count
            << "}";
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
}

void emit_report(const std::vector<MetricRow>& rows, const std::filesystem::path& path, ReportFormat format) {
    if (rows.empty()) throw std::invalid_argument("emit_report: no rows");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report " + path.string());
    write_report(out, rows, format);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<MetricRow> parse_report(std::istream& in, ReportFormat format) {
    std::vector<MetricRow> rows;
    if (format == ReportFormat::json) {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& o : doc) {
            MetricRow r;
            r.step = o.at("step").get<std::size_t>();
            r.points_remaining = o.at("points_remaining").get<std::size_t>();
            r.recall_at_10 = o.at("recall_at_10").get<double>();
            r.distance_computations = o.at("distance_computations").get<double>();
            r.deletion_seconds = o.at("deletion_seconds").get<double>();
            r.bottom_layer_edges = o.at("bottom_layer_edges").get<std::size_t>();
            r.vertex_count = o.at("vertex_count").get<std::size_t>();
            rows.push_back(r);
        }
        return rows;
    }
    std::string line;
    if (!std::getline(in, line) || line != kHeader) throw std::runtime_error("report: unexpected CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string f[7];
        for (auto& s : f) {
            if (!std::getline(fields, s, ',')) throw std::runtime_error("report: short CSV row");
        }
        MetricRow r;
        r.step = std::stoull(f[0]);
        r.points_remaining = std::stoull(f[1]);
        r.recall_at_10 = std::stod(f[2]);
        r.distance_computations = std::stod(f[3]);
        r.deletion_seconds = std::stod(f[4]);
        r.bottom_layer_edges = std::stoull(f[5]);
        r.vertex_count = std::stoull(f[6]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace walknn::bench
