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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace walknn::bench {

struct MetricRow {
    std::size_t step = 0;
    std::size_t points_remaining = 0;
    double recall_at_10 = 0.0;
    /// Mean per query.
    double distance_computations = 0.0;
    double deletion_seconds = 0.0;
    std::size_t bottom_layer_edges = 0;
    /// Node presences summed over all layers.
    std::size_t vertex_count = 0;

    friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);
/// json for a .json extension, csv otherwise.
ReportFormat format_from_path(const std::filesystem::path& path);

/// CSV with a header row or a JSON array of objects, fields in declaration
/// order, reals printed with 6 significant digits.
void write_report(std::ostream& out, const std::vector<MetricRow>& rows, ReportFormat format);
void emit_report(const std::vector<MetricRow>& rows, const std::filesystem::path& path, ReportFormat format);

std::vector<MetricRow> parse_report(std::istream& in, ReportFormat format);

/// The value a real field takes after a write/parse round trip.
double round_to_report(double x);

}  // namespace walknn::bench
