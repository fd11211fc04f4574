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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace walknn::verify {

struct PropertyOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Multiplies every trial count (at least one trial each); 1 is the full suite.
    double scale = 1.0;
};

/// Names of every property, in run order.
std::vector<std::string> spectral_property_names();

/// Runs the spectral property suite; `only`, when non-empty, selects by name
/// and throws std::invalid_argument on an unknown one.
std::vector<PropertyOutcome> run_spectral_properties(const SuiteOptions& options,
                                                     const std::vector<std::string>& only = {},
                                                     const std::function<void(const PropertyOutcome&)>& on_done = {});

/// {"passed": bool, "seed": n, "properties": [{name, passed, detail, seconds}, ...]}
std::string suite_json(const std::vector<PropertyOutcome>& outcomes, const SuiteOptions& options);

}  // namespace walknn::verify
