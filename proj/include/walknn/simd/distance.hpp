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

namespace walknn::simd {

/// Instruction sets with a dedicated distance kernel.
enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

using L2SqFn = float (*)(const float* a, const float* b, std::size_t dim);

namespace scalar {
float l2_sq(const float* a, const float* b, std::size_t dim);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
float l2_sq(const float* a, const float* b, std::size_t dim);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
float l2_sq(const float* a, const float* b, std::size_t dim);
}  // namespace neon
#endif

/// True when the running CPU can execute kernels built for `isa`.
bool isa_supported(Isa isa);

/// Best supported ISA, unless overridden by WALKNN_SIMD=scalar|avx2|neon.
Isa detect_isa();

/// Kernel for a specific ISA; falls back to scalar if `isa` is unsupported.
L2SqFn l2_sq_kernel(Isa isa);

/// The process-wide kernel, resolved once on first use.
L2SqFn active_l2_sq();
Isa active_isa();

/// Overrides the process-wide kernel. Not thread-safe against concurrent
/// distance evaluation; call before searching.
void set_active_isa(Isa isa);

inline float l2_sq(std::span<const float> a, std::span<const float> b) {
    return active_l2_sq()(a.data(), b.data(), a.size());
}

/// Squared distances from `query` to each of `rows` consecutive vectors.
void l2_sq_rows(const float* query, const float* base, std::size_t rows, std::size_t dim,
                float* out);

}  // namespace walknn::simd
