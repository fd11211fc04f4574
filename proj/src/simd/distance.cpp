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

#include "walknn/simd/distance.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace walknn::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detect_isa() {
    if (const char* forced = std::getenv("WALKNN_SIMD")) {
        const std::string name(forced);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (name == isa_name(isa) && isa_supported(isa)) return isa;
        }
    }
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

L2SqFn l2_sq_kernel(Isa isa) {
    if (!isa_supported(isa)) return &scalar::l2_sq;
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return &avx2::l2_sq;
#endif
#if defined(__aarch64__)
        case Isa::neon: return &neon::l2_sq;
#endif
        default: return &scalar::l2_sq;
    }
}

namespace {

struct Active {
    std::atomic<Isa> isa;
    std::atomic<L2SqFn> fn;
    Active() {
        const Isa detected = detect_isa();
        isa.store(detected);
        fn.store(l2_sq_kernel(detected));
    }
};

Active& active() {
    static Active state;
    return state;
}

}  // namespace

L2SqFn active_l2_sq() { return active().fn.load(std::memory_order_relaxed); }

Isa active_isa() { return active().isa.load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) isa = Isa::scalar;
    active().isa.store(isa);
    active().fn.store(l2_sq_kernel(isa));
}

void l2_sq_rows(const float* query, const float* base, std::size_t rows, std::size_t dim,
                float* out) {
    const L2SqFn fn = active_l2_sq();
    for (std::size_t r = 0; r < rows; ++r) out[r] = fn(query, base + r * dim, dim);
}

}  // namespace walknn::simd
