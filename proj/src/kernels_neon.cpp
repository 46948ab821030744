// Copyright 2026 The oneq authors
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

// NEON variants for aarch64, where NEON is baseline. There is no gather
// instruction, so the signed gather stays scalar in this table too.

#include "oneq/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace oneq::kern {
namespace {

void butterfly_neon(std::int64_t *coeffs, std::size_t size, std::size_t stride) {
    if (stride == 1) {
        for (std::size_t k = 0; k < size; k += 2) {
            int64x2_t v = vld1q_s64(coeffs + k);
            int64x2_t r = vextq_s64(v, v, 1);  // [c1, c0]
            int64x2_t plus = vaddq_s64(v, r);
            int64x2_t minus = vsubq_s64(v, r);
            // [c0 + c1, c0 - c1]
            vst1q_s64(coeffs + k, vcopyq_laneq_s64(plus, 1, minus, 1));
        }
        return;
    }
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 2) {
            int64x2_t a = vld1q_s64(coeffs + k);
            int64x2_t b = vld1q_s64(coeffs + k + stride);
            vst1q_s64(coeffs + k, vaddq_s64(a, b));
            vst1q_s64(coeffs + k + stride, vsubq_s64(a, b));
        }
    }
}

void signed_gather_neon(const std::int64_t *in, std::int64_t *out, const std::uint32_t *src,
                        const std::int64_t *negate, std::size_t size) {
    for (std::size_t k = 0; k < size; k++) {
        std::int64_t m = negate[k];
        out[k] = (in[src[k]] ^ m) - m;
    }
}

// |coeffs[i]| <= 2^31 by the kernel contract, so narrowing to 32 bits and
// widening the product back is exact.
inline int64x2_t squares2(int64x2_t v) {
    int32x2_t narrow = vmovn_s64(v);
    return vmull_s32(narrow, narrow);
}

std::uint64_t sum_squares_neon(const std::int64_t *coeffs, std::size_t size) {
    if (size < 2) {
        return size ? static_cast<std::uint64_t>(coeffs[0] * coeffs[0]) : 0;
    }
    int64x2_t acc = vdupq_n_s64(0);
    for (std::size_t k = 0; k < size; k += 2) {
        acc = vaddq_s64(acc, squares2(vld1q_s64(coeffs + k)));
    }
    return static_cast<std::uint64_t>(vgetq_lane_s64(acc, 0)) +
           static_cast<std::uint64_t>(vgetq_lane_s64(acc, 1));
}

std::uint64_t sum_squares_strided_neon(const std::int64_t *coeffs, std::size_t size,
                                       std::size_t stride) {
    if (stride < 2) {
        std::uint64_t total = 0;
        for (std::size_t k = 1; k < size; k += 2) {
            total += static_cast<std::uint64_t>(coeffs[k] * coeffs[k]);
        }
        return total;
    }
    int64x2_t acc = vdupq_n_s64(0);
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 2) {
            acc = vaddq_s64(acc, squares2(vld1q_s64(coeffs + k)));
        }
    }
    return static_cast<std::uint64_t>(vgetq_lane_s64(acc, 0)) +
           static_cast<std::uint64_t>(vgetq_lane_s64(acc, 1));
}

}  // namespace

const Ops *neon_ops_if_supported() {
    static const Ops table{
        "neon",
        &butterfly_neon,
        &signed_gather_neon,
        &sum_squares_neon,
        &sum_squares_strided_neon,
    };
    return &table;
}

}  // namespace oneq::kern

#else

namespace oneq::kern {
const Ops *neon_ops_if_supported() {
    return nullptr;
}
}  // namespace oneq::kern

#endif
