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

// AVX2 variants of the coefficient kernels. This file is compiled with
// -mavx2; nothing here runs unless the dispatcher verified CPU support.

#include "oneq/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace oneq::kern {
namespace {

// Butterfly within a single 4-lane vector, pair distance 1:
// [c0,c1,c2,c3] -> [c0+c1, c0-c1, c2+c3, c2-c3].
inline __m256i butterfly4_stride1(__m256i v) {
    __m256i even = _mm256_permute4x64_epi64(v, 0xA0);  // [c0,c0,c2,c2]
    __m256i odd = _mm256_permute4x64_epi64(v, 0xF5);   // [c1,c1,c3,c3]
    __m256i neg = _mm256_sub_epi64(_mm256_setzero_si256(), odd);
    __m256i signed_odd = _mm256_blend_epi32(odd, neg, 0xCC);  // negate lanes 1,3
    return _mm256_add_epi64(even, signed_odd);
}

// Pair distance 2: [c0,c1,c2,c3] -> [c0+c2, c1+c3, c0-c2, c1-c3].
inline __m256i butterfly4_stride2(__m256i v) {
    __m256i lo = _mm256_permute4x64_epi64(v, 0x44);  // [c0,c1,c0,c1]
    __m256i hi = _mm256_permute4x64_epi64(v, 0xEE);  // [c2,c3,c2,c3]
    __m256i neg = _mm256_sub_epi64(_mm256_setzero_si256(), hi);
    __m256i signed_hi = _mm256_blend_epi32(hi, neg, 0xF0);  // negate lanes 2,3
    return _mm256_add_epi64(lo, signed_hi);
}

void butterfly_avx2(std::int64_t *coeffs, std::size_t size, std::size_t stride) {
    if (size < 4) {
        // size == 2, stride == 1
        std::int64_t a = coeffs[0];
        std::int64_t b = coeffs[1];
        coeffs[0] = a + b;
        coeffs[1] = a - b;
        return;
    }
    if (stride == 1) {
        for (std::size_t k = 0; k < size; k += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i *>(coeffs + k));
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(coeffs + k), butterfly4_stride1(v));
        }
        return;
    }
    if (stride == 2) {
        for (std::size_t k = 0; k < size; k += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i *>(coeffs + k));
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(coeffs + k), butterfly4_stride2(v));
        }
        return;
    }
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 4) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i *>(coeffs + k));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<__m256i *>(coeffs + k + stride));
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(coeffs + k), _mm256_add_epi64(a, b));
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(coeffs + k + stride), _mm256_sub_epi64(a, b));
        }
    }
}

void signed_gather_avx2(const std::int64_t *in, std::int64_t *out, const std::uint32_t *src,
                        const std::int64_t *negate, std::size_t size) {
    std::size_t k = 0;
    for (; k + 4 <= size; k += 4) {
        __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i *>(src + k));
        __m256i v = _mm256_i32gather_epi64(reinterpret_cast<const long long *>(in), idx, 8);
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(negate + k));
        v = _mm256_sub_epi64(_mm256_xor_si256(v, m), m);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + k), v);
    }
    for (; k < size; k++) {
        std::int64_t m = negate[k];
        out[k] = (in[src[k]] ^ m) - m;
    }
}

inline std::uint64_t hsum_epi64(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

// Squares via the low-32 multiply: exact because |coeffs[i]| <= 2^31 by the
// kernel contract, and (-2^31)^2 == (2^31)^2.
inline __m256i squares4(__m256i v) {
    return _mm256_mul_epi32(v, v);
}

std::uint64_t sum_squares_avx2(const std::int64_t *coeffs, std::size_t size) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 4 <= size; k += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(coeffs + k));
        acc = _mm256_add_epi64(acc, squares4(v));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; k < size; k++) {
        total += static_cast<std::uint64_t>(coeffs[k] * coeffs[k]);
    }
    return total;
}

std::uint64_t sum_squares_strided_avx2(const std::int64_t *coeffs, std::size_t size,
                                       std::size_t stride) {
    if (stride < 4) {
        std::uint64_t total = 0;
        for (std::size_t base = stride; base < size; base += 2 * stride) {
            for (std::size_t k = base; k < base + stride; k++) {
                total += static_cast<std::uint64_t>(coeffs[k] * coeffs[k]);
            }
        }
        return total;
    }
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(coeffs + k));
            acc = _mm256_add_epi64(acc, squares4(v));
        }
    }
    return hsum_epi64(acc);
}

}  // namespace

const Ops *avx2_ops_if_supported() {
    if (!__builtin_cpu_supports("avx2")) {
        return nullptr;
    }
    static const Ops table{
        "avx2",
        &butterfly_avx2,
        &signed_gather_avx2,
        &sum_squares_avx2,
        &sum_squares_strided_avx2,
    };
    return &table;
}

}  // namespace oneq::kern

#else

namespace oneq::kern {
const Ops *avx2_ops_if_supported() {
    return nullptr;
}
}  // namespace oneq::kern

#endif
