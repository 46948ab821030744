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

#ifndef ONEQ_KERNELS_HPP
#define ONEQ_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// The arithmetic inner loops of the state-vector code, as a table of function
// pointers. kernels_scalar.cpp holds the reference implementations; SIMD
// variants (AVX2 on x86-64, NEON on aarch64) are selected at runtime and are
// equivalence-tested against the scalar table on random inputs.

namespace oneq::kern {

/// One in-place butterfly pass over a coefficient table of length `size`
/// (a power of two). For every index pair (k, k | stride) with
/// (k & stride) == 0:   (a, b) -> (a + b, a - b).
/// `stride` is a power of two below `size`. The caller guarantees
/// |coeffs[i]| < 2^62 so the sums cannot overflow.
using ButterflyFn = void (*)(std::int64_t *coeffs, std::size_t size, std::size_t stride);

/// out[k] = in[src[k]] ^ negate[k] - negate[k], where negate[k] is 0 or -1
/// (two's-complement conditional negation). `in` and `out` must not alias.
using SignedGatherFn = void (*)(const std::int64_t *in, std::int64_t *out, const std::uint32_t *src,
                                const std::int64_t *negate, std::size_t size);

/// Sum of squares of all entries. The caller guarantees |coeffs[i]| <= 2^31
/// and that the true sum fits in a signed 64-bit integer; both hold for any
/// normalized coefficient table (sum of squares == 2^h with h <= 62).
using SumSquaresFn = std::uint64_t (*)(const std::int64_t *coeffs, std::size_t size);

/// Sum of squares restricted to indices with the `stride` bit set, i.e. the
/// blocks [stride, 2*stride), [3*stride, 4*stride), ... Same bounds contract
/// as SumSquaresFn.
using SumSquaresStridedFn = std::uint64_t (*)(const std::int64_t *coeffs, std::size_t size,
                                              std::size_t stride);

struct Ops {
    const char *name;
    ButterflyFn butterfly;
    SignedGatherFn signed_gather;
    SumSquaresFn sum_squares;
    SumSquaresStridedFn sum_squares_strided;
};

/// Reference implementations; always available.
const Ops &scalar_ops();

/// Best SIMD table compiled in and supported by this CPU, or nullptr.
const Ops *simd_ops();

/// Table used by the state-vector code: SIMD when available, else scalar.
/// Setting ONEQ_KERNELS=scalar in the environment forces the reference
/// table; force_ops() overrides everything.
const Ops &active_ops();

/// Test hook: force a specific table (nullptr restores automatic selection).
void force_ops(const Ops *ops);

}  // namespace oneq::kern

#endif
