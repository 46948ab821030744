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

#include "oneq/kernels.hpp"

namespace oneq::kern {
namespace {

void butterfly_scalar(std::int64_t *coeffs, std::size_t size, std::size_t stride) {
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k++) {
            std::int64_t a = coeffs[k];
            std::int64_t b = coeffs[k + stride];
            coeffs[k] = a + b;
            coeffs[k + stride] = a - b;
        }
    }
}

void signed_gather_scalar(const std::int64_t *in, std::int64_t *out, const std::uint32_t *src,
                          const std::int64_t *negate, std::size_t size) {
    for (std::size_t k = 0; k < size; k++) {
        std::int64_t m = negate[k];
        out[k] = (in[src[k]] ^ m) - m;
    }
}

std::uint64_t sum_squares_scalar(const std::int64_t *coeffs, std::size_t size) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < size; k++) {
        total += static_cast<std::uint64_t>(coeffs[k] * coeffs[k]);
    }
    return total;
}

std::uint64_t sum_squares_strided_scalar(const std::int64_t *coeffs, std::size_t size,
                                         std::size_t stride) {
    std::uint64_t total = 0;
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; k++) {
            total += static_cast<std::uint64_t>(coeffs[k] * coeffs[k]);
        }
    }
    return total;
}

}  // namespace

const Ops &scalar_ops() {
    static const Ops table{
        "scalar",
        &butterfly_scalar,
        &signed_gather_scalar,
        &sum_squares_scalar,
        &sum_squares_strided_scalar,
    };
    return table;
}

}  // namespace oneq::kern
