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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "oneq/kernels.hpp"

namespace oneq::kern {

const Ops *avx2_ops_if_supported();
const Ops *neon_ops_if_supported();

namespace {

std::atomic<const Ops *> g_forced{nullptr};

const Ops *auto_select() {
    const char *env = std::getenv("ONEQ_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) {
        return &scalar_ops();
    }
    if (const Ops *simd = simd_ops()) {
        return simd;
    }
    return &scalar_ops();
}

}  // namespace

const Ops *simd_ops() {
    static const Ops *table = [] {
        if (const Ops *avx2 = avx2_ops_if_supported()) {
            return avx2;
        }
        return neon_ops_if_supported();
    }();
    return table;
}

const Ops &active_ops() {
    if (const Ops *forced = g_forced.load(std::memory_order_acquire)) {
        return *forced;
    }
    static const Ops *selected = auto_select();
    return *selected;
}

void force_ops(const Ops *ops) {
    g_forced.store(ops, std::memory_order_release);
}

}  // namespace oneq::kern
