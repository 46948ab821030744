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

#ifndef ONEQ_CIRCUIT_RENDER_HPP
#define ONEQ_CIRCUIT_RENDER_HPP

#include <string>

namespace oneq {

/// ASCII drawing of the discrimination circuit: a Hadamard on every wire, the
/// black-box U spanning all wires, then a Hadamard and a meter on wire l
/// only. Wires are drawn top to bottom and labeled q0..q(n-1); the 1-based
/// label l measures the l-th drawn wire. Guarded to 1 <= l <= n <= 16.
std::string render_circuit_ascii(int n, int l);

}  // namespace oneq

#endif
