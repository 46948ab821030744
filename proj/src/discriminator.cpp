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

#include "oneq/discriminator.hpp"

#include <stdexcept>

#include "oneq/errors.hpp"

namespace oneq {

Variant decide(int outcome_bit, int initial_bit) {
    return outcome_bit == initial_bit ? Variant::U1 : Variant::U2;
}

DiscriminationReport run_discrimination(BlackBoxHandle &handle, int l, std::uint64_t input_index) {
    if (handle.query_count() != 0) {
        throw ProtocolError("stale handle: a discrimination run needs a fresh oracle handle");
    }
    const int n = handle.qubit_count();
    if (input_index >= (std::uint64_t{1} << n)) {
        throw std::out_of_range("input index out of range for " + std::to_string(n) + " qubits");
    }
    const int initial_bit = qubit_value(n, input_index, l);  // validates the label

    const std::uint64_t allocations_before = StateVector::allocations();
    int hadamards = 0;

    StateVector state = StateVector::basis(n, input_index);
    state.apply_hadamard_layer();
    hadamards += n;
    handle.apply(state);
    state.apply_hadamard(l);
    hadamards += 1;

    state.canonicalize();
    const ExactProb p_one = marginal_one(state, l);

    if (StateVector::allocations() - allocations_before != 1) {
        throw std::logic_error("discrimination pipeline allocated more than one state table");
    }

    int outcome_bit;
    bool deterministic;
    if (p_one.is_zero()) {
        outcome_bit = 0;
        deterministic = true;
    } else if (p_one.is_one()) {
        outcome_bit = 1;
        deterministic = true;
    } else {
        // Off the promise only. Majority bit; an exact tie reports 0.
        outcome_bit = 2 * p_one.num > p_one.den ? 1 : 0;
        deterministic = false;
    }

    return DiscriminationReport{
        decide(outcome_bit, initial_bit),
        outcome_bit,
        initial_bit,
        p_one,
        deterministic,
        handle.query_count(),
        hadamards,
        n,
        l,
        input_index,
    };
}

}  // namespace oneq
