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

#ifndef ONEQ_DISCRIMINATOR_HPP
#define ONEQ_DISCRIMINATOR_HPP

#include <cstdint>

#include "oneq/oracle.hpp"
#include "oneq/state.hpp"

// The five-step, one-query discrimination procedure:
//   prepare |i>  ->  H on every qubit  ->  one oracle query  ->
//   H on the designated qubit L  ->  measure qubit L.
// On the promise, qubit L lands on its initial value exactly when the oracle
// is U1 and on the flipped value exactly when it is U2.

namespace oneq {

struct DiscriminationReport {
    Variant decision;
    int outcome_bit;
    int initial_bit;      // value of qubit L in the input |i>
    ExactProb marginal;   // exact p(outcome 1) on the canonical final state
    bool deterministic;   // marginal.num is 0 or marginal.den
    int queries_used;
    int hadamards_used;
    int n;
    int designated_qubit;
    std::uint64_t input_index;
};

/// Step-5 rule: U1 iff the measured bit equals the initial bit.
Variant decide(int outcome_bit, int initial_bit);

/// Run the full procedure on a fresh handle (query_count must be 0, else
/// ProtocolError). Restricted to computational basis inputs. Off the promise
/// the marginal may be strict; then deterministic=false and outcome_bit is
/// the majority bit (ties report 0).
///
/// Instrumented throughout: exactly one oracle query, exactly n+1 Hadamard
/// gates, and exactly one 2^n-entry coefficient table allocated.
DiscriminationReport run_discrimination(BlackBoxHandle &handle, int l, std::uint64_t input_index);

}  // namespace oneq

#endif
