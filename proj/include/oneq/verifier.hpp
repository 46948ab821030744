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

#ifndef ONEQ_VERIFIER_HPP
#define ONEQ_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oneq/discriminator.hpp"
#include "oneq/oracle.hpp"

// Independent brute-force checks and whole-group censuses. The census is the
// empirical answer to "for which permutations does the one-query procedure
// discriminate with certainty?": it classifies every permutation of the basis
// (or a seeded sample) and compares the uniformly-correct set against the
// bit-flip commuting predicate.

namespace oneq {

/// How a single permutation behaves across every basis input and both
/// sealed variants.
enum class PermClass {
    UniformlyCorrect,    // always deterministic, always the right verdict
    Nondeterministic,    // some input yields a strict 0 < p < 1 marginal
    DeterministicWrong,  // always deterministic, some verdict is wrong
};

const char *to_string(PermClass c);

struct FailureWitness {
    std::uint64_t input;
    Variant sealed;  // which variant was behind the black box
};

struct PermVerdict {
    /// Lexicographic (Lehmer) rank; absent when 2^n > 20 so (2^n)! would not
    /// fit in 64 bits.
    std::optional<std::uint64_t> rank;
    PermClass classification;
    /// First failing (input, variant) pair of the classified kind, scanning
    /// variant-major: all inputs under U1, then all under U2.
    std::optional<FailureWitness> witness;
};

/// Dense 2^n x 2^n signed-permutation matrix multiply with no index tricks;
/// the differential reference for apply_oracle. Guarded to n <= 10.
StateVector brute_matrix_apply(const SignedPermutationOracle &o, const StateVector &s);

/// Dense check that M^T M is the identity with signs folded in. True for
/// every well-formed oracle; a constructor sanity gate. Guarded to n <= 10.
bool check_oracle_unitary(const SignedPermutationOracle &o);

/// Run the discriminator for every basis input and both sealed variants of
/// this permutation; ground truth is the variant the caller sealed, never
/// anything read through the handle.
PermVerdict exhaustive_check(const Permutation &perm, int l);

// ---- Lehmer-code ranking (lexicographic order of image tables) ----

std::uint64_t factorial(unsigned m);  // m <= 20
std::uint64_t perm_rank(std::span<const std::uint32_t> images);
std::vector<std::uint32_t> perm_unrank(std::size_t size, std::uint64_t rank);

struct CensusOptions {
    /// 0 = exhaustive (n <= 3 only); otherwise the number of seeded samples.
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    /// 0 = hardware concurrency.
    int workers = 0;
};

struct CensusReport {
    int n = 0;
    int designated_qubit = 0;
    bool sampled = false;
    std::uint64_t examined = 0;  // permutations classified
    std::uint64_t uniformly_correct = 0;
    std::uint64_t nondeterministic = 0;
    std::uint64_t deterministic_wrong = 0;
    std::uint64_t commuting = 0;  // permutations passing the bit-flip predicate
    /// Every examined permutation is uniformly correct exactly when it
    /// commutes with the qubit-l bit flip.
    bool sets_identical = false;
    std::uint64_t seed = 0;
    int workers = 0;
    double elapsed_ms = 0.0;
};

/// Classify permutations at fixed (n, l). Exhaustive mode enumerates all of
/// S_{2^n} in Lehmer rank order and requires n <= 3 (8! tables); larger n
/// must pass sample_count. Work is partitioned into contiguous rank (or
/// sample-index) ranges, so results do not depend on the worker count.
CensusReport census(int n, int l, const CensusOptions &options = {});

}  // namespace oneq

#endif
