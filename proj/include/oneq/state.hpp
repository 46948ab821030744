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

#ifndef ONEQ_STATE_HPP
#define ONEQ_STATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Exact n-qubit amplitude arithmetic. Every state reachable under Hadamard
// gates and signed permutations has amplitudes of the form m * 2^(-h/2) with
// integer m, so a state is a table of signed 64-bit coefficients plus one
// shared half-power h. There is no floating point anywhere; normalization
// (sum of squares == 2^h) is an integer identity checked in tests.
//
// Qubit labels are 1-based, reading the ket left to right: qubit l is bit
// position n - l of the basis index (most significant first). |01> on two
// qubits is index 1, and its qubit 1 has value 0.

namespace oneq {

/// Hard cap on the coefficient table (2^n entries).
inline constexpr int kMaxQubits = 20;

/// Hard cap on the accumulated half-power: 2^h and every coefficient square
/// must stay inside a signed 64-bit integer.
inline constexpr int kMaxHalfPower = 62;

/// Parity (0/1) of popcount(i & j); the interference sign rule.
int bitdot(std::uint64_t i, std::uint64_t j);

/// Bitmask of qubit `l` inside an n-bit basis index.
std::uint64_t qubit_mask(int n, int l);

/// Value (0/1) of qubit `l` in basis index `i`.
int qubit_value(int n, std::uint64_t i, int l);

/// An exact probability num/den with den a power of two. Never reduced to
/// floating point.
struct ExactProb {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const ExactProb &) const = default;
    bool is_zero() const {
        return num == 0;
    }
    bool is_one() const {
        return num == den;
    }
    std::string str() const;
};

class StateVector {
  public:
    /// |i> on n qubits: h = 0, a single unit coefficient at index i.
    static StateVector basis(int n, std::uint64_t index);

    /// Build from raw parts; validates length, the half-power range and the
    /// normalization identity sum(coeffs^2) == 2^h.
    static StateVector from_coeffs(int n, int half_power, std::vector<std::int64_t> coeffs);

    int qubit_count() const {
        return n_;
    }
    int half_power() const {
        return half_power_;
    }
    std::span<const std::int64_t> coeffs() const {
        return coeffs_;
    }
    std::size_t size() const {
        return coeffs_.size();
    }

    // Gates mutate in place; a StateVector is a value owned by one thread at
    // a time. Copy first if the old state is still needed.

    /// Hadamard on qubit l: butterfly over index pairs differing in that bit,
    /// h += 1. Throws ResourceError if h would exceed kMaxHalfPower.
    void apply_hadamard(int l);

    /// Hadamard on every qubit (n butterfly passes, the in-place
    /// Walsh-Hadamard structure); h += n.
    void apply_hadamard_layer();

    /// While h >= 2 and every coefficient is even, halve all coefficients and
    /// drop h by 2. Same physical state; applied lazily before equality tests
    /// and reporting, never inside gates.
    void canonicalize();

    /// Integer normalization check: sum of squares == 2^h.
    bool normalized() const;

    /// Thread-local count of coefficient-table allocations, used to verify
    /// that the discrimination pipeline touches exactly one 2^n-entry state.
    static std::uint64_t allocations();

    StateVector(const StateVector &other);
    StateVector &operator=(const StateVector &other);
    StateVector(StateVector &&) noexcept = default;
    StateVector &operator=(StateVector &&) noexcept = default;

    friend class SignedPermutationOracle;

  private:
    StateVector(int n, int half_power, std::vector<std::int64_t> coeffs);

    int n_;
    int half_power_;
    std::vector<std::int64_t> coeffs_;
};

/// Coefficients where qubit l is 0 (first) and 1 (second), each of length
/// 2^(n-1), with the remaining bits' ordering preserved.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> split_on_qubit(
    const StateVector &s, int l);

/// Exact probability of measuring qubit l as 1: sum of squared coefficients
/// over indices with that bit set, over 2^h.
ExactProb marginal_one(const StateVector &s, int l);

/// Coefficient-wise equality of canonical forms, optionally up to a global
/// sign. Throws std::invalid_argument on mismatched qubit counts.
bool states_equal(const StateVector &a, const StateVector &b, bool up_to_global_sign = false);

/// Draw a 0/1 outcome for qubit l from its exact marginal; identical seeds
/// give identical outcomes on every platform.
int sample_qubit(const StateVector &s, int l, std::uint64_t seed);

/// Draw a bit with probability p.num/p.den of being 1.
int sample_bit(const ExactProb &p, std::uint64_t seed);

/// Basis index as the qubit-1-first bitstring: "01" on two qubits means
/// qubit 1 is 0 and qubit 2 is 1 (index 1).
std::string index_to_bits(int n, std::uint64_t i);

/// Inverse of index_to_bits; throws std::invalid_argument on characters
/// other than 0/1 or on more than kMaxQubits bits.
std::uint64_t bits_to_index(std::string_view bits);

}  // namespace oneq

#endif
