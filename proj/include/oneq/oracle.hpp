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

#ifndef ONEQ_ORACLE_HPP
#define ONEQ_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oneq/state.hpp"

// The two promised oracle forms and their generalizations. U1 permutes the
// computational basis; U2 applies the same permutation after flipping the
// sign of every input label whose designated qubit is 1. Both are signed
// permutation unitaries: a diagonal +/-1 mask applied on the INPUT label,
// followed by a basis permutation.

namespace oneq {

enum class Variant {
    U1,
    U2,
    General,
};

const char *to_string(Variant v);

/// Bijection on the 2^n basis indices; images()[j] = k means |j> -> |k>.
class Permutation {
  public:
    static Permutation identity(int n);

    /// Validates that `images` is a bijection on {0, ..., 2^n - 1}.
    static Permutation from_images(int n, std::vector<std::uint32_t> images);

    int qubit_count() const {
        return n_;
    }
    std::size_t size() const {
        return images_.size();
    }
    std::span<const std::uint32_t> images() const {
        return images_;
    }
    std::uint32_t operator()(std::uint32_t j) const {
        return images_[j];
    }

    bool operator==(const Permutation &) const = default;

  private:
    Permutation(int n, std::vector<std::uint32_t> images)
        : n_(n), images_(std::move(images)) {
    }

    int n_;
    std::vector<std::uint32_t> images_;
};

/// (p after q)(j) = p(q(j)).
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);

/// True iff p(j XOR e_l) == p(j) XOR e_l for every j, where e_l is the bit of
/// qubit l. This is the promise-class predicate the census measures the
/// algorithm against.
bool commutes_with_bitflip(const Permutation &p, int l);

/// Seeded Fisher-Yates shuffle; identical seeds give identical tables.
Permutation random_permutation(int n, std::uint64_t seed);

/// Random permutation commuting with the qubit-l bit flip, built from a
/// random permutation of the 2^(n-1) index classes {j, j XOR e_l} plus an
/// independent flip bit per class. Passes commutes_with_bitflip by
/// construction; the reachable set has (2^(n-1))! * 2^(2^(n-1)) elements.
Permutation random_commuting_permutation(int n, int l, std::uint64_t seed);

/// Diagonal of +/-1 entries indexed by basis label.
class DiagonalSignMask {
  public:
    static DiagonalSignMask all_plus(int n);

    /// -1 exactly where qubit l of the index is 1; the U2 mask, and the Z
    /// gate on that qubit.
    static DiagonalSignMask qubit_indicator(int n, int l);

    /// Validates entries are +1/-1 and the length is 2^n.
    static DiagonalSignMask from_signs(int n, std::vector<std::int8_t> signs);

    int qubit_count() const {
        return n_;
    }
    std::span<const std::int8_t> signs() const {
        return signs_;
    }
    int sign(std::uint32_t j) const {
        return signs_[j];
    }
    bool all_positive() const;

    bool operator==(const DiagonalSignMask &) const = default;

  private:
    DiagonalSignMask(int n, std::vector<std::int8_t> signs)
        : n_(n), signs_(std::move(signs)) {
    }

    int n_;
    std::vector<std::int8_t> signs_;
};

/// A permutation with an input-label sign mask: |j> -> mask[j] |perm(j)>.
class SignedPermutationOracle {
  public:
    int qubit_count() const {
        return perm_.qubit_count();
    }
    std::size_t size() const {
        return perm_.size();
    }
    const Permutation &perm() const {
        return perm_;
    }
    const DiagonalSignMask &mask() const {
        return mask_;
    }
    Variant variant() const {
        return variant_;
    }
    /// The qubit conditioning the U2 sign; present for U2, optional otherwise.
    std::optional<int> designated_qubit() const {
        return designated_qubit_;
    }

    /// In-place application by cycle walking: no second coefficient table is
    /// ever allocated, which keeps the discrimination pipeline at exactly one
    /// 2^n-entry state. h is unchanged.
    void apply_inplace(StateVector &s) const;

    /// Out-of-place application through the gather kernel; returns a fresh
    /// state. Same result as apply_inplace.
    StateVector apply_copy(const StateVector &s) const;

    bool operator==(const SignedPermutationOracle &) const = default;

    friend SignedPermutationOracle make_u1(Permutation perm);
    friend SignedPermutationOracle make_u2(Permutation perm, int l);
    friend SignedPermutationOracle make_general(Permutation perm, DiagonalSignMask mask,
                                                std::optional<int> l);

  private:
    SignedPermutationOracle(Permutation perm, DiagonalSignMask mask, Variant variant,
                            std::optional<int> l);

    Permutation perm_;
    DiagonalSignMask mask_;
    Variant variant_;
    std::optional<int> designated_qubit_;
    // Gather form out[k] = in[src_[k]] with conditional negation; cached at
    // construction, the oracle is immutable afterwards.
    std::vector<std::uint32_t> src_;
    std::vector<std::int64_t> negate_;
};

/// The bare permutation: all-plus mask.
SignedPermutationOracle make_u1(Permutation perm);

/// Same permutation, sign -1 exactly when qubit l of the input label is 1.
SignedPermutationOracle make_u2(Permutation perm, int l);

/// Arbitrary diagonal mask; representable for exploration, but only U1/U2
/// participate in the promise and the decision rule.
SignedPermutationOracle make_general(Permutation perm, DiagonalSignMask mask,
                                     std::optional<int> l = std::nullopt);

/// out[perm(j)] = mask[j] * in[j], h unchanged.
StateVector apply_oracle(const SignedPermutationOracle &o, const StateVector &s);

/// A sealed oracle: exposes only the qubit count and application, and counts
/// every query. The variant is not observable through this interface; sealing
/// is interface narrowing, not cryptography.
class BlackBoxHandle {
  public:
    int qubit_count() const {
        return oracle_.qubit_count();
    }
    int query_count() const {
        return queries_;
    }
    void apply(StateVector &s) {
        queries_++;
        oracle_.apply_inplace(s);
    }

    friend BlackBoxHandle seal(SignedPermutationOracle oracle);

  private:
    explicit BlackBoxHandle(SignedPermutationOracle oracle)
        : oracle_(std::move(oracle)) {
    }

    SignedPermutationOracle oracle_;
    int queries_ = 0;
};

BlackBoxHandle seal(SignedPermutationOracle oracle);

}  // namespace oneq

#endif
