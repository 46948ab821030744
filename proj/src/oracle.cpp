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

#include "oneq/oracle.hpp"

#include <random>
#include <stdexcept>

#include "oneq/errors.hpp"
#include "oneq/kernels.hpp"
#include "oneq/rng.hpp"

namespace oneq {

namespace {

void check_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be >= 1");
    }
    if (n > kMaxQubits) {
        throw ResourceError("qubit count " + std::to_string(n) + " exceeds the table cap of " +
                            std::to_string(kMaxQubits));
    }
}

void check_label(int n, int l) {
    if (l < 1 || l > n) {
        throw std::invalid_argument("qubit label " + std::to_string(l) + " out of range 1.." +
                                    std::to_string(n));
    }
}

}  // namespace

const char *to_string(Variant v) {
    switch (v) {
        case Variant::U1:
            return "U1";
        case Variant::U2:
            return "U2";
        case Variant::General:
            return "GENERAL";
    }
    return "?";
}

Permutation Permutation::identity(int n) {
    check_n(n);
    std::vector<std::uint32_t> images(std::size_t{1} << n);
    for (std::size_t j = 0; j < images.size(); j++) {
        images[j] = static_cast<std::uint32_t>(j);
    }
    return Permutation(n, std::move(images));
}

Permutation Permutation::from_images(int n, std::vector<std::uint32_t> images) {
    check_n(n);
    const std::size_t size = std::size_t{1} << n;
    if (images.size() != size) {
        throw InvariantError("permutation table must have exactly 2^n entries");
    }
    std::vector<bool> seen(size, false);
    for (std::uint32_t k : images) {
        if (k >= size) {
            throw InvariantError("permutation image " + std::to_string(k) +
                                 " out of range 0.." + std::to_string(size - 1));
        }
        if (seen[k]) {
            throw InvariantError("permutation image " + std::to_string(k) +
                                 " repeated: not a bijection");
        }
        seen[k] = true;
    }
    return Permutation(n, std::move(images));
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.qubit_count() != q.qubit_count()) {
        throw std::invalid_argument("compose: mismatched qubit counts");
    }
    std::vector<std::uint32_t> images(p.size());
    for (std::size_t j = 0; j < images.size(); j++) {
        images[j] = p(q(static_cast<std::uint32_t>(j)));
    }
    return Permutation::from_images(p.qubit_count(), std::move(images));
}

Permutation inverse(const Permutation &p) {
    std::vector<std::uint32_t> images(p.size());
    for (std::size_t j = 0; j < images.size(); j++) {
        images[p(static_cast<std::uint32_t>(j))] = static_cast<std::uint32_t>(j);
    }
    return Permutation::from_images(p.qubit_count(), std::move(images));
}

bool commutes_with_bitflip(const Permutation &p, int l) {
    const std::uint32_t flip = static_cast<std::uint32_t>(qubit_mask(p.qubit_count(), l));
    for (std::uint32_t j = 0; j < p.size(); j++) {
        if (p(j ^ flip) != (p(j) ^ flip)) {
            return false;
        }
    }
    return true;
}

Permutation random_permutation(int n, std::uint64_t seed) {
    check_n(n);
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> images(std::size_t{1} << n);
    for (std::size_t j = 0; j < images.size(); j++) {
        images[j] = static_cast<std::uint32_t>(j);
    }
    for (std::size_t j = images.size() - 1; j > 0; j--) {
        std::swap(images[j], images[uniform_below(rng, j + 1)]);
    }
    return Permutation::from_images(n, std::move(images));
}

Permutation random_commuting_permutation(int n, int l, std::uint64_t seed) {
    check_n(n);
    check_label(n, l);
    std::mt19937_64 rng(seed);
    const std::uint32_t flip = static_cast<std::uint32_t>(qubit_mask(n, l));
    const std::uint32_t low = flip - 1;  // bits below the flipped one
    const std::size_t classes = std::size_t{1} << (n - 1);

    // Compact class id: the index bits with the qubit-l bit squeezed out.
    auto compact = [&](std::uint32_t j) -> std::uint32_t {
        return ((j >> 1 & ~low) | (j & low)) & static_cast<std::uint32_t>(classes - 1);
    };
    auto expand = [&](std::uint32_t c) -> std::uint32_t {
        return ((c & ~low) << 1) | (c & low);
    };

    std::vector<std::uint32_t> sigma(classes);
    for (std::size_t c = 0; c < classes; c++) {
        sigma[c] = static_cast<std::uint32_t>(c);
    }
    for (std::size_t c = classes - 1; c > 0; c--) {
        std::swap(sigma[c], sigma[uniform_below(rng, c + 1)]);
    }
    std::vector<std::uint8_t> tau(classes);
    for (std::size_t c = 0; c < classes; c++) {
        tau[c] = static_cast<std::uint8_t>(rng() & 1);
    }

    std::vector<std::uint32_t> images(std::size_t{1} << n);
    for (std::uint32_t j = 0; j < images.size(); j++) {
        const std::uint32_t cls = compact(j);
        const std::uint32_t bit = (j & flip) ? 1 : 0;
        images[j] = expand(sigma[cls]) | ((bit ^ tau[cls]) ? flip : 0);
    }
    return Permutation::from_images(n, std::move(images));
}

DiagonalSignMask DiagonalSignMask::all_plus(int n) {
    check_n(n);
    return DiagonalSignMask(n, std::vector<std::int8_t>(std::size_t{1} << n, 1));
}

DiagonalSignMask DiagonalSignMask::qubit_indicator(int n, int l) {
    check_n(n);
    const std::uint64_t mask = qubit_mask(n, l);
    std::vector<std::int8_t> signs(std::size_t{1} << n);
    for (std::size_t j = 0; j < signs.size(); j++) {
        signs[j] = (j & mask) ? -1 : 1;
    }
    return DiagonalSignMask(n, std::move(signs));
}

DiagonalSignMask DiagonalSignMask::from_signs(int n, std::vector<std::int8_t> signs) {
    check_n(n);
    if (signs.size() != (std::size_t{1} << n)) {
        throw InvariantError("sign mask must have exactly 2^n entries");
    }
    for (std::int8_t s : signs) {
        if (s != 1 && s != -1) {
            throw InvariantError("sign mask entries must be +1 or -1");
        }
    }
    return DiagonalSignMask(n, std::move(signs));
}

bool DiagonalSignMask::all_positive() const {
    for (std::int8_t s : signs_) {
        if (s != 1) {
            return false;
        }
    }
    return true;
}

SignedPermutationOracle::SignedPermutationOracle(Permutation perm, DiagonalSignMask mask,
                                                 Variant variant, std::optional<int> l)
    : perm_(std::move(perm)), mask_(std::move(mask)), variant_(variant), designated_qubit_(l) {
    if (perm_.qubit_count() != mask_.qubit_count()) {
        throw InvariantError("oracle mask length does not match the permutation");
    }
    src_.resize(perm_.size());
    negate_.resize(perm_.size());
    for (std::uint32_t j = 0; j < perm_.size(); j++) {
        src_[perm_(j)] = j;
    }
    for (std::uint32_t k = 0; k < perm_.size(); k++) {
        negate_[k] = mask_.sign(src_[k]) < 0 ? -1 : 0;
    }
}

SignedPermutationOracle make_u1(Permutation perm) {
    const int n = perm.qubit_count();
    return SignedPermutationOracle(std::move(perm), DiagonalSignMask::all_plus(n), Variant::U1,
                                   std::nullopt);
}

SignedPermutationOracle make_u2(Permutation perm, int l) {
    const int n = perm.qubit_count();
    check_label(n, l);
    return SignedPermutationOracle(std::move(perm), DiagonalSignMask::qubit_indicator(n, l),
                                   Variant::U2, l);
}

SignedPermutationOracle make_general(Permutation perm, DiagonalSignMask mask,
                                     std::optional<int> l) {
    if (l.has_value()) {
        check_label(perm.qubit_count(), *l);
    }
    return SignedPermutationOracle(std::move(perm), std::move(mask), Variant::General, l);
}

void SignedPermutationOracle::apply_inplace(StateVector &s) const {
    if (s.qubit_count() != qubit_count()) {
        throw std::invalid_argument("oracle and state have different qubit counts");
    }
    std::int64_t *coeffs = s.coeffs_.data();
    // Walk each cycle once, pushing values forward; the bitmap holds visited
    // flags, never amplitudes.
    std::vector<bool> placed(size(), false);
    for (std::uint32_t start = 0; start < size(); start++) {
        if (placed[start]) {
            continue;
        }
        if (perm_(start) == start) {
            if (mask_.sign(start) < 0) {
                coeffs[start] = -coeffs[start];
            }
            continue;
        }
        std::uint32_t cur = start;
        std::int64_t carried = coeffs[start];
        do {
            const std::uint32_t next = perm_(cur);
            const std::int64_t displaced = coeffs[next];
            coeffs[next] = mask_.sign(cur) < 0 ? -carried : carried;
            placed[next] = true;
            carried = displaced;
            cur = next;
        } while (cur != start);
    }
}

StateVector SignedPermutationOracle::apply_copy(const StateVector &s) const {
    if (s.qubit_count() != qubit_count()) {
        throw std::invalid_argument("oracle and state have different qubit counts");
    }
    std::vector<std::int64_t> out(s.size());
    kern::active_ops().signed_gather(s.coeffs().data(), out.data(), src_.data(), negate_.data(),
                                     s.size());
    return StateVector(s.qubit_count(), s.half_power(), std::move(out));
}

StateVector apply_oracle(const SignedPermutationOracle &o, const StateVector &s) {
    return o.apply_copy(s);
}

BlackBoxHandle seal(SignedPermutationOracle oracle) {
    return BlackBoxHandle(std::move(oracle));
}

}  // namespace oneq
