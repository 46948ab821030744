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

#include "oneq/state.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "oneq/errors.hpp"
#include "oneq/kernels.hpp"
#include "oneq/rng.hpp"

namespace oneq {

namespace {

thread_local std::uint64_t t_allocations = 0;

void check_qubit_count(int n) {
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

int bitdot(std::uint64_t i, std::uint64_t j) {
    return std::popcount(i & j) & 1;
}

std::uint64_t qubit_mask(int n, int l) {
    check_label(n, l);
    return std::uint64_t{1} << (n - l);
}

int qubit_value(int n, std::uint64_t i, int l) {
    check_label(n, l);
    return static_cast<int>((i >> (n - l)) & 1);
}

std::string ExactProb::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

StateVector::StateVector(int n, int half_power, std::vector<std::int64_t> coeffs)
    : n_(n), half_power_(half_power), coeffs_(std::move(coeffs)) {
    t_allocations++;
}

StateVector::StateVector(const StateVector &other)
    : n_(other.n_), half_power_(other.half_power_), coeffs_(other.coeffs_) {
    t_allocations++;
}

StateVector &StateVector::operator=(const StateVector &other) {
    if (this != &other) {
        n_ = other.n_;
        half_power_ = other.half_power_;
        coeffs_ = other.coeffs_;
        t_allocations++;
    }
    return *this;
}

std::uint64_t StateVector::allocations() {
    return t_allocations;
}

StateVector StateVector::basis(int n, std::uint64_t index) {
    check_qubit_count(n);
    const std::size_t size = std::size_t{1} << n;
    if (index >= size) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(n) + " qubits");
    }
    std::vector<std::int64_t> coeffs(size, 0);
    coeffs[index] = 1;
    return StateVector(n, 0, std::move(coeffs));
}

StateVector StateVector::from_coeffs(int n, int half_power, std::vector<std::int64_t> coeffs) {
    check_qubit_count(n);
    if (half_power < 0 || half_power > kMaxHalfPower) {
        throw ResourceError("half-power " + std::to_string(half_power) + " out of range 0.." +
                            std::to_string(kMaxHalfPower));
    }
    if (coeffs.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("coefficient table must have exactly 2^n entries");
    }
    unsigned __int128 total = 0;
    for (std::int64_t c : coeffs) {
        total += static_cast<unsigned __int128>(static_cast<__int128>(c) * c);
    }
    if (total != (static_cast<unsigned __int128>(1) << half_power)) {
        throw InvariantError("coefficients are not normalized: sum of squares != 2^h");
    }
    return StateVector(n, half_power, std::move(coeffs));
}

void StateVector::apply_hadamard(int l) {
    check_label(n_, l);
    if (half_power_ + 1 > kMaxHalfPower) {
        throw ResourceError("half-power budget exhausted: h would exceed " +
                            std::to_string(kMaxHalfPower));
    }
    kern::active_ops().butterfly(coeffs_.data(), coeffs_.size(), qubit_mask(n_, l));
    half_power_ += 1;
}

void StateVector::apply_hadamard_layer() {
    if (half_power_ + n_ > kMaxHalfPower) {
        throw ResourceError("half-power budget exhausted: h would exceed " +
                            std::to_string(kMaxHalfPower));
    }
    const auto &ops = kern::active_ops();
    for (std::size_t stride = 1; stride < coeffs_.size(); stride <<= 1) {
        ops.butterfly(coeffs_.data(), coeffs_.size(), stride);
    }
    half_power_ += n_;
}

void StateVector::canonicalize() {
    while (half_power_ >= 2) {
        std::int64_t fold = 0;
        for (std::int64_t c : coeffs_) {
            fold |= c;
        }
        if (fold & 1) {
            break;
        }
        for (std::int64_t &c : coeffs_) {
            c >>= 1;
        }
        half_power_ -= 2;
    }
}

bool StateVector::normalized() const {
    return kern::active_ops().sum_squares(coeffs_.data(), coeffs_.size()) ==
           (std::uint64_t{1} << half_power_);
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> split_on_qubit(
    const StateVector &s, int l) {
    const std::uint64_t mask = qubit_mask(s.qubit_count(), l);
    std::vector<std::int64_t> zero_part;
    std::vector<std::int64_t> one_part;
    zero_part.reserve(s.size() / 2);
    one_part.reserve(s.size() / 2);
    for (std::size_t k = 0; k < s.size(); k++) {
        (k & mask ? one_part : zero_part).push_back(s.coeffs()[k]);
    }
    return {std::move(zero_part), std::move(one_part)};
}

ExactProb marginal_one(const StateVector &s, int l) {
    const std::uint64_t mask = qubit_mask(s.qubit_count(), l);
    std::uint64_t num = kern::active_ops().sum_squares_strided(s.coeffs().data(), s.size(), mask);
    return ExactProb{static_cast<std::int64_t>(num), std::int64_t{1} << s.half_power()};
}

bool states_equal(const StateVector &a, const StateVector &b, bool up_to_global_sign) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("states_equal: mismatched qubit counts");
    }
    StateVector ca = a;
    StateVector cb = b;
    ca.canonicalize();
    cb.canonicalize();
    if (ca.half_power() != cb.half_power()) {
        return false;
    }
    bool same = true;
    bool negated = true;
    for (std::size_t k = 0; k < ca.size(); k++) {
        same &= ca.coeffs()[k] == cb.coeffs()[k];
        negated &= ca.coeffs()[k] == -cb.coeffs()[k];
    }
    return same || (up_to_global_sign && negated);
}

int sample_bit(const ExactProb &p, std::uint64_t seed) {
    if (p.is_zero()) {
        return 0;
    }
    if (p.is_one()) {
        return 1;
    }
    std::mt19937_64 rng(seed);
    return uniform_below(rng, static_cast<std::uint64_t>(p.den)) <
                   static_cast<std::uint64_t>(p.num)
               ? 1
               : 0;
}

int sample_qubit(const StateVector &s, int l, std::uint64_t seed) {
    return sample_bit(marginal_one(s, l), seed);
}

std::string index_to_bits(int n, std::uint64_t i) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int l = 1; l <= n; l++) {
        bits[static_cast<std::size_t>(l - 1)] = static_cast<char>('0' + qubit_value(n, i, l));
    }
    return bits;
}

std::uint64_t bits_to_index(std::string_view bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("bitstring must have between 1 and " +
                                    std::to_string(kMaxQubits) + " characters");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return index;
}

}  // namespace oneq
