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

#include "oneq/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "oneq/errors.hpp"
#include "oneq/rng.hpp"

namespace oneq {

namespace {

constexpr int kMaxBruteQubits = 10;

void check_brute_size(int n) {
    if (n > kMaxBruteQubits) {
        throw ResourceError("dense 2^n x 2^n reference is guarded to n <= " +
                            std::to_string(kMaxBruteQubits));
    }
}

}  // namespace

const char *to_string(PermClass c) {
    switch (c) {
        case PermClass::UniformlyCorrect:
            return "UNIFORMLY_CORRECT";
        case PermClass::Nondeterministic:
            return "NONDETERMINISTIC";
        case PermClass::DeterministicWrong:
            return "DETERMINISTIC_WRONG";
    }
    return "?";
}

StateVector brute_matrix_apply(const SignedPermutationOracle &o, const StateVector &s) {
    if (o.qubit_count() != s.qubit_count()) {
        throw std::invalid_argument("oracle and state have different qubit counts");
    }
    check_brute_size(o.qubit_count());
    const std::size_t size = s.size();
    std::vector<std::vector<std::int64_t>> matrix(size, std::vector<std::int64_t>(size, 0));
    for (std::uint32_t j = 0; j < size; j++) {
        matrix[o.perm()(j)][j] = o.mask().sign(j);
    }
    std::vector<std::int64_t> out(size, 0);
    for (std::size_t row = 0; row < size; row++) {
        std::int64_t acc = 0;
        for (std::size_t col = 0; col < size; col++) {
            acc += matrix[row][col] * s.coeffs()[col];
        }
        out[row] = acc;
    }
    return StateVector::from_coeffs(s.qubit_count(), s.half_power(), std::move(out));
}

bool check_oracle_unitary(const SignedPermutationOracle &o) {
    check_brute_size(o.qubit_count());
    const std::size_t size = o.size();
    std::vector<std::vector<std::int64_t>> matrix(size, std::vector<std::int64_t>(size, 0));
    for (std::uint32_t j = 0; j < size; j++) {
        matrix[o.perm()(j)][j] = o.mask().sign(j);
    }
    for (std::size_t row = 0; row < size; row++) {
        for (std::size_t col = 0; col < size; col++) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < size; k++) {
                acc += matrix[k][row] * matrix[k][col];
            }
            if (acc != (row == col ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

PermVerdict exhaustive_check(const Permutation &perm, int l) {
    const int n = perm.qubit_count();
    qubit_mask(n, l);  // validates the label
    const std::uint64_t inputs = std::uint64_t{1} << n;

    bool any_nondet = false;
    bool any_wrong = false;
    std::optional<FailureWitness> first_nondet;
    std::optional<FailureWitness> first_wrong;

    for (Variant sealed : {Variant::U1, Variant::U2}) {
        for (std::uint64_t i = 0; i < inputs; i++) {
            BlackBoxHandle handle =
                seal(sealed == Variant::U1 ? make_u1(perm) : make_u2(perm, l));
            const DiscriminationReport report = run_discrimination(handle, l, i);
            if (!report.deterministic) {
                any_nondet = true;
                if (!first_nondet) {
                    first_nondet = FailureWitness{i, sealed};
                }
            } else if (report.decision != sealed) {
                any_wrong = true;
                if (!first_wrong) {
                    first_wrong = FailureWitness{i, sealed};
                }
            }
        }
    }

    PermVerdict verdict;
    if (perm.size() <= 20) {
        verdict.rank = perm_rank(perm.images());
    }
    if (any_nondet) {
        verdict.classification = PermClass::Nondeterministic;
        verdict.witness = first_nondet;
    } else if (any_wrong) {
        verdict.classification = PermClass::DeterministicWrong;
        verdict.witness = first_wrong;
    } else {
        verdict.classification = PermClass::UniformlyCorrect;
    }
    return verdict;
}

std::uint64_t factorial(unsigned m) {
    if (m > 20) {
        throw ResourceError("factorial(" + std::to_string(m) + ") does not fit in 64 bits");
    }
    std::uint64_t out = 1;
    for (unsigned k = 2; k <= m; k++) {
        out *= k;
    }
    return out;
}

std::uint64_t perm_rank(std::span<const std::uint32_t> images) {
    const std::size_t size = images.size();
    std::uint64_t rank = 0;
    for (std::size_t pos = 0; pos < size; pos++) {
        std::uint64_t smaller_later = 0;
        for (std::size_t rest = pos + 1; rest < size; rest++) {
            smaller_later += images[rest] < images[pos];
        }
        rank += smaller_later * factorial(static_cast<unsigned>(size - 1 - pos));
    }
    return rank;
}

std::vector<std::uint32_t> perm_unrank(std::size_t size, std::uint64_t rank) {
    if (rank >= factorial(static_cast<unsigned>(size))) {
        throw std::out_of_range("permutation rank out of range");
    }
    std::vector<std::uint32_t> pool(size);
    for (std::size_t k = 0; k < size; k++) {
        pool[k] = static_cast<std::uint32_t>(k);
    }
    std::vector<std::uint32_t> images;
    images.reserve(size);
    for (std::size_t pos = 0; pos < size; pos++) {
        const std::uint64_t digit_base = factorial(static_cast<unsigned>(size - 1 - pos));
        const std::size_t digit = static_cast<std::size_t>(rank / digit_base);
        rank %= digit_base;
        images.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return images;
}

namespace {

struct CensusTally {
    std::uint64_t examined = 0;
    std::uint64_t uniformly_correct = 0;
    std::uint64_t nondeterministic = 0;
    std::uint64_t deterministic_wrong = 0;
    std::uint64_t commuting = 0;
    bool sets_identical = true;

    void add(const Permutation &perm, int l) {
        const PermVerdict verdict = exhaustive_check(perm, l);
        const bool commutes = commutes_with_bitflip(perm, l);
        examined++;
        commuting += commutes;
        switch (verdict.classification) {
            case PermClass::UniformlyCorrect:
                uniformly_correct++;
                break;
            case PermClass::Nondeterministic:
                nondeterministic++;
                break;
            case PermClass::DeterministicWrong:
                deterministic_wrong++;
                break;
        }
        sets_identical &= (verdict.classification == PermClass::UniformlyCorrect) == commutes;
    }

    void merge(const CensusTally &other) {
        examined += other.examined;
        uniformly_correct += other.uniformly_correct;
        nondeterministic += other.nondeterministic;
        deterministic_wrong += other.deterministic_wrong;
        commuting += other.commuting;
        sets_identical &= other.sets_identical;
    }
};

constexpr int kMaxExhaustiveCensusQubits = 3;

}  // namespace

CensusReport census(int n, int l, const CensusOptions &options) {
    qubit_mask(n, l);  // validates n and the label
    if (options.sample_count == 0 && n > kMaxExhaustiveCensusQubits) {
        throw ResourceError("exhaustive census is guarded to n <= " +
                            std::to_string(kMaxExhaustiveCensusQubits) +
                            " ((2^n)! tables); pass a sample count for larger n");
    }

    const auto start_time = std::chrono::steady_clock::now();
    const bool sampled = options.sample_count > 0;
    const std::size_t table = std::size_t{1} << n;
    const std::uint64_t jobs = sampled ? options.sample_count
                                       : factorial(static_cast<unsigned>(table));

    int workers = options.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) {
            workers = 1;
        }
    }
    workers = static_cast<int>(std::min<std::uint64_t>(workers, jobs));

    // Contiguous job ranges per worker keep the outcome independent of the
    // worker count.
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, CensusTally &tally) {
        if (sampled) {
            for (std::uint64_t idx = lo; idx < hi; idx++) {
                std::uint64_t stream = options.seed + idx;
                tally.add(random_permutation(n, splitmix64(stream)), l);
            }
        } else {
            std::vector<std::uint32_t> images = perm_unrank(table, lo);
            for (std::uint64_t rank = lo; rank < hi; rank++) {
                tally.add(Permutation::from_images(n, images), l);
                std::next_permutation(images.begin(), images.end());
            }
        }
    };

    std::vector<CensusTally> tallies(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = jobs / workers;
    const std::uint64_t extra = jobs % workers;
    std::uint64_t cursor = 0;
    for (int w = 0; w < workers; w++) {
        const std::uint64_t lo = cursor;
        const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        cursor = hi;
        if (w == workers - 1) {
            run_range(lo, hi, tallies[static_cast<std::size_t>(w)]);
        } else {
            pool.emplace_back(run_range, lo, hi, std::ref(tallies[static_cast<std::size_t>(w)]));
        }
    }
    for (std::thread &t : pool) {
        t.join();
    }

    CensusTally total;
    for (const CensusTally &tally : tallies) {
        total.merge(tally);
    }

    CensusReport report;
    report.n = n;
    report.designated_qubit = l;
    report.sampled = sampled;
    report.examined = total.examined;
    report.uniformly_correct = total.uniformly_correct;
    report.nondeterministic = total.nondeterministic;
    report.deterministic_wrong = total.deterministic_wrong;
    report.commuting = total.commuting;
    report.sets_identical = total.sets_identical;
    report.seed = options.seed;
    report.workers = workers;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time)
            .count();
    return report;
}

}  // namespace oneq
