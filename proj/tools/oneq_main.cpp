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

// One-shot batch CLI around the discriminator and verifier. Exit codes are
// stable: 0 success, 2 usage or parse error, 3 invariant violation in input,
// 4 resource guard tripped, 1 unexpected internal failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "oneq/circuit_render.hpp"
#include "oneq/discriminator.hpp"
#include "oneq/errors.hpp"
#include "oneq/json_report.hpp"
#include "oneq/spec_io.hpp"
#include "oneq/verifier.hpp"

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int designated_qubit_of(const oneq::OracleSpecDoc &doc) {
    if (!doc.designated_qubit) {
        throw oneq::InvariantError(
            "oracle spec has no L line; this command needs the designated qubit");
    }
    return *doc.designated_qubit;
}

struct RunArgs {
    std::string oracle_path;
    std::string input_bits;
    bool json = false;
    bool sample = false;
    std::uint64_t seed = 0;
};

int cmd_run(const RunArgs &args) {
    const oneq::OracleSpecDoc doc = oneq::parse_oracle_doc(read_file(args.oracle_path));
    const int l = designated_qubit_of(doc);
    std::string bits = args.input_bits.empty() ? std::string(doc.n, '0') : args.input_bits;
    if (bits.size() != static_cast<std::size_t>(doc.n)) {
        throw std::invalid_argument("--input needs exactly n=" + std::to_string(doc.n) +
                                    " bits (qubit 1 first)");
    }
    const std::uint64_t input = oneq::bits_to_index(bits);

    oneq::BlackBoxHandle handle = oneq::seal(oneq::oracle_from_doc(doc));
    const oneq::DiscriminationReport report = oneq::run_discrimination(handle, l, input);

    std::optional<int> sampled;
    if (args.sample) {
        sampled = oneq::sample_bit(report.marginal, args.seed);
    }

    if (args.json) {
        nlohmann::json out = oneq::run_report_json(report);
        if (sampled) {
            out["sampled_outcome"] = *sampled;
            out["sample_seed"] = args.seed;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "n " << report.n << ", L " << report.designated_qubit << ", input " << bits
              << "\n";
    std::cout << "decision: " << to_string(report.decision) << "\n";
    std::cout << "outcome: " << report.outcome_bit << " (initial " << report.initial_bit << ")\n";
    std::cout << "marginal p(1): " << report.marginal.str() << "\n";
    std::cout << "deterministic: " << (report.deterministic ? "yes" : "no") << "\n";
    std::cout << "queries: " << report.queries_used << "\n";
    std::cout << "hadamards: " << report.hadamards_used << "\n";
    if (sampled) {
        std::cout << "sampled outcome: " << *sampled << " (seed " << args.seed << ")\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string oracle_path;
    bool json = false;
};

int cmd_verify(const VerifyArgs &args) {
    const oneq::OracleSpecDoc doc = oneq::parse_oracle_doc(read_file(args.oracle_path));
    const int l = designated_qubit_of(doc);
    const oneq::Permutation perm = oneq::Permutation::from_images(doc.n, doc.perm_images);
    const oneq::PermVerdict verdict = oneq::exhaustive_check(perm, l);
    const bool commuting = oneq::commutes_with_bitflip(perm, l);

    if (args.json) {
        std::cout << oneq::verify_report_json(doc.n, l, verdict, commuting).dump() << "\n";
        return 0;
    }
    std::cout << "n " << doc.n << ", L " << l;
    if (verdict.rank) {
        std::cout << ", rank " << *verdict.rank;
    }
    std::cout << "\n";
    std::cout << "classification: " << to_string(verdict.classification) << "\n";
    if (verdict.witness) {
        std::cout << "witness: input " << oneq::index_to_bits(doc.n, verdict.witness->input)
                  << ", sealed " << to_string(verdict.witness->sealed) << "\n";
    }
    std::cout << "commutes with the qubit-" << l << " bit flip: " << (commuting ? "yes" : "no")
              << "\n";
    return 0;
}

struct CensusArgs {
    int n = 0;
    int l = 0;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    int workers = 0;
    bool json = false;
};

int cmd_census(const CensusArgs &args) {
    oneq::CensusOptions options;
    options.sample_count = args.sample;
    options.seed = args.seed;
    options.workers = args.workers;
    const oneq::CensusReport report = oneq::census(args.n, args.l, options);

    if (args.json) {
        std::cout << oneq::census_report_json(report).dump() << "\n";
        return 0;
    }
    std::cout << "census n " << report.n << ", L " << report.designated_qubit << " ("
              << (report.sampled ? "sampled" : "exhaustive") << ")\n";
    std::cout << "permutations examined: " << report.examined << "\n";
    std::cout << "uniformly correct: " << report.uniformly_correct << "\n";
    std::cout << "nondeterministic: " << report.nondeterministic << "\n";
    std::cout << "deterministic but wrong: " << report.deterministic_wrong << "\n";
    std::cout << "commuting with the bit flip: " << report.commuting << "\n";
    std::cout << "uniformly-correct set == commuting set: "
              << (report.sets_identical ? "yes" : "no") << "\n";
    std::cout << "workers: " << report.workers << ", elapsed ms: "
              << static_cast<std::int64_t>(report.elapsed_ms) << "\n";
    return 0;
}

struct MakeOracleArgs {
    int n = 0;
    int l = 0;
    std::string variant;
    bool commuting = false;
    std::uint64_t seed = 0;
};

int cmd_make_oracle(const MakeOracleArgs &args) {
    oneq::Permutation perm = args.commuting
                                 ? oneq::random_commuting_permutation(args.n, args.l, args.seed)
                                 : oneq::random_permutation(args.n, args.seed);
    oneq::SignedPermutationOracle oracle =
        args.variant == "U1" ? oneq::make_u1(std::move(perm))
                             : oneq::make_u2(std::move(perm), args.l);
    std::ostringstream note;
    note << "generated: seed=" << args.seed << " variant=" << args.variant
         << (args.commuting ? " commuting" : "");
    oneq::OracleSpecDoc doc = oneq::doc_from_oracle(oracle, note.str());
    doc.designated_qubit = args.l;  // recorded for U1 too, so `run` knows L
    std::cout << oneq::serialize_oracle_doc(doc);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact one-query discrimination of signed permutation oracles"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App *run = app.add_subcommand("run", "run the discrimination procedure once");
    run->add_option("--oracle", run_args.oracle_path, "oracle spec file")->required();
    run->add_option("--input", run_args.input_bits,
                    "basis input as a qubit-1-first bitstring (default: all zeros)");
    run->add_flag("--json", run_args.json, "emit a JSON report");
    CLI::Option *sample_flag =
        run->add_flag("--sample", run_args.sample, "draw a simulated measurement outcome");
    run->add_option("--seed", run_args.seed, "seed for --sample")->needs(sample_flag);

    VerifyArgs verify_args;
    CLI::App *verify =
        app.add_subcommand("verify", "classify the file's permutation over all inputs");
    verify->add_option("--oracle", verify_args.oracle_path, "oracle spec file")->required();
    verify->add_flag("--json", verify_args.json, "emit a JSON report");

    CensusArgs census_args;
    CLI::App *census = app.add_subcommand("census", "classify a whole permutation group");
    census->add_option("--n", census_args.n, "qubit count")->required();
    census->add_option("--L", census_args.l, "designated qubit (1-based)")->required();
    census->add_option("--sample", census_args.sample,
                       "sample this many seeded permutations instead of enumerating");
    census->add_option("--seed", census_args.seed, "seed for --sample");
    census->add_option("--workers", census_args.workers,
                       "worker threads (default: available parallelism)");
    census->add_flag("--json", census_args.json, "emit a JSON report");

    MakeOracleArgs make_args;
    CLI::App *make_oracle =
        app.add_subcommand("make-oracle", "write a seeded oracle spec to stdout");
    make_oracle->add_option("--n", make_args.n, "qubit count")->required();
    make_oracle->add_option("--L", make_args.l, "designated qubit (1-based)")->required();
    make_oracle->add_option("--variant", make_args.variant, "U1 or U2")
        ->required()
        ->check(CLI::IsMember({"U1", "U2"}));
    make_oracle->add_flag("--commuting", make_args.commuting,
                          "draw from the bit-flip commuting class");
    make_oracle->add_option("--seed", make_args.seed, "permutation seed")->required();

    int show_n = 0;
    int show_l = 0;
    CLI::App *show = app.add_subcommand("show", "draw the discrimination circuit");
    show->add_option("--n", show_n, "qubit count")->required();
    show->add_option("--L", show_l, "designated qubit (1-based)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_args);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_args);
        }
        if (census->parsed()) {
            return cmd_census(census_args);
        }
        if (make_oracle->parsed()) {
            return cmd_make_oracle(make_args);
        }
        if (show->parsed()) {
            std::cout << oneq::render_circuit_ascii(show_n, show_l);
            return 0;
        }
    } catch (const oneq::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const oneq::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const oneq::InvariantError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
