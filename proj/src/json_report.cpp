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

#include "oneq/json_report.hpp"

#include <cmath>

namespace oneq {

nlohmann::json run_report_json(const DiscriminationReport &report) {
    return nlohmann::json{
        {"schema", "oneq.run/1"},
        {"n", report.n},
        {"L", report.designated_qubit},
        {"input", index_to_bits(report.n, report.input_index)},
        {"initial_bit", report.initial_bit},
        {"decision", to_string(report.decision)},
        {"outcome", report.outcome_bit},
        {"marginal", report.marginal.str()},
        {"deterministic", report.deterministic},
        {"queries", report.queries_used},
        {"hadamards", report.hadamards_used},
    };
}

nlohmann::json verify_report_json(int n, int l, const PermVerdict &verdict, bool commuting) {
    nlohmann::json doc{
        {"schema", "oneq.verify/1"},
        {"n", n},
        {"L", l},
        {"classification", to_string(verdict.classification)},
        {"commuting", commuting},
    };
    if (verdict.rank) {
        doc["rank"] = *verdict.rank;
    }
    if (verdict.witness) {
        doc["witness"] = nlohmann::json{
            {"input", index_to_bits(n, verdict.witness->input)},
            {"sealed", to_string(verdict.witness->sealed)},
        };
    }
    return doc;
}

nlohmann::json census_report_json(const CensusReport &report) {
    nlohmann::json doc{
        {"schema", "oneq.census/1"},
        {"n", report.n},
        {"L", report.designated_qubit},
        {"mode", report.sampled ? "sampled" : "exhaustive"},
        {"total", report.examined},
        {"uniformly_correct", report.uniformly_correct},
        {"nondeterministic", report.nondeterministic},
        {"deterministic_wrong", report.deterministic_wrong},
        {"commuting", report.commuting},
        {"sets_identical", report.sets_identical},
        {"workers", report.workers},
        {"elapsed_ms", static_cast<std::int64_t>(std::llround(report.elapsed_ms))},
    };
    if (report.sampled) {
        doc["seed"] = report.seed;
    }
    return doc;
}

}  // namespace oneq
