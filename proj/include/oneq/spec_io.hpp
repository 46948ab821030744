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

#ifndef ONEQ_SPEC_IO_HPP
#define ONEQ_SPEC_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oneq/oracle.hpp"

// Line-oriented oracle documents, diffable and hand-writable at small n:
//
//   # optional provenance comment
//   n 2
//   L 1
//   variant U2
//   perm 0 1 2 3
//   mask + + - -          (GENERAL only)
//
// Key lines appear in that order; "#" comment lines and blank lines may
// appear anywhere; the trailing newline is required. The L line is optional
// unless the variant is U2. Every structural invariant (bijection, label
// range, table caps) is enforced at parse time with a diagnostic naming the
// line.

namespace oneq {

struct OracleSpecDoc {
    int n = 1;
    std::optional<int> designated_qubit;
    Variant variant = Variant::U1;
    std::vector<std::uint32_t> perm_images;
    std::optional<std::vector<std::int8_t>> mask_signs;  // GENERAL only
    /// First comment line of the document, without the "# " marker; kept so
    /// a generated file's seed note survives a round trip.
    std::optional<std::string> provenance;

    bool operator==(const OracleSpecDoc &) const = default;
};

/// Parse and fully validate. Throws ParseError (syntax), InvariantError
/// (bijection, label range, missing required L) or ResourceError (n beyond
/// the table cap); all diagnostics name the line.
OracleSpecDoc parse_oracle_doc(std::string_view text);

/// Canonical serialization: single spaces, fixed line order, trailing
/// newline. parse(serialize(parse(text))) == parse(text) for every valid
/// document.
std::string serialize_oracle_doc(const OracleSpecDoc &doc);

SignedPermutationOracle oracle_from_doc(const OracleSpecDoc &doc);
OracleSpecDoc doc_from_oracle(const SignedPermutationOracle &oracle,
                              std::optional<std::string> provenance = std::nullopt);

/// Convenience: parse_oracle_doc + oracle_from_doc.
SignedPermutationOracle parse_oracle_spec(std::string_view text);

}  // namespace oneq

#endif
