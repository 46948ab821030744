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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oneq/errors.hpp"
#include "oneq/spec_io.hpp"

using namespace oneq;

namespace {

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("parse a plain U2 document") {
    OracleSpecDoc doc = parse_oracle_doc("n 2\nL 1\nvariant U2\nperm 0 1 2 3\n");
    CHECK(doc.n == 2);
    CHECK(doc.designated_qubit == 1);
    CHECK(doc.variant == Variant::U2);
    CHECK(doc.perm_images == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK_FALSE(doc.mask_signs.has_value());

    SignedPermutationOracle oracle = oracle_from_doc(doc);
    CHECK(oracle.variant() == Variant::U2);
    CHECK(oracle.designated_qubit() == 1);
    CHECK(oracle.mask() == DiagonalSignMask::qubit_indicator(2, 1));
}

TEST_CASE("comments, blank lines and provenance") {
    const std::string text =
        "# generated: seed=9\n"
        "\n"
        "n 2\n"
        "# a stray remark\n"
        "L 2\n"
        "variant U1\n"
        "\n"
        "perm 3 2 1 0\n";
    OracleSpecDoc doc = parse_oracle_doc(text);
    CHECK(doc.provenance == "generated: seed=9");
    CHECK(doc.designated_qubit == 2);
    CHECK(doc.perm_images == std::vector<std::uint32_t>{3, 2, 1, 0});

    // provenance survives a round trip through the canonical form
    OracleSpecDoc again = parse_oracle_doc(serialize_oracle_doc(doc));
    CHECK(again == doc);
}

TEST_CASE("general variant with a mask") {
    OracleSpecDoc doc = parse_oracle_doc("n 1\nvariant GENERAL\nperm 0 1\nmask + -\n");
    CHECK(doc.variant == Variant::General);
    REQUIRE(doc.mask_signs.has_value());
    CHECK(*doc.mask_signs == std::vector<std::int8_t>{1, -1});
    CHECK(oracle_from_doc(doc).mask().sign(1) == -1);

    // GENERAL without a mask line means all-plus
    OracleSpecDoc bare = parse_oracle_doc("n 1\nvariant GENERAL\nperm 1 0\n");
    CHECK(oracle_from_doc(bare).mask().all_positive());
}

TEST_CASE("syntax errors carry line numbers") {
    // bijection violation (the spec example)
    try {
        parse_oracle_doc("n 2\nvariant U1\nperm 0 1 1 3\n");
        FAIL("expected InvariantError");
    } catch (const InvariantError &e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("repeated") != std::string::npos);
    }

    try {
        parse_oracle_doc("n 2\nvariant U1\nperm 0 1 2 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 3);
        CHECK(e.column > 0);
    }

    CHECK_THROWS_AS(parse_oracle_doc(""), ParseError);
    CHECK_THROWS_AS(parse_oracle_doc("n 2\nvariant U1\nperm 0 1 2 3"), ParseError);  // no \n
    CHECK_THROWS_AS(parse_oracle_doc("variant U1\nn 1\nperm 0 1\n"), ParseError);  // order
    CHECK_THROWS_AS(parse_oracle_doc("n 1\nvariant U9\nperm 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_oracle_doc("n 1\nvariant U1\nperm 0 1\nextra\n"), ParseError);
    CHECK_THROWS_AS(parse_oracle_doc("n 1\nvariant U1\nperm 0 1\nmask + -\n"), ParseError);
    CHECK_THROWS_AS(parse_oracle_doc("n 1\nvariant U1\nperm 0\n"), ParseError);  // count
}

TEST_CASE("invariant and resource errors at parse time") {
    // L out of range
    CHECK_THROWS_AS(parse_oracle_doc("n 2\nL 3\nvariant U1\nperm 0 1 2 3\n"), InvariantError);
    // U2 without L
    CHECK_THROWS_AS(parse_oracle_doc("n 2\nvariant U2\nperm 0 1 2 3\n"), InvariantError);
    // n too large for the 64-bit coefficient tables
    CHECK_THROWS_AS(parse_oracle_doc("n 21\nvariant U1\nperm 0\n"), ResourceError);
    // n of zero
    CHECK_THROWS_AS(parse_oracle_doc("n 0\nvariant U1\nperm 0\n"), InvariantError);
}

TEST_CASE("serialize emits the canonical form") {
    OracleSpecDoc doc;
    doc.n = 2;
    doc.designated_qubit = 1;
    doc.variant = Variant::U2;
    doc.perm_images = {0, 1, 2, 3};
    CHECK(serialize_oracle_doc(doc) == "n 2\nL 1\nvariant U2\nperm 0 1 2 3\n");

    doc.variant = Variant::General;
    doc.mask_signs = std::vector<std::int8_t>{1, -1, -1, 1};
    doc.provenance = "note";
    CHECK(serialize_oracle_doc(doc) ==
          "# note\nn 2\nL 1\nvariant GENERAL\nperm 0 1 2 3\nmask + - - +\n");
}

TEST_CASE("round trip is a fixpoint over the on-disk corpus") {
    const std::filesystem::path dir = std::filesystem::path(ONEQ_TEST_DATA_DIR) / "specs";
    std::size_t count = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".oracle") {
            continue;
        }
        count++;
        CAPTURE(entry.path().string());
        const std::string text = slurp(entry.path());
        OracleSpecDoc doc = parse_oracle_doc(text);
        const std::string canonical = serialize_oracle_doc(doc);
        OracleSpecDoc reparsed = parse_oracle_doc(canonical);
        REQUIRE(reparsed == doc);
        REQUIRE(serialize_oracle_doc(reparsed) == canonical);
        // the oracle built from the doc survives the trip too
        REQUIRE(oracle_from_doc(reparsed) == oracle_from_doc(doc));
    }
    CHECK(count >= 20);
}

TEST_CASE("doc_from_oracle") {
    SignedPermutationOracle oracle = make_u2(Permutation::from_images(2, {1, 0, 3, 2}), 2);
    OracleSpecDoc doc = doc_from_oracle(oracle, "made in a test");
    CHECK(doc.designated_qubit == 2);
    CHECK(doc.provenance == "made in a test");
    CHECK(oracle_from_doc(doc) == oracle);
    CHECK(parse_oracle_spec(serialize_oracle_doc(doc)) == oracle);
}
