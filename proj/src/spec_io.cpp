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

#include "oneq/spec_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "oneq/errors.hpp"

namespace oneq {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ' || line[pos] == '\t') {
            pos++;
            continue;
        }
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') {
            end++;
        }
        tokens.push_back(Token{line.substr(pos, end - pos), static_cast<int>(pos + 1)});
        pos = end;
    }
    return tokens;
}

std::uint64_t parse_uint(const Token &token, int line_no) {
    std::uint64_t value = 0;
    const char *first = token.text.data();
    const char *last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("expected a non-negative integer, got '" + std::string(token.text) + "'",
                         line_no, token.column);
    }
    return value;
}

struct Cursor {
    std::vector<std::pair<int, std::string_view>> lines;  // (1-based line_no, content)
    std::size_t next = 0;

    bool done() const {
        return next >= lines.size();
    }
    std::pair<int, std::string_view> peek() const {
        return lines[next];
    }
};

}  // namespace

OracleSpecDoc parse_oracle_doc(std::string_view text) {
    if (text.empty() || text.back() != '\n') {
        const int last_line = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
        throw ParseError("missing required trailing newline", last_line);
    }

    OracleSpecDoc doc;
    Cursor cursor;
    {
        int line_no = 0;
        std::size_t start = 0;
        bool first_comment_seen = false;
        while (start < text.size()) {
            const std::size_t nl = text.find('\n', start);
            std::string_view line = text.substr(start, nl - start);
            line_no++;
            start = nl + 1;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            const std::size_t first_char = line.find_first_not_of(" \t");
            if (first_char == std::string_view::npos) {
                continue;  // blank
            }
            if (line[first_char] == '#') {
                if (!first_comment_seen) {
                    first_comment_seen = true;
                    std::size_t body = first_char + 1;
                    if (body < line.size() && line[body] == ' ') {
                        body++;
                    }
                    doc.provenance = std::string(line.substr(body));
                }
                continue;
            }
            cursor.lines.emplace_back(line_no, line);
        }
    }

    auto take = [&](std::string_view expected_key) -> std::pair<int, std::vector<Token>> {
        if (cursor.done()) {
            throw ParseError("unexpected end of document: expected a '" +
                                 std::string(expected_key) + "' line",
                             1 + static_cast<int>(std::count(text.begin(), text.end(), '\n')));
        }
        auto [line_no, line] = cursor.lines[cursor.next];
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text != expected_key) {
            throw ParseError("expected a '" + std::string(expected_key) + "' line, got '" +
                                 std::string(tokens.empty() ? std::string_view() : tokens[0].text) +
                                 "'",
                             line_no, tokens.empty() ? 0 : tokens[0].column);
        }
        cursor.next++;
        return {line_no, std::move(tokens)};
    };

    auto peek_key = [&]() -> std::string_view {
        if (cursor.done()) {
            return {};
        }
        auto [line_no, line] = cursor.peek();
        (void)line_no;
        std::vector<Token> tokens = tokenize(line);
        return tokens.empty() ? std::string_view() : tokens[0].text;
    };

    // n
    {
        auto [line_no, tokens] = take("n");
        if (tokens.size() != 2) {
            throw ParseError("'n' takes exactly one integer", line_no);
        }
        const std::uint64_t n = parse_uint(tokens[1], line_no);
        if (n < 1) {
            throw InvariantError("line " + std::to_string(line_no) +
                                 ": qubit count must be >= 1");
        }
        if (n > static_cast<std::uint64_t>(kMaxQubits)) {
            throw ResourceError("line " + std::to_string(line_no) + ": qubit count " +
                                std::to_string(n) + " exceeds the table cap of " +
                                std::to_string(kMaxQubits) +
                                " (the coefficient table is 2^n 64-bit words)");
        }
        doc.n = static_cast<int>(n);
    }

    // optional L
    if (peek_key() == "L") {
        auto [line_no, tokens] = take("L");
        if (tokens.size() != 2) {
            throw ParseError("'L' takes exactly one integer", line_no);
        }
        const std::uint64_t l = parse_uint(tokens[1], line_no);
        if (l < 1 || l > static_cast<std::uint64_t>(doc.n)) {
            throw InvariantError("line " + std::to_string(line_no) + ": qubit label " +
                                 std::to_string(l) + " out of range 1.." + std::to_string(doc.n));
        }
        doc.designated_qubit = static_cast<int>(l);
    }

    // variant
    {
        auto [line_no, tokens] = take("variant");
        if (tokens.size() != 2) {
            throw ParseError("'variant' takes exactly one of U1, U2, GENERAL", line_no);
        }
        if (tokens[1].text == "U1") {
            doc.variant = Variant::U1;
        } else if (tokens[1].text == "U2") {
            doc.variant = Variant::U2;
        } else if (tokens[1].text == "GENERAL") {
            doc.variant = Variant::General;
        } else {
            throw ParseError("unknown variant '" + std::string(tokens[1].text) +
                                 "' (expected U1, U2 or GENERAL)",
                             line_no, tokens[1].column);
        }
        if (doc.variant == Variant::U2 && !doc.designated_qubit) {
            throw InvariantError("line " + std::to_string(line_no) +
                                 ": variant U2 requires an L line");
        }
    }

    // perm
    {
        auto [line_no, tokens] = take("perm");
        const std::size_t size = std::size_t{1} << doc.n;
        if (tokens.size() != size + 1) {
            throw ParseError("'perm' needs exactly 2^n = " + std::to_string(size) +
                                 " images, got " + std::to_string(tokens.size() - 1),
                             line_no);
        }
        for (std::size_t k = 1; k < tokens.size(); k++) {
            const std::uint64_t image = parse_uint(tokens[k], line_no);
            if (image >= size) {
                throw InvariantError("line " + std::to_string(line_no) + ": permutation image " +
                                     std::to_string(image) + " out of range 0.." +
                                     std::to_string(size - 1));
            }
            doc.perm_images.push_back(static_cast<std::uint32_t>(image));
        }
        try {
            Permutation::from_images(doc.n, doc.perm_images);
        } catch (const InvariantError &e) {
            throw InvariantError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    // optional mask (GENERAL only)
    if (peek_key() == "mask") {
        auto [line_no, tokens] = take("mask");
        if (doc.variant != Variant::General) {
            throw ParseError("a mask line is only allowed for variant GENERAL", line_no);
        }
        const std::size_t size = std::size_t{1} << doc.n;
        if (tokens.size() != size + 1) {
            throw ParseError("'mask' needs exactly 2^n = " + std::to_string(size) +
                                 " entries, got " + std::to_string(tokens.size() - 1),
                             line_no);
        }
        std::vector<std::int8_t> signs;
        for (std::size_t k = 1; k < tokens.size(); k++) {
            if (tokens[k].text == "+") {
                signs.push_back(1);
            } else if (tokens[k].text == "-") {
                signs.push_back(-1);
            } else {
                throw ParseError("mask entries must be '+' or '-', got '" +
                                     std::string(tokens[k].text) + "'",
                                 line_no, tokens[k].column);
            }
        }
        doc.mask_signs = std::move(signs);
    }

    if (!cursor.done()) {
        auto [line_no, line] = cursor.peek();
        std::vector<Token> tokens = tokenize(line);
        throw ParseError("unexpected line after the document: '" +
                             std::string(tokens.empty() ? std::string_view() : tokens[0].text) +
                             "'",
                         line_no);
    }
    return doc;
}

std::string serialize_oracle_doc(const OracleSpecDoc &doc) {
    std::ostringstream out;
    if (doc.provenance) {
        out << "# " << *doc.provenance << "\n";
    }
    out << "n " << doc.n << "\n";
    if (doc.designated_qubit) {
        out << "L " << *doc.designated_qubit << "\n";
    }
    out << "variant " << to_string(doc.variant) << "\n";
    out << "perm";
    for (std::uint32_t image : doc.perm_images) {
        out << " " << image;
    }
    out << "\n";
    if (doc.mask_signs) {
        out << "mask";
        for (std::int8_t sign : *doc.mask_signs) {
            out << " " << (sign > 0 ? "+" : "-");
        }
        out << "\n";
    }
    return out.str();
}

SignedPermutationOracle oracle_from_doc(const OracleSpecDoc &doc) {
    Permutation perm = Permutation::from_images(doc.n, doc.perm_images);
    switch (doc.variant) {
        case Variant::U1:
            return make_u1(std::move(perm));
        case Variant::U2:
            return make_u2(std::move(perm), *doc.designated_qubit);
        case Variant::General: {
            DiagonalSignMask mask = doc.mask_signs
                                        ? DiagonalSignMask::from_signs(doc.n, *doc.mask_signs)
                                        : DiagonalSignMask::all_plus(doc.n);
            return make_general(std::move(perm), std::move(mask), doc.designated_qubit);
        }
    }
    throw std::logic_error("unreachable variant");
}

OracleSpecDoc doc_from_oracle(const SignedPermutationOracle &oracle,
                              std::optional<std::string> provenance) {
    OracleSpecDoc doc;
    doc.n = oracle.qubit_count();
    doc.designated_qubit = oracle.designated_qubit();
    doc.variant = oracle.variant();
    doc.perm_images.assign(oracle.perm().images().begin(), oracle.perm().images().end());
    if (oracle.variant() == Variant::General) {
        doc.mask_signs = std::vector<std::int8_t>(oracle.mask().signs().begin(),
                                                  oracle.mask().signs().end());
    }
    doc.provenance = std::move(provenance);
    return doc;
}

SignedPermutationOracle parse_oracle_spec(std::string_view text) {
    return oracle_from_doc(parse_oracle_doc(text));
}

}  // namespace oneq
