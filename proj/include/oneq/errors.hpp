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

#ifndef ONEQ_ERRORS_HPP
#define ONEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oneq {

/// Base class for all errors raised by the library. Errors that reach the
/// command line map to stable exit codes (see tools/): invariant violations
/// in input data exit 3, resource guards exit 4, parse errors exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data violates a structural invariant (non-bijective permutation,
/// qubit label out of range in a document, mismatched dimensions).
struct InvariantError : Error {
    using Error::Error;
};

/// A size or width guard tripped (coefficient half-power would exceed the
/// 64-bit budget, qubit count above the table cap, census too large).
struct ResourceError : Error {
    using Error::Error;
};

/// A sealed-oracle handle was used out of protocol (e.g. reused for a
/// second discrimination run).
struct ProtocolError : Error {
    using Error::Error;
};

/// Syntax error while parsing an oracle spec document. Line and column are
/// 1-based; column 0 means "whole line".
struct ParseError : Error {
    int line;
    int column;

    ParseError(const std::string &message, int line_no, int column_no = 0)
        : Error("line " + std::to_string(line_no) +
                (column_no > 0 ? ", col " + std::to_string(column_no) : std::string()) + ": " + message),
          line(line_no),
          column(column_no) {
    }
};

}  // namespace oneq

#endif
