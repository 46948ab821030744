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

#include "oneq/circuit_render.hpp"

#include <sstream>
#include <stdexcept>

namespace oneq {

std::string render_circuit_ascii(int n, int l) {
    if (n < 1 || n > 16) {
        throw std::invalid_argument("circuit rendering is limited to 1 <= n <= 16");
    }
    if (l < 1 || l > n) {
        throw std::invalid_argument("qubit label " + std::to_string(l) + " out of range 1.." +
                                    std::to_string(n));
    }

    const std::size_t label_width = ("q" + std::to_string(n - 1) + ":").size();
    const std::string gap(label_width + 1, ' ');
    const std::string lead = "--[H]--";
    const std::string lead_blank(lead.size(), ' ');
    const std::string meter_tail = "--[H]--(M)--";
    const std::string plain_tail(meter_tail.size(), '-');
    const int label_row = (n - 1) / 2;  // the box carries its U on this wire

    std::ostringstream out;
    out << gap << lead_blank << "+---+" << "\n";
    for (int wire = 0; wire < n; wire++) {
        std::string label = "q" + std::to_string(wire) + ":";
        label.resize(label_width, ' ');
        out << label << " " << lead << (wire == label_row ? "| U |" : "|   |")
            << (wire == l - 1 ? meter_tail : plain_tail) << "\n";
        if (wire + 1 < n) {
            out << gap << lead_blank << "|   |" << "\n";
        }
    }
    out << gap << lead_blank << "+---+" << "\n";
    return out.str();
}

}  // namespace oneq
