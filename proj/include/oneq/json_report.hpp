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

#ifndef ONEQ_JSON_REPORT_HPP
#define ONEQ_JSON_REPORT_HPP

#include <json.hpp>

#include "oneq/discriminator.hpp"
#include "oneq/verifier.hpp"

// Machine-readable reports. Every numeric field is an integer; exact
// probabilities are "num/den" strings, never floats. Each document carries a
// versioned top-level "schema" field.

namespace oneq {

nlohmann::json run_report_json(const DiscriminationReport &report);
nlohmann::json verify_report_json(int n, int l, const PermVerdict &verdict, bool commuting);
nlohmann::json census_report_json(const CensusReport &report);

}  // namespace oneq

#endif
