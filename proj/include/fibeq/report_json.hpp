// Copyright 2026 The fibeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON rendering of verification, leak and benchmark reports. Field names
// are stable; docs/report.schema.json describes them.

#ifndef FIBEQ_REPORT_JSON_HPP_
#define FIBEQ_REPORT_JSON_HPP_

#include <span>
#include <string>

#include "json.hpp"

#include "fibeq/fib_table.hpp"
#include "fibeq/spacecheck.hpp"
#include "fibeq/verifier.hpp"

namespace fibeq {

inline constexpr const char* kToolName = "fibeq";

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                              std::span<const FibTable> tables);

nlohmann::ordered_json leak_report_to_json(const LeakReport& report,
                                   std::span<const FibTable> tables);

// One benchmark row: a verification report whose timings are medians over
// `repeats` runs.
nlohmann::ordered_json bench_row_to_json(const VerificationReport& report,
                                 std::span<const FibTable> tables,
                                 int repeats);

// Plain-text renderings for --output human.
std::string report_to_text(const VerificationReport& report,
                           std::span<const FibTable> tables);
std::string leak_report_to_text(const LeakReport& report,
                                std::span<const FibTable> tables);

}  // namespace fibeq

#endif  // FIBEQ_REPORT_JSON_HPP_
