// Copyright 2026 The hardyq Authors
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

#pragma once

/**
 * @file
 * JSON and CSV encodings used by the command-line tool and the Python
 * bindings. Malformed input raises ParseError.
 *
 *   state:       {"dims":[d1,d2],"kind":"pure"|"density","data":[[re,im],...]}
 *   observable:  {"dim":d,"outcomes":[{"label":x,"projector":[[re,im],...]},...]}
 *                or {"bloch":{"theta":t,"phi":p}} for a qubit spin observable
 *   scenario:    {"x1":obs,"y1":obs,"x2":obs,"y2":obs}
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "hardyq/lhv.hpp"
#include "hardyq/search.hpp"
#include "hardyq/witness.hpp"

namespace hardyq::io {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const QuantumState &state);
[[nodiscard]] Json to_json(const Observable &obs);
[[nodiscard]] Json to_json(const Scenario &sc);
[[nodiscard]] Json to_json(const WitnessReport &report);
[[nodiscard]] Json to_json(const FeasibilityResult &result);
[[nodiscard]] Json to_json(const SearchResult &result);
[[nodiscard]] Json to_json(BlochDirection dir);

[[nodiscard]] QuantumState state_from_json(const Json &j);
[[nodiscard]] Observable observable_from_json(const Json &j);
[[nodiscard]] Scenario scenario_from_json(const Json &j);

/// Reads a whole file, or standard input when path is "-".
[[nodiscard]] std::string read_text(const std::string &path);
[[nodiscard]] Json parse_json(const std::string &text);

/// Nine significant digits, or full round-trip precision.
[[nodiscard]] std::string format_number(double value, bool full_precision = false);

/// Header X1,X2,Y1,Y2,value; one row per strategy in canonical order.
[[nodiscard]] std::string vertices_csv(bool trichotomic);
/// Header parameter,q1,q2,q3,q4,q5,q6,generalized,ch; q5/q6 left empty for
/// dichotomic rows.
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow> &rows);

} // namespace hardyq::io
