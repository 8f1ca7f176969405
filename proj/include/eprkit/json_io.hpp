// Copyright 2026 The eprkit Authors
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

#pragma once

// JSON import and export. Complex numbers are [re, im] pairs, matrices are
// arrays of rows and index keys are comma-joined integers.

#include <string>
#include <variant>

#include <json.hpp>

#include "eprkit/assemblage.hpp"
#include "eprkit/bounds.hpp"
#include "eprkit/correlations.hpp"
#include "eprkit/functional.hpp"

namespace eprkit {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json operator_to_json(const HermitianOperator& op);
HermitianOperator operator_from_json(const Json& j);

Json assemblage_to_json(const Assemblage& a);
Assemblage assemblage_from_json(const Json& j);

using AnyFunctional = std::variant<EPRFunctional, BellCoefficients>;

Json functional_to_json(const EPRFunctional& f);
Json functional_to_json(const BellCoefficients& xi);
AnyFunctional functional_from_json(const Json& j);

Json correlations_to_json(const CorrelationTable& t);
CorrelationTable correlations_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json realisation_to_json(const QuantumRealisation& qr);
Json bound_report_to_json(const BoundReport& r);

/// Reads and parses a file. Throws ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

/// Serialised form used for files: two-space indentation.
std::string dump_json(const Json& j);

}  // namespace eprkit
