// Copyright 2026 The Eigenlogic Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/fuzzy_measure.hpp"
#include "eigenlogic/logic_synthesis.hpp"
#include "json.hpp"

namespace eigenlogic {

using Json = nlohmann::json;

// JSON forms. Readers throw InvalidArgumentError on malformed documents.

/// {"arities": [...], "eigenvalues": [...]}
Json to_json(const DiagObservable &f);
DiagObservable diag_observable_from_json(const Json &j);

/// {"dim": n, "re": [...], "im": [...]}, row-major.
Json to_json(const DenseMatrix &m);
DenseMatrix dense_matrix_from_json(const Json &j);

/// {"arities": [...], "re": [...], "im": [...]}
Json to_json(const StateVector &s);
StateVector state_vector_from_json(const Json &j);

/// {"alphabet": [...], "names": [...], "arity": n, "outputs": [...]}
Json to_json(const TruthTable &t);
TruthTable truth_table_from_json(const Json &j);

/// Text form:
///
///   alphabet: 0,1
///   arity: 2
///   0 0 0 1
///
/// Outputs are whitespace separated and may span lines; blank lines are
/// ignored.
std::string format_truth_table(const TruthTable &t);
TruthTable parse_truth_table(std::string_view text);

/// 12 significant digits, negative zero printed as 0.
std::string format_real(double x);
/// Shortest decimal form that parses back to the same double.
std::string format_real_exact(double x);
/// Strict decimal parse; throws InvalidArgumentError.
double parse_real(std::string_view text);
/// Comma-separated reals, e.g. "+1,0,-1".
std::vector<double> parse_real_list(std::string_view text);

}  // namespace eigenlogic
