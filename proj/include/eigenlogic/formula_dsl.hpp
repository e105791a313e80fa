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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/logic_synthesis.hpp"

namespace eigenlogic {

enum class BinaryOp { And, Or, Xor, Nand, Nor, Equiv, Impl, Cimpl, Min, Max };

/// Keyword spelling, e.g. "AND".
std::string_view op_keyword(BinaryOp op) noexcept;

struct FormulaNode;
using FormulaPtr = std::shared_ptr<const FormulaNode>;

struct VarNode {
    char name;  // 'A'..'Z'
};

struct NotNode {
    FormulaPtr child;
};

struct BinaryNode {
    BinaryOp op;
    FormulaPtr left;
    FormulaPtr right;
};

struct FormulaNode {
    std::variant<VarNode, NotNode, BinaryNode> value;
};

/// Structural equality.
bool operator==(const FormulaNode &a, const FormulaNode &b);

FormulaPtr make_var(char name);
FormulaPtr make_not(FormulaPtr child);
FormulaPtr make_binary(BinaryOp op, FormulaPtr left, FormulaPtr right);

/// A parsed formula together with its variable binding.
struct Formula {
    FormulaPtr root;
    /// Argument order: the `vars` header when present, otherwise the
    /// distinct variables of the formula in alphabetical order.
    std::vector<char> variables;
    bool declared = false;

    std::optional<std::size_t> position_of(char name) const;
};

/// Grammar, loosest to tightest:
///
///   formula := [ "vars" VAR { "," VAR } ";" ] impl
///   impl    := or [ ("IMPL" | "CIMPL") impl ]        right-associative
///   or      := xor { ("OR" | "NOR") xor }
///   xor     := and { ("XOR" | "EQUIV") and }
///   and     := unary { ("AND" | "NAND") unary }
///   unary   := "NOT" unary | primary
///   primary := VAR | "(" impl ")" | ("MIN" | "MAX") "(" impl "," impl ")"
///
/// VAR is a single uppercase letter. Throws SyntaxError with a 0-based
/// character offset.
Formula parse(std::string_view text);

/// Canonical fully-parenthesized text; parse(to_string(n)) rebuilds n.
std::string to_string(const FormulaNode &node);
/// Includes the `vars` header when the binding was declared.
std::string to_string(const Formula &formula);

struct CompiledFormula {
    std::size_t arity;
    ValueAlphabet alphabet;
    DiagObservable observable;
};

/// Evaluate the formula eigenvalue-wise: variables become dictators, NOT is
/// I − F on {0,1} and −G on {+1,−1}, binary connectives combine eigenvalue
/// vectors entrywise.
///
/// Boolean connectives need {0,1} or {+1,−1}; MIN/MAX need {+1,0,−1} or
/// {+1,−1}. Violations throw IncompatibleAlphabetError. A variable bound at a
/// position >= arity throws UnresolvedVariableError.
CompiledFormula compile(const Formula &formula, const ValueAlphabet &alphabet, std::size_t arity,
                        std::size_t dim_cap = kDefaultDimCap);

/// Recursive scalar evaluation at one assignment (one value per argument).
/// Shares the connective semantics of compile but none of its observable
/// machinery.
double eval_classical(const Formula &formula, const ValueAlphabet &alphabet, std::span<const double> assignment);

}  // namespace eigenlogic
