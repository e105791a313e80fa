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

#include "eigenlogic/formula_dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <utility>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

constexpr std::array<std::pair<std::string_view, BinaryOp>, 10> kKeywords = {{
    {"AND", BinaryOp::And},
    {"OR", BinaryOp::Or},
    {"XOR", BinaryOp::Xor},
    {"NAND", BinaryOp::Nand},
    {"NOR", BinaryOp::Nor},
    {"EQUIV", BinaryOp::Equiv},
    {"IMPL", BinaryOp::Impl},
    {"CIMPL", BinaryOp::Cimpl},
    {"MIN", BinaryOp::Min},
    {"MAX", BinaryOp::Max},
}};

bool is_lattice_op(BinaryOp op) { return op == BinaryOp::Min || op == BinaryOp::Max; }

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { Var, Not, Op, Vars, LParen, RParen, Comma, Semicolon, End };

struct Token {
    TokenKind kind;
    std::size_t offset;
    char var = 0;
    BinaryOp op = BinaryOp::And;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '(': out.push_back({TokenKind::LParen, i}); ++i; continue;
            case ')': out.push_back({TokenKind::RParen, i}); ++i; continue;
            case ',': out.push_back({TokenKind::Comma, i}); ++i; continue;
            case ';': out.push_back({TokenKind::Semicolon, i}); ++i; continue;
            default: break;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(i, "variable, keyword or parenthesis");

        std::size_t end = i;
        while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view word = text.substr(i, end - i);
        if (word.size() == 1 && std::isupper(static_cast<unsigned char>(c))) {
            out.push_back({TokenKind::Var, i, c});
        } else if (word == "NOT") {
            out.push_back({TokenKind::Not, i});
        } else if (word == "vars") {
            out.push_back({TokenKind::Vars, i});
        } else {
            auto it = std::find_if(kKeywords.begin(), kKeywords.end(), [&](const auto &kw) { return kw.first == word; });
            if (it == kKeywords.end()) throw SyntaxError(i, "single uppercase variable or keyword");
            Token t{TokenKind::Op, i};
            t.op = it->second;
            out.push_back(t);
        }
        i = end;
    }
    out.push_back({TokenKind::End, text.size()});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse_formula() {
        Formula f;
        if (peek().kind == TokenKind::Vars) {
            next();
            f.declared = true;
            while (true) {
                const Token &t = peek();
                if (t.kind != TokenKind::Var) throw SyntaxError(t.offset, "variable");
                if (std::find(f.variables.begin(), f.variables.end(), t.var) != f.variables.end()) {
                    throw SyntaxError(t.offset, "distinct variable");
                }
                f.variables.push_back(t.var);
                next();
                if (peek().kind == TokenKind::Comma) {
                    next();
                    continue;
                }
                expect(TokenKind::Semicolon, "',' or ';'");
                break;
            }
        }
        f.root = parse_impl();
        if (peek().kind != TokenKind::End) throw SyntaxError(peek().offset, "operator or end of input");
        return f;
    }

   private:
    const Token &peek() const { return tokens_[pos_]; }
    const Token &next() { return tokens_[pos_++]; }
    void expect(TokenKind kind, std::string_view what) {
        if (peek().kind != kind) throw SyntaxError(peek().offset, std::string(what));
        next();
    }
    bool at_op(BinaryOp a, BinaryOp b) const {
        return peek().kind == TokenKind::Op && (peek().op == a || peek().op == b);
    }

    FormulaPtr parse_impl() {
        FormulaPtr left = parse_or();
        if (at_op(BinaryOp::Impl, BinaryOp::Cimpl)) {
            const BinaryOp op = next().op;
            return make_binary(op, left, parse_impl());
        }
        return left;
    }

    FormulaPtr parse_or() {
        FormulaPtr left = parse_xor();
        while (at_op(BinaryOp::Or, BinaryOp::Nor)) {
            const BinaryOp op = next().op;
            left = make_binary(op, left, parse_xor());
        }
        return left;
    }

    FormulaPtr parse_xor() {
        FormulaPtr left = parse_and();
        while (at_op(BinaryOp::Xor, BinaryOp::Equiv)) {
            const BinaryOp op = next().op;
            left = make_binary(op, left, parse_and());
        }
        return left;
    }

    FormulaPtr parse_and() {
        FormulaPtr left = parse_unary();
        while (at_op(BinaryOp::And, BinaryOp::Nand)) {
            const BinaryOp op = next().op;
            left = make_binary(op, left, parse_unary());
        }
        return left;
    }

    FormulaPtr parse_unary() {
        if (peek().kind == TokenKind::Not) {
            next();
            return make_not(parse_unary());
        }
        return parse_primary();
    }

    FormulaPtr parse_primary() {
        const Token &t = peek();
        switch (t.kind) {
            case TokenKind::Var:
                next();
                return make_var(t.var);
            case TokenKind::LParen: {
                next();
                FormulaPtr inner = parse_impl();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::Op:
                if (is_lattice_op(t.op)) {
                    const BinaryOp op = next().op;
                    expect(TokenKind::LParen, "'(' after " + std::string(op_keyword(op)));
                    FormulaPtr left = parse_impl();
                    expect(TokenKind::Comma, "','");
                    FormulaPtr right = parse_impl();
                    expect(TokenKind::RParen, "')'");
                    return make_binary(op, left, right);
                }
                break;
            default:
                break;
        }
        throw SyntaxError(t.offset, "operand");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void collect_vars(const FormulaNode &node, std::vector<char> &out) {
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                out.push_back(n.name);
            } else if constexpr (std::is_same_v<T, NotNode>) {
                collect_vars(*n.child, out);
            } else {
                collect_vars(*n.left, out);
                collect_vars(*n.right, out);
            }
        },
        node.value);
}

// ---------------------------------------------------------------------------
// Semantics

enum class AlphabetKind { Projective, Isometric, Ternary, Other };

AlphabetKind kind_of(const ValueAlphabet &alphabet) {
    if (alphabet.has_values(ValueAlphabet::projective().values())) return AlphabetKind::Projective;
    if (alphabet.has_values(ValueAlphabet::isometric().values())) return AlphabetKind::Isometric;
    if (alphabet.has_values(ValueAlphabet::ternary().values())) return AlphabetKind::Ternary;
    return AlphabetKind::Other;
}

void check_compatible(const FormulaNode &node, AlphabetKind kind) {
    const bool boolean_ok = kind == AlphabetKind::Projective || kind == AlphabetKind::Isometric;
    const bool lattice_ok = kind == AlphabetKind::Ternary || kind == AlphabetKind::Isometric;
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NotNode>) {
                if (!boolean_ok) throw IncompatibleAlphabetError("NOT needs the {0,1} or {+1,-1} alphabet");
                check_compatible(*n.child, kind);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                if (is_lattice_op(n.op) ? !lattice_ok : !boolean_ok) {
                    throw IncompatibleAlphabetError(std::string(op_keyword(n.op)) +
                                                    (is_lattice_op(n.op) ? " needs the {+1,0,-1} or {+1,-1} alphabet"
                                                                         : " needs the {0,1} or {+1,-1} alphabet"));
                }
                check_compatible(*n.left, kind);
                check_compatible(*n.right, kind);
            }
        },
        node.value);
}

// True is 1 on {0,1} and -1 on {+1,-1}.
bool is_true(AlphabetKind kind, double v) { return kind == AlphabetKind::Projective ? v == 1.0 : v == -1.0; }

double encode(AlphabetKind kind, bool truth) {
    if (kind == AlphabetKind::Projective) return truth ? 1.0 : 0.0;
    return truth ? -1.0 : 1.0;
}

double negate(AlphabetKind kind, double v) { return encode(kind, !is_true(kind, v)); }

double connective_value(BinaryOp op, AlphabetKind kind, double a, double b) {
    // With True ≡ -1 the weaker value is the numerically larger one.
    if (op == BinaryOp::Min) return std::max(a, b);
    if (op == BinaryOp::Max) return std::min(a, b);
    const bool x = is_true(kind, a);
    const bool y = is_true(kind, b);
    bool r = false;
    switch (op) {
        case BinaryOp::And: r = x && y; break;
        case BinaryOp::Or: r = x || y; break;
        case BinaryOp::Xor: r = x != y; break;
        case BinaryOp::Nand: r = !(x && y); break;
        case BinaryOp::Nor: r = !(x || y); break;
        case BinaryOp::Equiv: r = x == y; break;
        case BinaryOp::Impl: r = !x || y; break;
        case BinaryOp::Cimpl: r = x || !y; break;
        default: break;
    }
    return encode(kind, r);
}

std::size_t resolve(const Formula &formula, char name, std::size_t arity) {
    auto pos = formula.position_of(name);
    if (!pos) throw UnresolvedVariableError(std::string("variable ") + name + " is not declared");
    if (*pos >= arity) {
        throw UnresolvedVariableError(std::string("variable ") + name + " binds to argument " + std::to_string(*pos) +
                                      " but the arity is " + std::to_string(arity));
    }
    return *pos;
}

DiagObservable compile_node(const FormulaNode &node, const Formula &formula, const ValueAlphabet &alphabet,
                            AlphabetKind kind, std::size_t arity, std::size_t dim_cap) {
    return std::visit(
        [&](const auto &n) -> DiagObservable {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                return dictator(resolve(formula, n.name, arity), arity, alphabet, dim_cap);
            } else if constexpr (std::is_same_v<T, NotNode>) {
                const auto f = compile_node(*n.child, formula, alphabet, kind, arity, dim_cap);
                return kind == AlphabetKind::Projective ? affine(1.0, -1.0, f) : affine(0.0, -1.0, f);
            } else {
                const auto l = compile_node(*n.left, formula, alphabet, kind, arity, dim_cap);
                const auto r = compile_node(*n.right, formula, alphabet, kind, arity, dim_cap);
                std::vector<double> out(l.dim());
                for (std::size_t w = 0; w < out.size(); ++w) out[w] = connective_value(n.op, kind, l[w], r[w]);
                return DiagObservable(l.arities(), std::move(out));
            }
        },
        node.value);
}

double eval_node(const FormulaNode &node, const Formula &formula, AlphabetKind kind,
                 std::span<const double> assignment) {
    return std::visit(
        [&](const auto &n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                return assignment[resolve(formula, n.name, assignment.size())];
            } else if constexpr (std::is_same_v<T, NotNode>) {
                return negate(kind, eval_node(*n.child, formula, kind, assignment));
            } else {
                return connective_value(n.op, kind, eval_node(*n.left, formula, kind, assignment),
                                        eval_node(*n.right, formula, kind, assignment));
            }
        },
        node.value);
}

}  // namespace

std::string_view op_keyword(BinaryOp op) noexcept {
    for (const auto &[word, o] : kKeywords) {
        if (o == op) return word;
    }
    return "?";
}

bool operator==(const FormulaNode &a, const FormulaNode &b) {
    if (a.value.index() != b.value.index()) return false;
    if (const auto *va = std::get_if<VarNode>(&a.value)) return va->name == std::get<VarNode>(b.value).name;
    if (const auto *na = std::get_if<NotNode>(&a.value)) return *na->child == *std::get<NotNode>(b.value).child;
    const auto &ba = std::get<BinaryNode>(a.value);
    const auto &bb = std::get<BinaryNode>(b.value);
    return ba.op == bb.op && *ba.left == *bb.left && *ba.right == *bb.right;
}

FormulaPtr make_var(char name) { return std::make_shared<const FormulaNode>(FormulaNode{VarNode{name}}); }

FormulaPtr make_not(FormulaPtr child) {
    return std::make_shared<const FormulaNode>(FormulaNode{NotNode{std::move(child)}});
}

FormulaPtr make_binary(BinaryOp op, FormulaPtr left, FormulaPtr right) {
    return std::make_shared<const FormulaNode>(FormulaNode{BinaryNode{op, std::move(left), std::move(right)}});
}

std::optional<std::size_t> Formula::position_of(char name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
}

Formula parse(std::string_view text) {
    Formula f = Parser(tokenize(text)).parse_formula();
    if (!f.declared) {
        collect_vars(*f.root, f.variables);
        std::sort(f.variables.begin(), f.variables.end());
        f.variables.erase(std::unique(f.variables.begin(), f.variables.end()), f.variables.end());
    }
    return f;
}

std::string to_string(const FormulaNode &node) {
    return std::visit(
        [](const auto &n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                return std::string(1, n.name);
            } else if constexpr (std::is_same_v<T, NotNode>) {
                return "NOT " + to_string(*n.child);
            } else if (is_lattice_op(n.op)) {
                return std::string(op_keyword(n.op)) + "(" + to_string(*n.left) + ", " + to_string(*n.right) + ")";
            } else {
                return "(" + to_string(*n.left) + " " + std::string(op_keyword(n.op)) + " " + to_string(*n.right) +
                       ")";
            }
        },
        node.value);
}

std::string to_string(const Formula &formula) {
    std::string out;
    if (formula.declared) {
        out = "vars ";
        for (std::size_t i = 0; i < formula.variables.size(); ++i) {
            if (i) out += ",";
            out += formula.variables[i];
        }
        out += "; ";
    }
    return out + to_string(*formula.root);
}

CompiledFormula compile(const Formula &formula, const ValueAlphabet &alphabet, std::size_t arity,
                        std::size_t dim_cap) {
    const AlphabetKind kind = kind_of(alphabet);
    check_compatible(*formula.root, kind);
    std::vector<std::size_t> arities(arity, alphabet.size());
    checked_dimension(arities, dim_cap);
    return {arity, alphabet, compile_node(*formula.root, formula, alphabet, kind, arity, dim_cap)};
}

double eval_classical(const Formula &formula, const ValueAlphabet &alphabet, std::span<const double> assignment) {
    const AlphabetKind kind = kind_of(alphabet);
    check_compatible(*formula.root, kind);
    std::vector<double> snapped(assignment.size());
    for (std::size_t k = 0; k < assignment.size(); ++k) {
        auto pos = alphabet.find(assignment[k]);
        if (!pos) throw NonMemberError(k, assignment[k]);
        snapped[k] = alphabet[*pos];
    }
    return eval_node(*formula.root, formula, kind, snapped);
}

}  // namespace eigenlogic
