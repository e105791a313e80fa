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

#include "eigenlogic/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/errors.hpp"
#include "eigenlogic/formula_dsl.hpp"
#include "eigenlogic/fuzzy_measure.hpp"
#include "eigenlogic/logic_synthesis.hpp"
#include "eigenlogic/serialization.hpp"

namespace eigenlogic {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kStatTol = 1e-9;

constexpr std::array<std::string_view, 5> kSuites = {"table1", "minmax", "fuzzy", "bound", "oracle"};

class Check {
   public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()> &describe) {
        ++result_.total;
        if (ok) {
            ++result_.passed;
        } else if (result_.detail.empty()) {
            result_.detail = describe();
        }
    }

    CheckResult done() && { return std::move(result_); }

   private:
    CheckResult result_;
};

std::string diag_text(const DiagObservable &f) {
    std::string s = "diag(";
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (i) s += ",";
        s += format_real(f[i]);
    }
    return s + ")";
}

StateVector random_state(std::vector<std::size_t> arities, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::size_t dim = 1;
    for (std::size_t m : arities) dim *= m;
    std::vector<std::complex<double>> amplitudes(dim);
    for (auto &c : amplitudes) c = {gauss(rng), gauss(rng)};
    return StateVector(std::move(arities), std::move(amplitudes));
}

// F(x_i, x_j) as a projector on n binary arguments.
DiagObservable lift_binary(const DiagObservable &f, std::size_t i, std::size_t j, std::size_t n) {
    const auto target = DiagObservable::zero(std::vector<std::size_t>(n, 2));
    std::vector<double> out(target.dim());
    for (std::size_t w = 0; w < out.size(); ++w) {
        const auto d = target.digits(w);
        out[w] = f[d[i] * 2 + d[j]];
    }
    return DiagObservable(target.arities(), std::move(out));
}

FormulaPtr random_formula(std::mt19937_64 &rng, int depth, std::size_t num_vars, std::span<const BinaryOp> ops,
                          bool allow_not) {
    std::uniform_real_distribution<double> coin;
    if (depth == 0 || coin(rng) < 0.25) {
        return make_var(static_cast<char>('A' + std::uniform_int_distribution<std::size_t>(0, num_vars - 1)(rng)));
    }
    if (allow_not && coin(rng) < 0.2) return make_not(random_formula(rng, depth - 1, num_vars, ops, allow_not));
    const BinaryOp op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
    auto left = random_formula(rng, depth - 1, num_vars, ops, allow_not);
    auto right = random_formula(rng, depth - 1, num_vars, ops, allow_not);
    return make_binary(op, std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------

SuiteReport table1_suite() {
    SuiteReport r;
    const auto projective = table1_catalog(Convention::Projective);
    const auto isometric = table1_catalog(Convention::Isometric);

    Check formula_vs_table("projective formula equals synthesized truth table");
    Check iso_vs_map("isometric formula equals to_isometric(projective)");
    for (std::string_view name : table1_names()) {
        const auto &f = projective.at(name);
        const auto synthesized = synthesize(table1_truth_table(name, Convention::Projective));
        formula_vs_table.expect(approx_equal(f, synthesized, kExactTol), [&] {
            return std::string(name) + ": " + diag_text(f) + " vs " + diag_text(synthesized);
        });
        const auto mapped = to_isometric(f);
        iso_vs_map.expect(approx_equal(isometric.at(name), mapped, kExactTol), [&] {
            return std::string(name) + ": " + diag_text(isometric.at(name)) + " vs " + diag_text(mapped);
        });
    }
    r.checks.push_back(std::move(formula_vs_table).done());
    r.checks.push_back(std::move(iso_vs_map).done());
    return r;
}

SuiteReport minmax_suite() {
    SuiteReport r;
    const auto min_table = synthesize(min_truth_table());
    const auto max_table = synthesize(max_truth_table());
    const auto min_poly = min_observable();
    const auto max_poly = max_observable();

    Check entries("polynomial equals the Min/Max truth map, entrywise");
    for (std::size_t w = 0; w < 9; ++w) {
        entries.expect(std::abs(min_poly[w] - min_table[w]) <= kExactTol,
                       [&] { return "Min index " + std::to_string(w); });
    }
    for (std::size_t w = 0; w < 9; ++w) {
        entries.expect(std::abs(max_poly[w] - max_table[w]) <= kExactTol,
                       [&] { return "Max index " + std::to_string(w); });
    }
    r.checks.push_back(std::move(entries).done());

    Check basis("phi-basis expansion agrees");
    basis.expect(approx_equal(min_observable_via_basis(), min_table, kExactTol), [] { return std::string("Min"); });
    basis.expect(approx_equal(max_observable_via_basis(), max_table, kExactTol), [] { return std::string("Max"); });
    r.checks.push_back(std::move(basis).done());

    Check reduction("binary reduction gives isometric AND / OR");
    const auto iso = ValueAlphabet::isometric();
    const auto u = dictator(0, 2, iso);
    const auto v = dictator(1, 2, iso);
    reduction.expect(min_polynomial().reduced_for_involutions() == table1_formula("AND", Convention::Isometric),
                     [] { return std::string("Min polynomial does not reduce to AND"); });
    reduction.expect(max_polynomial().reduced_for_involutions() == table1_formula("OR", Convention::Isometric),
                     [] { return std::string("Max polynomial does not reduce to OR"); });
    const auto iso_catalog = table1_catalog(Convention::Isometric);
    reduction.expect(approx_equal(min_polynomial().evaluate(u, v), iso_catalog.at("AND"), kExactTol),
                     [] { return std::string("Min on binary dictators"); });
    reduction.expect(approx_equal(max_polynomial().evaluate(u, v), iso_catalog.at("OR"), kExactTol),
                     [] { return std::string("Max on binary dictators"); });
    r.checks.push_back(std::move(reduction).done());

    Check symmetry("sign inversion maps Min to Max");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            symmetry.expect(std::abs(max_poly[i * 3 + j] + min_poly[(2 - i) * 3 + (2 - j)]) <= kExactTol,
                            [&] { return "index " + std::to_string(i * 3 + j); });
        }
    }
    r.checks.push_back(std::move(symmetry).done());
    return r;
}

SuiteReport fuzzy_suite(std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    Check product("product-state membership laws");
    Check complement("complement law");
    const std::array<std::pair<std::string_view, std::string_view>, 4> complements = {
        {{"A", "NOTA"}, {"B", "NOTB"}, {"AND", "NAND"}, {"OR", "NOR"}}};
    for (int trial = 0; trial < 200; ++trial) {
        const double p = unit(rng);
        const double q = unit(rng);
        const std::array parts = {qubit_state(QubitAngles::from_probability(p, angle(rng))),
                                  qubit_state(QubitAngles::from_probability(q, angle(rng)))};
        const auto psi = product_state(parts);
        const std::array<std::pair<std::string_view, double>, 5> expected = {
            {{"A", p}, {"B", q}, {"AND", p * q}, {"OR", p + q - p * q}, {"XOR", p + q - 2 * p * q}}};
        for (const auto &[name, want] : expected) {
            const double got = membership(psi, name);
            product.expect(std::abs(got - want) <= kStatTol, [&] {
                return std::string(name) + " at p=" + format_real(p) + " q=" + format_real(q) + ": " +
                       format_real(got) + " vs " + format_real(want);
            });
        }
        for (const auto &[name, neg] : complements) {
            const double sum = membership(psi, name) + membership(psi, neg);
            complement.expect(std::abs(sum - 1.0) <= kStatTol, [&] { return std::string(name); });
        }
    }
    r.checks.push_back(std::move(product).done());
    r.checks.push_back(std::move(complement).done());
    return r;
}

SuiteReport bound_suite(std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    const auto catalog = table1_catalog(Convention::Projective);

    std::vector<DiagObservable> three_arg;
    for (const auto &e : catalog.entries()) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j) three_arg.push_back(lift_binary(e.observable, i, j, 3));
            }
        }
    }

    Check bound("0 <= <psi|F|psi> <= 1 for random states");
    for (int trial = 0; trial < 1000; ++trial) {
        const bool small = trial % 2 == 0;
        const auto psi = random_state(small ? std::vector<std::size_t>{2, 2} : std::vector<std::size_t>{2, 2, 2}, rng);
        if (small) {
            for (const auto &e : catalog.entries()) {
                bound.expect(bound_check(psi, e.observable), [&] { return e.name + " on a 4-dim state"; });
            }
        } else {
            for (const auto &f : three_arg) {
                bound.expect(bound_check(psi, f), [&] { return diag_text(f) + " on an 8-dim state"; });
            }
        }
    }
    r.checks.push_back(std::move(bound).done());
    return r;
}

SuiteReport oracle_suite(std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    const auto ternary = ValueAlphabet::ternary();

    Check round_trip("synthesize / read_table round trip (ternary)");
    for (const auto &t : enumerate_tables(ternary, 1)) {
        round_trip.expect(read_table(synthesize(t), ternary) == t, [] { return std::string("1-argument table"); });
    }
    std::uniform_int_distribution<std::size_t> digit(0, 2);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::size_t> digits(9);
        for (auto &d : digits) d = digit(rng);
        const auto t = TruthTable::from_digits(ternary, 2, digits);
        round_trip.expect(read_table(synthesize(t), ternary) == t, [] { return std::string("2-argument table"); });
    }
    r.checks.push_back(std::move(round_trip).done());

    Check dsl("compiled formula equals classical evaluation");
    constexpr std::array kBoolean = {BinaryOp::And,   BinaryOp::Or,   BinaryOp::Xor,  BinaryOp::Nand,
                                     BinaryOp::Nor,   BinaryOp::Equiv, BinaryOp::Impl, BinaryOp::Cimpl};
    constexpr std::array kWithLattice = {BinaryOp::And,  BinaryOp::Or,    BinaryOp::Xor,  BinaryOp::Nand,
                                         BinaryOp::Nor,  BinaryOp::Equiv, BinaryOp::Impl, BinaryOp::Cimpl,
                                         BinaryOp::Min,  BinaryOp::Max};
    constexpr std::array kLattice = {BinaryOp::Min, BinaryOp::Max};
    const std::array alphabets = {ValueAlphabet::projective(), ValueAlphabet::isometric(), ternary};
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t which = static_cast<std::size_t>(trial) % 3;
        const auto &alphabet = alphabets[which];
        const std::size_t arity = 1 + static_cast<std::size_t>(trial / 3) % 3;
        std::span<const BinaryOp> ops = which == 0 ? std::span<const BinaryOp>(kBoolean)
                                        : which == 1 ? std::span<const BinaryOp>(kWithLattice)
                                                     : std::span<const BinaryOp>(kLattice);
        const auto node = random_formula(rng, 4, arity, ops, which != 2);
        const std::string text = to_string(*node);
        const Formula formula = parse(text);
        const auto compiled = compile(formula, alphabet, arity);
        const auto probe = DiagObservable::zero(std::vector<std::size_t>(arity, alphabet.size()));
        bool same = true;
        for (std::size_t w = 0; w < probe.dim() && same; ++w) {
            std::vector<double> assignment;
            for (std::size_t d : probe.digits(w)) assignment.push_back(alphabet[d]);
            same = compiled.observable[w] == eval_classical(formula, alphabet, assignment);
        }
        dsl.expect(same, [&] { return text; });
    }
    r.checks.push_back(std::move(dsl).done());
    return r;
}

}  // namespace

bool SuiteReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.ok(); });
}

std::size_t SuiteReport::passed() const noexcept {
    std::size_t n = 0;
    for (const auto &c : checks) n += c.passed;
    return n;
}

std::size_t SuiteReport::total() const noexcept {
    std::size_t n = 0;
    for (const auto &c : checks) n += c.total;
    return n;
}

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

SuiteReport run_suite(std::string_view suite, std::uint64_t seed) {
    SuiteReport r;
    if (suite == "table1") {
        r = table1_suite();
    } else if (suite == "minmax") {
        r = minmax_suite();
    } else if (suite == "fuzzy") {
        r = fuzzy_suite(seed);
    } else if (suite == "bound") {
        r = bound_suite(seed);
    } else if (suite == "oracle") {
        r = oracle_suite(seed);
    } else {
        throw InvalidArgumentError("unknown verification suite '" + std::string(suite) + "'");
    }
    r.suite = std::string(suite);
    r.seed = seed;
    return r;
}

}  // namespace eigenlogic
