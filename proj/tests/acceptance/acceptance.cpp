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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference data here is transcribed independently of the library.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/errors.hpp"
#include "eigenlogic/formula_dsl.hpp"
#include "eigenlogic/fuzzy_measure.hpp"
#include "eigenlogic/logic_synthesis.hpp"

using namespace eigenlogic;

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kLooseTol = 1e-9;
constexpr double kBoundTol = 1e-12;
constexpr double kCatalogSeconds = 1.0;
constexpr double kSuiteSeconds = 30.0;
constexpr std::uint64_t kSeed = 20160722;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool cond, const std::string &what) {
        ++checks;
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
};

// Coefficients on (I, A, B, A·B) and on (I, U, V, U·V), with A = Π⊗I,
// B = I⊗Π, U = Z⊗I, V = I⊗Z. `column` lists outputs for TT, TF, FT, FF.
struct CatalogRow {
    const char *name;
    const char *column;
    std::array<double, 4> projective;
    std::array<double, 4> isometric;
};

const std::array<CatalogRow, 16> kCatalog = {{
    {"FALSE", "FFFF", {0, 0, 0, 0}, {1, 0, 0, 0}},
    {"NOR", "FFFT", {1, -1, -1, 1}, {0.5, -0.5, -0.5, -0.5}},
    {"NCIMPL", "FFTF", {0, 0, 1, -1}, {0.5, -0.5, 0.5, 0.5}},
    {"NOTA", "FFTT", {1, -1, 0, 0}, {0, -1, 0, 0}},
    {"NIMPL", "FTFF", {0, 1, 0, -1}, {0.5, 0.5, -0.5, 0.5}},
    {"NOTB", "FTFT", {1, 0, -1, 0}, {0, 0, -1, 0}},
    {"XOR", "FTTF", {0, 1, 1, -2}, {0, 0, 0, 1}},
    {"NAND", "FTTT", {1, 0, 0, -1}, {-0.5, -0.5, -0.5, 0.5}},
    {"AND", "TFFF", {0, 0, 0, 1}, {0.5, 0.5, 0.5, -0.5}},
    {"EQUIV", "TFFT", {1, -1, -1, 2}, {0, 0, 0, -1}},
    {"B", "TFTF", {0, 0, 1, 0}, {0, 0, 1, 0}},
    {"IMPL", "TFTT", {1, -1, 0, 1}, {-0.5, -0.5, 0.5, -0.5}},
    {"A", "TTFF", {0, 1, 0, 0}, {0, 1, 0, 0}},
    {"CIMPL", "TTFT", {1, 0, -1, 1}, {-0.5, 0.5, -0.5, -0.5}},
    {"OR", "TTTF", {0, 1, 1, -1}, {-0.5, 0.5, 0.5, 0.5}},
    {"TRUE", "TTTT", {1, 0, 0, 0}, {-1, 0, 0, 0}},
}};

// Ternary maps, rows indexed by the first argument in F, N, T order with
// F = +1, N = 0, T = -1.
const std::array<double, 9> kMinMap = {+1, +1, +1, +1, 0, 0, +1, 0, -1};
const std::array<double, 9> kMaxMap = {+1, 0, -1, 0, 0, -1, -1, -1, -1};
const std::array<double, 3> kTernary = {+1, 0, -1};

// Min and Max as polynomials in u, v: coefficient of u^i v^j at [i][j].
using Poly2 = std::array<std::array<double, 3>, 3>;
const Poly2 kMinPoly = {{{0, 0.5, 0.5}, {0.5, -0.5, 0}, {0.5, 0, -0.5}}};
const Poly2 kMaxPoly = {{{0, 0.5, -0.5}, {0.5, 0.5, 0}, {-0.5, 0, 0.5}}};

double eval_poly2(const Poly2 &p, double u, double v) {
    double acc = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) acc += p[i][j] * std::pow(u, i) * std::pow(v, j);
    }
    return acc;
}

DiagObservable from_basis(const std::array<double, 4> &c, const DiagObservable &x, const DiagObservable &y) {
    const auto id = DiagObservable::identity(x.arities());
    return c[0] * id + c[1] * x + c[2] * y + c[3] * (x * y);
}

std::vector<double> canonical_outputs(const char *column, double t, double f) {
    const std::string s(column);
    std::vector<double> out;
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(*it == 'T' ? t : f);
    return out;
}

Outcome criterion_catalog() {
    Outcome o;
    const auto pi = DiagObservable({2}, {0, 1});
    const auto z = DiagObservable({2}, {1, -1});
    const auto i2 = DiagObservable::identity({2});
    const auto a = kron(pi, i2), b = kron(i2, pi), u = kron(z, i2), v = kron(i2, z);
    const auto iso_catalog = table1_catalog(Convention::Isometric);
    for (const auto &row : kCatalog) {
        const auto proj = from_basis(row.projective, a, b);
        const auto synthesized = synthesize(TruthTable(ValueAlphabet::projective(), 2, canonical_outputs(row.column, 1, 0)));
        o.expect(max_abs_diff(proj, synthesized) <= kExactTol, std::string(row.name) + " projective");

        const auto iso = from_basis(row.isometric, u, v);
        o.expect(max_abs_diff(iso, to_isometric(proj)) <= kExactTol &&
                     max_abs_diff(iso_catalog.at(row.name), to_isometric(proj)) <= kExactTol,
                 std::string(row.name) + " isometric");
    }
    return o;
}

Outcome criterion_control_z() {
    Outcome o;
    const auto m = materialize(table1_catalog(Convention::Isometric).at("AND"));
    const std::array<double, 4> expected = {+1, +1, +1, -1};
    o.expect(m.dim() == 4, "dimension");
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const std::complex<double> want = r == c ? expected[r] : 0.0;
            o.expect(m(r, c) == want, "entry " + std::to_string(r) + "," + std::to_string(c));
        }
    }
    return o;
}

Outcome criterion_lagrange(std::mt19937_64 &rng) {
    Outcome o;
    const std::vector<double> pts = {+1, 0, -1};
    const auto phi = lagrange_basis(pts);
    const std::array<std::vector<double>, 3> expected = {
        std::vector<double>{0, 0.5, 0.5}, std::vector<double>{1, 0, -1}, std::vector<double>{0, -0.5, 0.5}};
    o.expect(phi.size() == 3, "ternary basis size");
    for (std::size_t i = 0; i < 3 && i < phi.size(); ++i) {
        o.expect(phi[i].coefficients() == expected[i], "ternary phi_" + std::to_string(i));
    }

    std::uniform_int_distribution<std::size_t> size(2, 5);
    std::uniform_real_distribution<double> coord(-10, 10);
    for (int set = 0; set < 50; ++set) {
        const std::size_t m = size(rng);
        std::vector<double> xs;
        while (xs.size() < m) {
            const double x = coord(rng);
            bool distinct = true;
            for (double y : xs) distinct = distinct && std::abs(x - y) > 0.25;
            if (distinct) xs.push_back(x);
        }
        const auto basis = lagrange_basis(xs);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                o.expect(std::abs(basis[i](xs[j]) - (i == j ? 1.0 : 0.0)) <= kLooseTol,
                         "delta at set " + std::to_string(set));
            }
        }
        for (int s = 0; s < 20; ++s) {
            const double x = coord(rng);
            double sum = 0;
            for (const auto &p : basis) sum += p(x);
            o.expect(std::abs(sum - 1.0) <= kLooseTol, "partition of unity at set " + std::to_string(set));
        }
    }
    return o;
}

Outcome criterion_minmax() {
    Outcome o;
    const TruthTable min_table(ValueAlphabet::ternary(), 2, std::vector<double>(kMinMap.begin(), kMinMap.end()));
    const TruthTable max_table(ValueAlphabet::ternary(), 2, std::vector<double>(kMaxMap.begin(), kMaxMap.end()));
    const auto min_synth = synthesize(min_table);
    const auto max_synth = synthesize(max_table);
    const auto min_poly = min_observable();
    const auto max_poly = max_observable();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t w = i * 3 + j;
            const std::string at = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            o.expect(std::abs(eval_poly2(kMinPoly, kTernary[i], kTernary[j]) - kMinMap[w]) <= kExactTol,
                     "Min reference polynomial" + at);
            o.expect(std::abs(eval_poly2(kMaxPoly, kTernary[i], kTernary[j]) - kMaxMap[w]) <= kExactTol,
                     "Max reference polynomial" + at);
            o.expect(std::abs(min_poly[w] - min_synth[w]) <= kExactTol, "Min polynomial vs synthesis" + at);
            o.expect(std::abs(max_poly[w] - max_synth[w]) <= kExactTol, "Max polynomial vs synthesis" + at);
        }
    }
    o.expect(max_abs_diff(min_observable_via_basis(), min_synth) <= kExactTol, "Min basis route");
    o.expect(max_abs_diff(max_observable_via_basis(), max_synth) <= kExactTol, "Max basis route");

    // The basis route rebuilt from lagrange_basis applied to the dictators.
    const auto lambda = DiagObservable({3}, {1, 0, -1});
    const auto i3 = DiagObservable::identity({3});
    const auto phi = lagrange_basis(std::vector<double>(kTernary.begin(), kTernary.end()));
    const auto f_u = kron(apply_pointwise(phi[0], lambda), i3), t_u = kron(apply_pointwise(phi[2], lambda), i3);
    const auto f_v = kron(i3, apply_pointwise(phi[0], lambda)), t_v = kron(i3, apply_pointwise(phi[2], lambda));
    const auto min_route = f_u + f_v - f_u * f_v - t_u * t_v;
    const auto max_route = f_u * f_v - t_u - t_v + t_u * t_v;
    o.expect(max_abs_diff(min_route, min_synth) <= kExactTol, "Min rebuilt basis route");
    o.expect(max_abs_diff(max_route, max_synth) <= kExactTol, "Max rebuilt basis route");
    return o;
}

Outcome criterion_reduction() {
    Outcome o;
    const auto iso = ValueAlphabet::isometric();
    const auto u = dictator(0, 2, iso), v = dictator(1, 2, iso);
    const auto reduced_and = from_basis(kCatalog[8].isometric, u, v);
    const auto reduced_or = from_basis(kCatalog[14].isometric, u, v);
    const auto min_on_binary = min_polynomial().evaluate(u, v);
    const auto max_on_binary = max_polynomial().evaluate(u, v);
    for (std::size_t w = 0; w < 4; ++w) {
        o.expect(min_on_binary[w] == reduced_and[w], "Min vs AND at " + std::to_string(w));
        o.expect(max_on_binary[w] == reduced_or[w], "Max vs OR at " + std::to_string(w));
    }
    const auto &cat = table1_catalog(Convention::Isometric);
    o.expect(min_on_binary == cat.at("AND"), "Min vs catalog AND");
    o.expect(max_on_binary == cat.at("OR"), "Max vs catalog OR");
    return o;
}

Outcome criterion_fuzzy(std::mt19937_64 &rng) {
    Outcome o;
    std::uniform_real_distribution<double> unit(0, 1);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    const auto catalog = table1_catalog(Convention::Projective);
    const auto id = DiagObservable::identity({2, 2});
    for (int k = 0; k < 200; ++k) {
        const double p = unit(rng), q = unit(rng), ph = phase(rng);
        const std::vector<StateVector> parts = {qubit_state(QubitAngles::from_probability(p, ph)),
                                                qubit_state(QubitAngles::from_probability(q, -ph / 2))};
        const auto s = product_state(parts);
        const std::string tag = " (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
        o.expect(std::abs(membership(s, "A") - p) <= kLooseTol, "mu(A)" + tag);
        o.expect(std::abs(membership(s, "B") - q) <= kLooseTol, "mu(B)" + tag);
        o.expect(std::abs(membership(s, "AND") - p * q) <= kLooseTol, "mu(AND)" + tag);
        o.expect(std::abs(membership(s, "OR") - (p + q - p * q)) <= kLooseTol, "mu(OR)" + tag);
        for (const auto &e : catalog.entries()) {
            const double mu = born_mean(s, e.observable);
            o.expect(std::abs(born_mean(s, id - e.observable) - (1 - mu)) <= kLooseTol, "complement of " + e.name + tag);
        }
    }
    return o;
}

// Binary connective F applied to qubits (i, j) of a three-qubit register.
DiagObservable lift_pair(const DiagObservable &f, std::size_t i, std::size_t j) {
    std::vector<double> ev(8);
    for (std::size_t w = 0; w < 8; ++w) {
        const std::size_t bi = (w >> (2 - i)) & 1, bj = (w >> (2 - j)) & 1;
        ev[w] = f[bi * 2 + bj];
    }
    return DiagObservable({2, 2, 2}, ev);
}

StateVector random_state(std::mt19937_64 &rng, std::vector<std::size_t> arities, bool product) {
    std::normal_distribution<double> g;
    if (product) {
        std::vector<StateVector> parts;
        for (auto a : arities) {
            std::vector<std::complex<double>> amps(a);
            for (auto &c : amps) c = {g(rng), g(rng)};
            parts.emplace_back(std::vector<std::size_t>{a}, amps);
        }
        return product_state(parts);
    }
    std::size_t dim = 1;
    for (auto a : arities) dim *= a;
    std::vector<std::complex<double>> amps(dim);
    for (auto &c : amps) c = {g(rng), g(rng)};
    return StateVector(std::move(arities), std::move(amps));
}

Outcome criterion_bound(std::mt19937_64 &rng) {
    Outcome o;
    const auto catalog = table1_catalog(Convention::Projective);
    std::vector<DiagObservable> lifted;
    for (const auto &e : catalog.entries()) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j) lifted.push_back(lift_pair(e.observable, i, j));
            }
        }
    }
    for (int k = 0; k < 1000; ++k) {
        const bool four = k % 2 == 0;
        const bool product = k % 10 == 1 || k % 10 == 2;
        const auto s = four ? random_state(rng, {2, 2}, product) : random_state(rng, {2, 2, 2}, product);
        auto in_bounds = [&](const DiagObservable &f, const std::string &what) {
            const double mu = born_mean(s, f);
            o.expect(mu >= -kBoundTol && mu <= 1 + kBoundTol, what + " on state " + std::to_string(k));
        };
        if (four) {
            for (const auto &e : catalog.entries()) in_bounds(e.observable, e.name);
        } else {
            for (const auto &f : lifted) in_bounds(f, "lifted connective");
        }
    }
    return o;
}

std::string random_formula_text(std::mt19937_64 &rng, int depth, std::size_t arity, bool lattice) {
    static const std::array<const char *, 8> kOps = {"AND", "OR", "XOR", "NAND", "NOR", "EQUIV", "IMPL", "CIMPL"};
    std::uniform_int_distribution<int> stop(0, 3);
    std::uniform_int_distribution<std::size_t> var(0, arity - 1);
    if (depth == 0 || stop(rng) == 0) return std::string(1, static_cast<char>('A' + var(rng)));
    if (lattice) {
        std::uniform_int_distribution<int> which(0, 1);
        return std::string(which(rng) ? "MIN(" : "MAX(") + random_formula_text(rng, depth - 1, arity, true) + ", " +
               random_formula_text(rng, depth - 1, arity, true) + ")";
    }
    std::uniform_int_distribution<std::size_t> op(0, kOps.size());
    const std::size_t k = op(rng);
    if (k == kOps.size()) return "NOT (" + random_formula_text(rng, depth - 1, arity, false) + ")";
    return "(" + random_formula_text(rng, depth - 1, arity, false) + " " + kOps[k] + " " +
           random_formula_text(rng, depth - 1, arity, false) + ")";
}

Outcome criterion_oracle(std::mt19937_64 &rng) {
    Outcome o;
    const auto ternary = ValueAlphabet::ternary();
    for (std::size_t code = 0; code < 27; ++code) {
        const std::vector<double> outputs = {kTernary[code / 9], kTernary[(code / 3) % 3], kTernary[code % 3]};
        const TruthTable t(ternary, 1, outputs);
        o.expect(read_table(synthesize(t), ternary) == t, "one-argument table " + std::to_string(code));
    }
    std::uniform_int_distribution<std::size_t> digit(0, 2);
    for (int k = 0; k < 500; ++k) {
        std::vector<double> outputs(9);
        for (auto &x : outputs) x = kTernary[digit(rng)];
        const TruthTable t(ternary, 2, outputs);
        o.expect(read_table(synthesize(t), ternary) == t, "two-argument table " + std::to_string(k));
    }

    struct Lane {
        ValueAlphabet alphabet;
        bool lattice;
        int count;
    };
    const std::vector<Lane> lanes = {{ValueAlphabet::projective(), false, 200},
                                     {ValueAlphabet::isometric(), false, 200},
                                     {ValueAlphabet::ternary(), true, 100},
                                     {ValueAlphabet::isometric(), true, 50}};
    for (const auto &lane : lanes) {
        for (int k = 0; k < lane.count; ++k) {
            const std::size_t arity = 1 + static_cast<std::size_t>(k) % 3;
            std::string text = "vars A";
            for (std::size_t a = 1; a < arity; ++a) text += std::string(",") + static_cast<char>('A' + a);
            text += "; " + random_formula_text(rng, 4, arity, lane.lattice);
            const auto formula = parse(text);
            const auto compiled = compile(formula, lane.alphabet, arity).observable;
            bool same = true;
            for (std::size_t w = 0; w < compiled.dim(); ++w) {
                std::vector<double> assignment(arity);
                std::size_t rest = w;
                for (std::size_t a = arity; a-- > 0;) {
                    assignment[a] = lane.alphabet[rest % lane.alphabet.size()];
                    rest /= lane.alphabet.size();
                }
                same = same && compiled[w] == eval_classical(formula, lane.alphabet, assignment);
            }
            o.expect(same, text);
        }
    }
    return o;
}

Outcome criterion_counts() {
    Outcome o;
    auto power = [](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t r = 1;
        while (exp--) r *= base;
        return r;
    };
    const auto binary = enumerate_tables(ValueAlphabet::projective(), 2);
    const auto ternary = enumerate_tables(ValueAlphabet::ternary(), 1);
    o.expect(binary.size() == 16 && binary.size() == power(2, power(2, 2)), "binary two-argument count");
    o.expect(ternary.size() == 27 && ternary.size() == power(3, power(3, 1)), "ternary one-argument count");
    o.expect(connective_count(2, 2) == 16 && connective_count(3, 1) == 27 && connective_count(3, 2) == 19683,
             "closed-form count");
    std::set<std::vector<double>> distinct_binary, distinct_ternary;
    for (const auto &t : binary) distinct_binary.insert(t.outputs());
    for (const auto &t : ternary) distinct_ternary.insert(t.outputs());
    o.expect(distinct_binary.size() == 16, "binary tables distinct");
    o.expect(distinct_ternary.size() == 27, "ternary tables distinct");
    // The binary enumeration covers the catalog.
    std::set<std::vector<double>> catalog_tables;
    for (const auto &row : kCatalog) catalog_tables.insert(canonical_outputs(row.column, 1, 0));
    o.expect(catalog_tables == distinct_binary, "enumeration matches the catalog");
    return o;
}

}  // namespace

int main() {
    std::mt19937_64 rng(kSeed);
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));
    const auto suite_start = Clock::now();
    bool all_ok = true;

    auto report = [&](int id, const char *title, const std::function<Outcome()> &body, double limit_seconds = 0) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception &e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_seconds > 0) {
            std::ostringstream msg;
            msg << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
            o.expect(seconds < limit_seconds, msg.str());
        }
        std::printf("%s  %d  %-58s %6zu checks  %.3f s\n", o.ok ? "PASS" : "FAIL", id, title, o.checks, seconds);
        if (!o.ok) std::printf("         first failure: %s\n", o.first_failure.c_str());
        all_ok = all_ok && o.ok;
    };

    report(1, "binary catalog: formulas vs truth tables, both conventions", criterion_catalog, kCatalogSeconds);
    report(2, "isometric AND is the controlled-Z diagonal", criterion_control_z);
    report(3, "Lagrange basis: ternary coefficients and random point sets", [&] { return criterion_lagrange(rng); });
    report(4, "Min/Max: polynomial, truth map and basis route agree", criterion_minmax);
    report(5, "Min/Max on binary dictators reduce to AND/OR", criterion_reduction);
    report(6, "fuzzy membership on random product states", [&] { return criterion_fuzzy(rng); });
    report(7, "probability bound on random 4- and 8-dim states", [&] { return criterion_bound(rng); });
    report(8, "ternary round trips and formula oracle corpus", [&] { return criterion_oracle(rng); });
    report(9, "enumeration counts m^(m^n)", criterion_counts);

    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    const bool fast = total < kSuiteSeconds;
    std::printf("%s     total runtime %.3f s (limit %.0f s)\n", fast ? "PASS" : "FAIL", total, kSuiteSeconds);
    all_ok = all_ok && fast;
    std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all_ok ? 0 : 1;
}
