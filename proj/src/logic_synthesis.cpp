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

#include "eigenlogic/logic_synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

constexpr double kMaxPointMagnitude = 10.0;

std::size_t checked_pow(std::size_t base, std::size_t exponent, std::size_t limit) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        if (out > limit / base) throw CapacityError(std::numeric_limits<std::size_t>::max(), limit);
        out *= base;
    }
    return out;
}

DiagObservable power(const DiagObservable &x, unsigned exponent) {
    DiagObservable out = DiagObservable::identity(x.arities());
    for (unsigned k = 0; k < exponent; ++k) out = compose_entrywise(out, x);
    return out;
}

// Coefficients of I, first dictator, second dictator and their product.
struct Table1Row {
    std::string_view name;
    std::string_view printed;  // TT, TF, FT, FF
    std::array<double, 4> projective;
    std::array<double, 4> isometric;
};

constexpr std::array<Table1Row, 16> kTable1 = {{
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

constexpr std::array<std::string_view, 16> kTable1Names = [] {
    std::array<std::string_view, 16> names{};
    for (std::size_t i = 0; i < kTable1.size(); ++i) names[i] = kTable1[i].name;
    return names;
}();

const Table1Row &table1_row(std::string_view name) {
    for (const auto &row : kTable1) {
        if (row.name == name) return row;
    }
    throw UnknownConnectiveError("unknown connective '" + std::string(name) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// ValueAlphabet

ValueAlphabet::ValueAlphabet(std::vector<double> values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
    if (values_.size() < 2) throw InvalidArgumentError("an alphabet needs at least two values");
    if (!names_.empty() && names_.size() != values_.size()) {
        throw InvalidArgumentError("alphabet names must parallel its values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) throw InvalidArgumentError("alphabet values must be finite");
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(values_[i] - values_[j]) <= kDefaultTol) {
                throw InvalidArgumentError("alphabet values must be pairwise distinct");
            }
        }
    }
}

ValueAlphabet ValueAlphabet::projective() { return ValueAlphabet({0.0, 1.0}, {"F", "T"}); }
ValueAlphabet ValueAlphabet::isometric() { return ValueAlphabet({1.0, -1.0}, {"F", "T"}); }
ValueAlphabet ValueAlphabet::ternary() { return ValueAlphabet({1.0, 0.0, -1.0}, {"F", "N", "T"}); }

std::optional<std::size_t> ValueAlphabet::find(double value, double tol) const {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (std::abs(values_[k] - value) <= tol) return k;
    }
    return std::nullopt;
}

bool ValueAlphabet::has_values(std::span<const double> values, double tol) const {
    if (values.size() != values_.size()) return false;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::abs(values[k] - values_[k]) > tol) return false;
    }
    return true;
}

DiagObservable ValueAlphabet::value_observable() const { return DiagObservable({values_.size()}, values_); }

// ---------------------------------------------------------------------------
// TruthTable

TruthTable::TruthTable(ValueAlphabet alphabet, std::size_t arity, std::vector<double> outputs)
    : alphabet_(std::move(alphabet)), arity_(arity), outputs_(std::move(outputs)) {
    const std::size_t expected = checked_pow(alphabet_.size(), arity_, std::numeric_limits<std::size_t>::max());
    if (outputs_.size() != expected) {
        throw InvalidArgumentError("a " + std::to_string(arity_) + "-argument table over " +
                                   std::to_string(alphabet_.size()) + " values needs " + std::to_string(expected) +
                                   " outputs, got " + std::to_string(outputs_.size()));
    }
    for (std::size_t w = 0; w < outputs_.size(); ++w) {
        auto k = alphabet_.find(outputs_[w]);
        if (!k) throw NonMemberError(w, outputs_[w]);
        outputs_[w] = alphabet_[*k];
    }
}

TruthTable TruthTable::from_digits(ValueAlphabet alphabet, std::size_t arity,
                                   std::span<const std::size_t> output_digits) {
    std::vector<double> outputs;
    outputs.reserve(output_digits.size());
    for (std::size_t d : output_digits) {
        if (d >= alphabet.size()) throw PositionError("output digit out of range for the alphabet");
        outputs.push_back(alphabet[d]);
    }
    return TruthTable(std::move(alphabet), arity, std::move(outputs));
}

std::vector<double> TruthTable::inputs(std::size_t index) const {
    std::vector<double> out(arity_);
    const std::size_t m = alphabet_.size();
    for (std::size_t k = arity_; k > 0; --k) {
        out[k - 1] = alphabet_[index % m];
        index /= m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conventions

std::string_view convention_name(Convention c) noexcept {
    return c == Convention::Projective ? "projective" : "isometric";
}

Convention parse_convention(std::string_view text) {
    if (text == "projective") return Convention::Projective;
    if (text == "isometric") return Convention::Isometric;
    throw ConventionError("unknown convention '" + std::string(text) + "' (expected projective or isometric)");
}

// ---------------------------------------------------------------------------
// DictatorPolynomial

DictatorPolynomial::DictatorPolynomial(std::initializer_list<std::pair<const Powers, double>> terms) {
    for (const auto &[powers, c] : terms) accumulate(powers, c);
}

void DictatorPolynomial::accumulate(Powers powers, double c) {
    double &slot = terms_[powers];
    slot += c;
    if (slot == 0.0) terms_.erase(powers);
}

DiagObservable DictatorPolynomial::evaluate(const DiagObservable &first, const DiagObservable &second) const {
    DiagObservable acc = DiagObservable::zero(first.arities());
    for (const auto &[powers, c] : terms_) {
        acc = add(acc, affine(0.0, c, compose_entrywise(power(first, powers.first), power(second, powers.second))));
    }
    return acc;
}

DictatorPolynomial DictatorPolynomial::reduced_for_involutions() const {
    DictatorPolynomial out;
    for (const auto &[powers, c] : terms_) out.accumulate({powers.first % 2, powers.second % 2}, c);
    return out;
}

// ---------------------------------------------------------------------------
// Elementary observables

DiagObservable seed_projector() { return DiagObservable({2}, {0.0, 1.0}); }

DiagObservable lambda_observable() { return DiagObservable({3}, {1.0, 0.0, -1.0}); }

std::vector<BasisPolynomial> lagrange_basis(std::span<const double> points) {
    if (points.size() < 2) throw InvalidArgumentError("Lagrange basis needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i]) || std::abs(points[i]) > kMaxPointMagnitude) {
            throw InvalidArgumentError("interpolation points must be finite with magnitude <= 10");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(points[i] - points[j]) <= kDefaultTol) {
                throw DuplicatePointError("duplicate interpolation point " + std::to_string(points[i]));
            }
        }
    }

    std::vector<BasisPolynomial> basis;
    basis.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial numerator = Polynomial::constant(1.0);
        double denominator = 1.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            numerator = numerator * Polynomial({-points[j], 1.0});
            denominator *= points[i] - points[j];
        }
        std::vector<double> c = numerator.coefficients();
        // Divide rather than scale by 1/denominator so halves stay exact;
        // adding 0.0 folds signed zeros.
        for (double &x : c) x = x / denominator + 0.0;
        basis.emplace_back(std::move(c));
    }
    return basis;
}

std::vector<DiagObservable> argument_projectors(const ValueAlphabet &alphabet) {
    const DiagObservable values = alphabet.value_observable();
    std::vector<DiagObservable> out;
    for (const auto &phi : lagrange_basis(alphabet.values())) out.push_back(apply_pointwise(phi, values));
    return out;
}

std::vector<DiagObservable> canonical_projectors(const ValueAlphabet &alphabet, std::size_t arity,
                                                 std::size_t dim_cap) {
    const std::size_t m = alphabet.size();
    const std::size_t dim = checked_pow(m, arity, dim_cap);
    const std::vector<DiagObservable> single = argument_projectors(alphabet);

    std::vector<DiagObservable> out;
    out.reserve(dim);
    std::vector<DiagObservable> factors;
    for (std::size_t w = 0; w < dim; ++w) {
        factors.clear();
        std::size_t rest = w;
        std::vector<std::size_t> digits(arity);
        for (std::size_t k = arity; k > 0; --k) {
            digits[k - 1] = rest % m;
            rest /= m;
        }
        for (std::size_t d : digits) factors.push_back(single[d]);
        out.push_back(kron_all(factors, dim_cap));
    }
    return out;
}

DiagObservable synthesize(const TruthTable &table, std::size_t dim_cap) {
    std::vector<std::size_t> arities(table.arity(), table.alphabet().size());
    checked_dimension(arities, dim_cap);
    return DiagObservable(std::move(arities), table.outputs());
}

DiagObservable synthesize_spectral(const TruthTable &table, std::size_t dim_cap) {
    const auto projectors = canonical_projectors(table.alphabet(), table.arity(), dim_cap);
    DiagObservable acc = DiagObservable::zero(projectors.front().arities());
    for (std::size_t w = 0; w < projectors.size(); ++w) {
        acc = add(acc, affine(0.0, table.outputs()[w], projectors[w]));
    }
    return acc;
}

TruthTable read_table(const DiagObservable &f, const ValueAlphabet &alphabet, double tol) {
    for (std::size_t m : f.arities()) {
        if (m != alphabet.size()) {
            throw ArityMismatchError("observable arity " + std::to_string(m) + " does not match a " +
                                     std::to_string(alphabet.size()) + "-valued alphabet");
        }
    }
    std::vector<double> outputs(f.dim());
    for (std::size_t w = 0; w < f.dim(); ++w) {
        auto k = alphabet.find(f[w], tol);
        if (!k) throw NonMemberError(w, f[w]);
        outputs[w] = alphabet[*k];
    }
    return TruthTable(alphabet, f.num_args(), std::move(outputs));
}

DiagObservable to_isometric(const DiagObservable &f, double tol) {
    if (!classify(f, tol).is_projector) {
        throw ClassificationError("to_isometric needs eigenvalues in {0, 1}");
    }
    return affine(1.0, -2.0, f);
}

DiagObservable to_projective(const DiagObservable &g, double tol) {
    if (!classify(g, tol).is_isometry) {
        throw ClassificationError("to_projective needs eigenvalues in {+1, -1}");
    }
    return affine(0.5, -0.5, g);
}

DiagObservable dictator(std::size_t position, std::size_t arity, const ValueAlphabet &alphabet,
                        std::size_t dim_cap) {
    if (position >= arity) {
        throw PositionError("dictator position " + std::to_string(position) + " out of range for arity " +
                            std::to_string(arity));
    }
    std::vector<std::size_t> arities(arity, alphabet.size());
    checked_dimension(arities, dim_cap);
    std::vector<DiagObservable> factors;
    for (std::size_t k = 0; k < arity; ++k) {
        factors.push_back(k == position ? alphabet.value_observable()
                                        : DiagObservable::identity({alphabet.size()}));
    }
    return kron_all(factors, dim_cap);
}

// ---------------------------------------------------------------------------
// Three-valued Min / Max

DictatorPolynomial min_polynomial() {
    return {{{1, 0}, 0.5}, {{0, 1}, 0.5}, {{2, 0}, 0.5}, {{0, 2}, 0.5}, {{1, 1}, -0.5}, {{2, 2}, -0.5}};
}

DictatorPolynomial max_polynomial() {
    return {{{1, 0}, 0.5}, {{0, 1}, 0.5}, {{2, 0}, -0.5}, {{0, 2}, -0.5}, {{1, 1}, 0.5}, {{2, 2}, 0.5}};
}

DiagObservable min_observable() {
    const auto t = ValueAlphabet::ternary();
    return min_polynomial().evaluate(dictator(0, 2, t), dictator(1, 2, t));
}

DiagObservable max_observable() {
    const auto t = ValueAlphabet::ternary();
    return max_polynomial().evaluate(dictator(0, 2, t), dictator(1, 2, t));
}

namespace {

struct TernaryBasisTerms {
    DiagObservable plus_u, minus_u, plus_v, minus_v;
};

TernaryBasisTerms ternary_basis_terms() {
    const auto t = ValueAlphabet::ternary();
    const auto phi = lagrange_basis(t.values());
    const auto u = dictator(0, 2, t);
    const auto v = dictator(1, 2, t);
    return {apply_pointwise(phi[0], u), apply_pointwise(phi[2], u), apply_pointwise(phi[0], v),
            apply_pointwise(phi[2], v)};
}

}  // namespace

DiagObservable min_observable_via_basis() {
    const auto b = ternary_basis_terms();
    return b.plus_u + b.plus_v - b.plus_u * b.plus_v - b.minus_u * b.minus_v;
}

DiagObservable max_observable_via_basis() {
    const auto b = ternary_basis_terms();
    return b.plus_u * b.plus_v - b.minus_u - b.minus_v + b.minus_u * b.minus_v;
}

TruthTable min_truth_table() {
    return TruthTable(ValueAlphabet::ternary(), 2, {+1, +1, +1, +1, 0, 0, +1, 0, -1});
}

TruthTable max_truth_table() {
    return TruthTable(ValueAlphabet::ternary(), 2, {+1, 0, -1, 0, 0, -1, -1, -1, -1});
}

// ---------------------------------------------------------------------------
// Binary catalog

std::span<const std::string_view> table1_names() noexcept { return kTable1Names; }

std::string_view table1_printed_column(std::string_view name) { return table1_row(name).printed; }

DictatorPolynomial table1_formula(std::string_view name, Convention convention) {
    const auto &row = table1_row(name);
    const auto &c = convention == Convention::Projective ? row.projective : row.isometric;
    return {{{0, 0}, c[0]}, {{1, 0}, c[1]}, {{0, 1}, c[2]}, {{1, 1}, c[3]}};
}

TruthTable table1_truth_table(std::string_view name, Convention convention) {
    const std::string_view printed = table1_row(name).printed;
    const double truth = convention == Convention::Projective ? 1.0 : -1.0;
    const double falsity = convention == Convention::Projective ? 0.0 : 1.0;
    std::vector<double> outputs;
    for (auto it = printed.rbegin(); it != printed.rend(); ++it) outputs.push_back(*it == 'T' ? truth : falsity);
    return TruthTable(convention == Convention::Projective ? ValueAlphabet::projective() : ValueAlphabet::isometric(),
                      2, std::move(outputs));
}

ConnectiveCatalog::ConnectiveCatalog(Convention convention, std::vector<NamedObservable> entries)
    : convention_(convention), entries_(std::move(entries)) {}

const DiagObservable &ConnectiveCatalog::at(std::string_view name) const {
    for (const auto &e : entries_) {
        if (e.name == name) return e.observable;
    }
    throw UnknownConnectiveError("unknown connective '" + std::string(name) + "'");
}

bool ConnectiveCatalog::contains(std::string_view name) const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto &e) { return e.name == name; });
}

ConnectiveCatalog table1_catalog(Convention convention) {
    const auto alphabet =
        convention == Convention::Projective ? ValueAlphabet::projective() : ValueAlphabet::isometric();
    const auto first = dictator(0, 2, alphabet);
    const auto second = dictator(1, 2, alphabet);
    std::vector<NamedObservable> entries;
    for (const auto &row : kTable1) {
        entries.push_back({std::string(row.name), table1_formula(row.name, convention).evaluate(first, second)});
    }
    return ConnectiveCatalog(convention, std::move(entries));
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t connective_count(std::size_t m, std::size_t n) {
    constexpr std::size_t kLimit = std::size_t{1} << 63;
    const std::size_t rows = checked_pow(m, n, kLimit);
    return checked_pow(m, rows, kLimit);
}

std::vector<TruthTable> enumerate_tables(const ValueAlphabet &alphabet, std::size_t arity, std::uint64_t max_tables) {
    const std::uint64_t count = connective_count(alphabet.size(), arity);
    if (count > max_tables) throw CapacityError(count, max_tables);
    const std::size_t rows = checked_pow(alphabet.size(), arity, std::numeric_limits<std::size_t>::max());

    std::vector<TruthTable> out;
    out.reserve(count);
    std::vector<std::size_t> digits(rows, 0);
    for (std::uint64_t t = 0; t < count; ++t) {
        out.push_back(TruthTable::from_digits(alphabet, arity, digits));
        for (std::size_t k = rows; k > 0; --k) {
            if (++digits[k - 1] < alphabet.size()) break;
            digits[k - 1] = 0;
        }
    }
    return out;
}

}  // namespace eigenlogic
