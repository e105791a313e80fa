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
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eigenlogic/core_algebra.hpp"

namespace eigenlogic {

/// Ordered set of distinct real truth values, optionally labelled.
class ValueAlphabet {
   public:
    /// Throws InvalidArgumentError for fewer than two values, non-finite or
    /// duplicate (within 1e-12) values, or a label list of the wrong length.
    explicit ValueAlphabet(std::vector<double> values, std::vector<std::string> names = {});

    /// {0, 1} with F ≡ 0, T ≡ 1.
    static ValueAlphabet projective();
    /// {+1, -1} with F ≡ +1, T ≡ -1.
    static ValueAlphabet isometric();
    /// {+1, 0, -1} with F ≡ +1, N ≡ 0, T ≡ -1. Digit k of a ternary index
    /// selects the k-th value in this order.
    static ValueAlphabet ternary();

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double> &values() const noexcept { return values_; }
    const std::vector<std::string> &names() const noexcept { return names_; }
    double operator[](std::size_t k) const { return values_[k]; }

    /// Position of the alphabet value within `tol` of `value`.
    std::optional<std::size_t> find(double value, double tol = kDefaultTol) const;
    bool has_values(std::span<const double> values, double tol = kDefaultTol) const;

    /// Single-argument observable whose eigenvalues are the alphabet values
    /// in order (Π for {0,1}, Z for {+1,-1}, Λ for {+1,0,-1}).
    DiagObservable value_observable() const;

    friend bool operator==(const ValueAlphabet &, const ValueAlphabet &) = default;

   private:
    std::vector<double> values_;
    std::vector<std::string> names_;
};

/// Output column of an n-argument connective over one alphabet, in canonical
/// index order (first argument most significant).
class TruthTable {
   public:
    /// Throws InvalidArgumentError if the length is not m^arity and
    /// NonMemberError if an output is not an alphabet value.
    TruthTable(ValueAlphabet alphabet, std::size_t arity, std::vector<double> outputs);
    /// Build from output digits (positions into the alphabet).
    static TruthTable from_digits(ValueAlphabet alphabet, std::size_t arity,
                                  std::span<const std::size_t> output_digits);

    const ValueAlphabet &alphabet() const noexcept { return alphabet_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<double> &outputs() const noexcept { return outputs_; }
    std::size_t size() const noexcept { return outputs_.size(); }

    /// Alphabet values of the input tuple at a canonical index.
    std::vector<double> inputs(std::size_t index) const;

    friend bool operator==(const TruthTable &, const TruthTable &) = default;

   private:
    ValueAlphabet alphabet_;
    std::size_t arity_;
    std::vector<double> outputs_;
};

using BasisPolynomial = Polynomial;

enum class Convention { Projective, Isometric };

std::string_view convention_name(Convention c) noexcept;
/// "projective" | "isometric"; throws ConventionError otherwise.
Convention parse_convention(std::string_view text);

/// Polynomial in the two dictator observables of a two-argument system,
/// e.g. ½(I + U + V − U·V). Keys are (power of first, power of second).
class DictatorPolynomial {
   public:
    using Powers = std::pair<unsigned, unsigned>;

    DictatorPolynomial() = default;
    DictatorPolynomial(std::initializer_list<std::pair<const Powers, double>> terms);

    const std::map<Powers, double> &terms() const noexcept { return terms_; }

    /// Evaluate with compose_entrywise / affine / add on the given
    /// co-diagonal dictators.
    DiagObservable evaluate(const DiagObservable &first, const DiagObservable &second) const;
    /// Apply U² = V² = I, which holds when both dictators are ±1-valued.
    DictatorPolynomial reduced_for_involutions() const;

    friend bool operator==(const DictatorPolynomial &, const DictatorPolynomial &) = default;

   private:
    void accumulate(Powers powers, double c);
    std::map<Powers, double> terms_;
};

/// Π = diag(0, 1), the qubit-1 projector all binary constructions start from.
DiagObservable seed_projector();

/// Λ = diag(+1, 0, -1) in the basis |+1>, |0>, |-1>.
DiagObservable lambda_observable();

/// Lagrange basis φ_i with φ_i(points[j]) = δ_ij, by the product formula.
/// Throws DuplicatePointError for coincident points and InvalidArgumentError
/// for fewer than two points or |point| > 10.
std::vector<BasisPolynomial> lagrange_basis(std::span<const double> points);

/// Rank-1 projectors of a single argument: φ_k applied to the value observable.
std::vector<DiagObservable> argument_projectors(const ValueAlphabet &alphabet);

/// The m^arity rank-1 projectors Π_w, each a Kronecker product of
/// argument projectors. Arity 0 yields the single scalar projector (1).
std::vector<DiagObservable> canonical_projectors(const ValueAlphabet &alphabet, std::size_t arity,
                                                 std::size_t dim_cap = kDefaultDimCap);

/// Spectral synthesis. In the diagonal representation Σ f_w Π_w collapses to
/// the output column itself.
DiagObservable synthesize(const TruthTable &table, std::size_t dim_cap = kDefaultDimCap);

/// Σ f_w Π_w accumulated through canonical_projectors. Quadratic in the
/// dimension; exists as an independent route for cross-checking synthesize.
DiagObservable synthesize_spectral(const TruthTable &table, std::size_t dim_cap = kDefaultDimCap);

/// Inverse of synthesize. Throws NonMemberError naming the first eigenvalue
/// that matches no alphabet value, ArityMismatchError if an arity differs
/// from the alphabet size.
TruthTable read_table(const DiagObservable &f, const ValueAlphabet &alphabet, double tol = kDefaultTol);

/// G = I − 2F. Throws ClassificationError unless f is a projector.
DiagObservable to_isometric(const DiagObservable &f, double tol = kDefaultTol);
/// F = ½(I − G). Throws ClassificationError unless g is an isometry.
DiagObservable to_projective(const DiagObservable &g, double tol = kDefaultTol);

/// Value observable at `position`, identity at every other argument.
DiagObservable dictator(std::size_t position, std::size_t arity, const ValueAlphabet &alphabet,
                        std::size_t dim_cap = kDefaultDimCap);

/// ½(U + V + U² + V² − U·V − U²·V²).
DictatorPolynomial min_polynomial();
/// ½(U + V − U² − V² + U·V + U²·V²).
DictatorPolynomial max_polynomial();

/// min_polynomial / max_polynomial evaluated at U = Λ⊗I, V = I⊗Λ.
DiagObservable min_observable();
DiagObservable max_observable();

/// Min and Max written in the φ-basis before expanding into U and V:
///   Min = φ₊(U) + φ₊(V) − φ₊(U)·φ₊(V) − φ₋(U)·φ₋(V)
///   Max = φ₊(U)·φ₊(V) − φ₋(U) − φ₋(V) + φ₋(U)·φ₋(V)
DiagObservable min_observable_via_basis();
DiagObservable max_observable_via_basis();

/// The three-valued Min / Max maps, row by row (rows first argument F, N, T;
/// columns second argument F, N, T), which is canonical index order.
TruthTable min_truth_table();
TruthTable max_truth_table();

/// The sixteen binary connectives in truth-table order FALSE ... TRUE.
std::span<const std::string_view> table1_names() noexcept;

/// Truth column in the conventional listing order, inputs ordered
/// TT, TF, FT, FF (the reverse of canonical index order). "AND" -> "TFFF".
std::string_view table1_printed_column(std::string_view name);

/// Projective formula in A, B, or isometric formula in U, V.
DictatorPolynomial table1_formula(std::string_view name, Convention convention);

/// The listed column converted to a canonical-order TruthTable in the
/// alphabet of `convention`.
TruthTable table1_truth_table(std::string_view name, Convention convention);

struct NamedObservable {
    std::string name;
    DiagObservable observable;
};

/// Connectives keyed by ASCII name, kept in table order.
class ConnectiveCatalog {
   public:
    ConnectiveCatalog(Convention convention, std::vector<NamedObservable> entries);

    Convention convention() const noexcept { return convention_; }
    const std::vector<NamedObservable> &entries() const noexcept { return entries_; }
    /// Throws UnknownConnectiveError.
    const DiagObservable &at(std::string_view name) const;
    bool contains(std::string_view name) const noexcept;

   private:
    Convention convention_;
    std::vector<NamedObservable> entries_;
};

/// All sixteen binary connectives evaluated from their algebraic formulas
/// on the dictators (A = Π⊗I, B = I⊗Π or U = Z⊗I, V = I⊗Z).
ConnectiveCatalog table1_catalog(Convention convention);

/// m^(m^n); throws CapacityError past 2^63.
std::uint64_t connective_count(std::size_t m, std::size_t n);

/// Every truth table over `alphabet` with `arity` arguments, in
/// lexicographic order of output digits. Throws CapacityError when the count
/// exceeds `max_tables`.
std::vector<TruthTable> enumerate_tables(const ValueAlphabet &alphabet, std::size_t arity,
                                         std::uint64_t max_tables = 1u << 20);

}  // namespace eigenlogic
