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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace eigenlogic {

/// 3^10 eigenvalues.
inline constexpr std::size_t kDefaultDimCap = 59049;
inline constexpr double kDefaultTol = 1e-12;

/// Product of the arities, or CapacityError when it would exceed `dim_cap`.
std::size_t checked_dimension(std::span<const std::size_t> arities, std::size_t dim_cap = kDefaultDimCap);

/// A real polynomial stored by ascending powers.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coefficients);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// The monomial x.
    static Polynomial identity() { return Polynomial({0.0, 1.0}); }

    const std::vector<double> &coefficients() const noexcept { return coefficients_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    double operator()(double x) const noexcept;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(double s, const Polynomial &p);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

   private:
    std::vector<double> coefficients_;
};

/// A logical observable, stored as its eigenvalues in the canonical basis.
///
/// Eigenvalues are indexed in mixed-radix order with the first argument as
/// the most significant digit, so for two binary arguments the diagonal reads
/// f(0,0), f(0,1), f(1,0), f(1,1). The zero-argument observable is a scalar.
class DiagObservable {
   public:
    /// Throws InvalidArgumentError if an arity is < 2, the length does not
    /// match the product of arities, or an eigenvalue is not finite.
    DiagObservable(std::vector<std::size_t> arities, std::vector<double> eigenvalues);

    static DiagObservable identity(std::vector<std::size_t> arities);
    static DiagObservable zero(std::vector<std::size_t> arities);
    static DiagObservable constant(std::vector<std::size_t> arities, double value);

    const std::vector<std::size_t> &arities() const noexcept { return arities_; }
    const std::vector<double> &eigenvalues() const noexcept { return eigenvalues_; }
    std::size_t dim() const noexcept { return eigenvalues_.size(); }
    std::size_t num_args() const noexcept { return arities_.size(); }
    double operator[](std::size_t i) const { return eigenvalues_[i]; }

    /// Mixed-radix digits of a canonical index, most significant first.
    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t index_of(std::span<const std::size_t> digits) const;

    friend bool operator==(const DiagObservable &, const DiagObservable &) = default;

   private:
    std::vector<std::size_t> arities_;
    std::vector<double> eigenvalues_;
};

/// Row-major dense complex matrix.
class DenseMatrix {
   public:
    DenseMatrix(std::size_t dim, std::vector<std::complex<double>> entries);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::complex<double>> &entries() const noexcept { return entries_; }
    std::complex<double> operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    bool is_hermitian(double tol = kDefaultTol) const;

    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

   private:
    std::size_t dim_;
    std::vector<std::complex<double>> entries_;
};

struct ObservableClass {
    bool is_projector = false;  // eigenvalues in {0, 1}
    bool is_isometry = false;   // eigenvalues in {+1, -1}
    bool is_identity = false;
    bool is_zero = false;

    friend bool operator==(const ObservableClass &, const ObservableClass &) = default;
};

DiagObservable kron(const DiagObservable &a, const DiagObservable &b, std::size_t dim_cap = kDefaultDimCap);
/// Left fold of kron over `factors`; the empty product is the scalar 1.
DiagObservable kron_all(std::span<const DiagObservable> factors, std::size_t dim_cap = kDefaultDimCap);

/// Matrix product of two co-diagonal observables.
DiagObservable compose_entrywise(const DiagObservable &a, const DiagObservable &b);
DiagObservable add(const DiagObservable &a, const DiagObservable &b);
/// a·I + b·F.
DiagObservable affine(double a, double b, const DiagObservable &f);
DiagObservable apply_pointwise(const Polynomial &poly, const DiagObservable &f);

DenseMatrix materialize(const DiagObservable &f, std::size_t dim_cap = kDefaultDimCap);
ObservableClass classify(const DiagObservable &f, double tol = kDefaultTol);

bool approx_equal(const DiagObservable &a, const DiagObservable &b, double tol = kDefaultTol);
double max_abs_diff(const DiagObservable &a, const DiagObservable &b);

/// Operator spellings of the primitives above, for writing observable
/// polynomials in their usual algebraic notation.
inline DiagObservable operator+(const DiagObservable &a, const DiagObservable &b) { return add(a, b); }
inline DiagObservable operator-(const DiagObservable &a, const DiagObservable &b) {
    return add(a, affine(0.0, -1.0, b));
}
inline DiagObservable operator-(const DiagObservable &a) { return affine(0.0, -1.0, a); }
inline DiagObservable operator*(const DiagObservable &a, const DiagObservable &b) {
    return compose_entrywise(a, b);
}
inline DiagObservable operator*(double s, const DiagObservable &a) { return affine(0.0, s, a); }

}  // namespace eigenlogic
