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

#include "eigenlogic/core_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

std::string arities_text(const std::vector<std::size_t> &arities) {
    std::string out = "(";
    for (std::size_t i = 0; i < arities.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(arities[i]);
    }
    return out + ")";
}

void require_same_arities(const DiagObservable &a, const DiagObservable &b) {
    if (a.arities() != b.arities()) {
        throw ArityMismatchError("arity mismatch: " + arities_text(a.arities()) + " vs " +
                                 arities_text(b.arities()));
    }
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

}  // namespace

std::size_t checked_dimension(std::span<const std::size_t> arities, std::size_t dim_cap) {
    constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
    std::size_t dim = 1;
    for (std::size_t m : arities) {
        dim = (m != 0 && dim > kSaturated / m) ? kSaturated : dim * m;
    }
    if (dim > dim_cap) throw CapacityError(dim, dim_cap);
    return dim;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {}

int Polynomial::degree() const noexcept {
    for (std::size_t k = coefficients_.size(); k > 0; --k) {
        if (coefficients_[k - 1] != 0.0) return static_cast<int>(k - 1);
    }
    return -1;
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (std::size_t k = coefficients_.size(); k > 0; --k) acc = acc * x + coefficients_[k - 1];
    return acc;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<double> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0.0);
    for (std::size_t k = 0; k < a.coefficients_.size(); ++k) c[k] += a.coefficients_[k];
    for (std::size_t k = 0; k < b.coefficients_.size(); ++k) c[k] += b.coefficients_[k];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.coefficients_.empty() || b.coefficients_.empty()) return Polynomial();
    std::vector<double> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial &p) {
    std::vector<double> c = p.coefficients_;
    for (double &x : c) x *= s;
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// DiagObservable

DiagObservable::DiagObservable(std::vector<std::size_t> arities, std::vector<double> eigenvalues)
    : arities_(std::move(arities)), eigenvalues_(std::move(eigenvalues)) {
    std::size_t expected = 1;
    for (std::size_t m : arities_) {
        if (m < 2) throw InvalidArgumentError("every arity must be at least 2");
        if (expected > eigenvalues_.size() / m) {
            throw InvalidArgumentError("eigenvalue count does not match arities " + arities_text(arities_));
        }
        expected *= m;
    }
    if (expected != eigenvalues_.size()) {
        throw InvalidArgumentError("expected " + std::to_string(expected) + " eigenvalues for arities " +
                                   arities_text(arities_) + ", got " + std::to_string(eigenvalues_.size()));
    }
    for (double v : eigenvalues_) {
        if (!std::isfinite(v)) throw InvalidArgumentError("eigenvalues must be finite");
    }
}

DiagObservable DiagObservable::constant(std::vector<std::size_t> arities, double value) {
    std::size_t dim = 1;
    for (std::size_t m : arities) dim *= m;
    return DiagObservable(std::move(arities), std::vector<double>(dim, value));
}

DiagObservable DiagObservable::identity(std::vector<std::size_t> arities) {
    return constant(std::move(arities), 1.0);
}

DiagObservable DiagObservable::zero(std::vector<std::size_t> arities) {
    return constant(std::move(arities), 0.0);
}

std::vector<std::size_t> DiagObservable::digits(std::size_t index) const {
    std::vector<std::size_t> out(arities_.size());
    for (std::size_t k = arities_.size(); k > 0; --k) {
        out[k - 1] = index % arities_[k - 1];
        index /= arities_[k - 1];
    }
    return out;
}

std::size_t DiagObservable::index_of(std::span<const std::size_t> digits) const {
    if (digits.size() != arities_.size()) throw ArityMismatchError("digit count does not match arity count");
    std::size_t index = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] >= arities_[k]) throw PositionError("digit out of range for its argument");
        index = index * arities_[k] + digits[k];
    }
    return index;
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<std::complex<double>> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw InvalidArgumentError("matrix dimension must be positive");
    if (entries_.size() != dim_ * dim_) {
        throw InvalidArgumentError("expected " + std::to_string(dim_ * dim_) + " matrix entries, got " +
                                   std::to_string(entries_.size()));
    }
}

bool DenseMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Operations

DiagObservable kron(const DiagObservable &a, const DiagObservable &b, std::size_t dim_cap) {
    std::vector<std::size_t> arities = a.arities();
    arities.insert(arities.end(), b.arities().begin(), b.arities().end());
    checked_dimension(arities, dim_cap);

    std::vector<double> out;
    out.reserve(a.dim() * b.dim());
    for (double x : a.eigenvalues()) {
        for (double y : b.eigenvalues()) out.push_back(x * y);
    }
    return DiagObservable(std::move(arities), std::move(out));
}

DiagObservable kron_all(std::span<const DiagObservable> factors, std::size_t dim_cap) {
    DiagObservable acc({}, {1.0});
    for (const auto &f : factors) acc = kron(acc, f, dim_cap);
    return acc;
}

DiagObservable compose_entrywise(const DiagObservable &a, const DiagObservable &b) {
    require_same_arities(a, b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
    return DiagObservable(a.arities(), std::move(out));
}

DiagObservable add(const DiagObservable &a, const DiagObservable &b) {
    require_same_arities(a, b);
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return DiagObservable(a.arities(), std::move(out));
}

DiagObservable affine(double a, double b, const DiagObservable &f) {
    std::vector<double> out(f.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a + b * f[i];
    return DiagObservable(f.arities(), std::move(out));
}

DiagObservable apply_pointwise(const Polynomial &poly, const DiagObservable &f) {
    std::vector<double> out(f.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = poly(f[i]);
    return DiagObservable(f.arities(), std::move(out));
}

DenseMatrix materialize(const DiagObservable &f, std::size_t dim_cap) {
    const std::size_t n = checked_dimension(f.arities(), dim_cap);
    std::vector<std::complex<double>> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = f[i];
    return DenseMatrix(n, std::move(entries));
}

ObservableClass classify(const DiagObservable &f, double tol) {
    ObservableClass c{true, true, true, true};
    for (double v : f.eigenvalues()) {
        c.is_projector = c.is_projector && (near(v, 0.0, tol) || near(v, 1.0, tol));
        c.is_isometry = c.is_isometry && (near(v, 1.0, tol) || near(v, -1.0, tol));
        c.is_identity = c.is_identity && near(v, 1.0, tol);
        c.is_zero = c.is_zero && near(v, 0.0, tol);
    }
    return c;
}

double max_abs_diff(const DiagObservable &a, const DiagObservable &b) {
    require_same_arities(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool approx_equal(const DiagObservable &a, const DiagObservable &b, double tol) {
    return a.arities() == b.arities() && max_abs_diff(a, b) <= tol;
}

}  // namespace eigenlogic
