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

#include "eigenlogic/fuzzy_measure.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eigenlogic/errors.hpp"

namespace eigenlogic {

namespace {

constexpr double kMinNorm = 1e-6;
constexpr double kMaxNorm = 1e6;

}  // namespace

QubitAngles::QubitAngles(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw InvalidArgumentError("theta must lie in [0, pi]");
    }
    if (!std::isfinite(phi)) throw InvalidArgumentError("phi must be finite");
}

QubitAngles QubitAngles::from_probability(double p, double phi) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError("probability must lie in [0, 1]");
    return QubitAngles(2.0 * std::asin(std::sqrt(p)), phi);
}

double QubitAngles::probability_one() const noexcept {
    const double s = std::sin(theta_ / 2.0);
    return s * s;
}

StateVector::StateVector(std::vector<std::size_t> arities, std::vector<std::complex<double>> amplitudes)
    : arities_(std::move(arities)), amplitudes_(std::move(amplitudes)) {
    std::size_t expected = 1;
    for (std::size_t m : arities_) {
        if (m < 2) throw InvalidArgumentError("every arity must be at least 2");
        if (expected > amplitudes_.size() / m) {
            throw InvalidArgumentError("amplitude count does not match the arities");
        }
        expected *= m;
    }
    if (expected != amplitudes_.size()) {
        throw InvalidArgumentError("expected " + std::to_string(expected) + " amplitudes, got " +
                                   std::to_string(amplitudes_.size()));
    }

    double sq = 0.0;
    for (const auto &c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidArgumentError("amplitudes must be finite");
        }
        sq += std::norm(c);
    }
    if (sq == 0.0) throw InvalidArgumentError("the zero vector is not a state");
    const double norm = std::sqrt(sq);
    if (norm < kMinNorm || norm > kMaxNorm) {
        throw InvalidArgumentError("state norm " + std::to_string(norm) + " is outside [1e-6, 1e6]");
    }
    if (norm != 1.0) {
        for (auto &c : amplitudes_) c /= norm;
    }
}

StateVector StateVector::basis(std::vector<std::size_t> arities, std::size_t index) {
    std::size_t dim = 1;
    for (std::size_t m : arities) dim *= m;
    if (index >= dim) throw PositionError("basis index out of range");
    std::vector<std::complex<double>> amplitudes(dim);
    amplitudes[index] = 1.0;
    return StateVector(std::move(arities), std::move(amplitudes));
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amplitudes_.size());
    for (std::size_t w = 0; w < out.size(); ++w) out[w] = std::norm(amplitudes_[w]);
    return out;
}

StateVector qubit_state(const QubitAngles &angles) {
    const double half = angles.theta() / 2.0;
    return StateVector({2}, {std::cos(half), std::polar(std::sin(half), angles.phi())});
}

StateVector product_state(std::span<const StateVector> parts, std::size_t dim_cap) {
    if (parts.empty()) throw InvalidArgumentError("product_state needs at least one part");
    std::vector<std::size_t> arities;
    for (const auto &p : parts) arities.insert(arities.end(), p.arities().begin(), p.arities().end());
    checked_dimension(arities, dim_cap);

    std::vector<std::complex<double>> acc = parts.front().amplitudes();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const auto &next = parts[k].amplitudes();
        std::vector<std::complex<double>> out;
        out.reserve(acc.size() * next.size());
        for (const auto &x : acc) {
            for (const auto &y : next) out.push_back(x * y);
        }
        acc = std::move(out);
    }
    return StateVector(std::move(arities), std::move(acc));
}

double born_mean(const StateVector &state, const DiagObservable &f) {
    if (state.arities() != f.arities()) {
        throw DimensionMismatchError("state and observable have different argument structure");
    }
    double mean = 0.0;
    for (std::size_t w = 0; w < f.dim(); ++w) mean += std::norm(state.amplitudes()[w]) * f[w];
    return mean;
}

double membership(const StateVector &state, std::string_view connective, Convention convention) {
    if (convention != Convention::Projective) {
        throw ConventionError("membership is defined for projective observables only");
    }
    return born_mean(state, table1_catalog(Convention::Projective).at(connective));
}

bool bound_check(const StateVector &state, const DiagObservable &f, double tol) {
    if (!classify(f).is_projector) throw ClassificationError("bound_check needs a projective observable");
    const double mean = born_mean(state, f);
    return mean >= -tol && mean <= 1.0 + tol;
}

}  // namespace eigenlogic
