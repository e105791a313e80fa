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
#include <string_view>
#include <vector>

#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/logic_synthesis.hpp"

namespace eigenlogic {

/// Bloch-sphere angles of a single qubit.
class QubitAngles {
   public:
    /// Throws InvalidArgumentError unless 0 <= theta <= π and phi is finite.
    QubitAngles(double theta, double phi);
    /// theta = 2·asin(√p), so sin²(theta/2) = p.
    static QubitAngles from_probability(double p, double phi = 0.0);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    /// Probability of |1>, sin²(theta/2).
    double probability_one() const noexcept;

   private:
    double theta_;
    double phi_;
};

/// Pure state over the canonical eigenbasis. Always normalized.
class StateVector {
   public:
    /// Rescales to unit norm when the norm lies in [1e-6, 1e6]. Zero vectors
    /// and norms outside that window throw InvalidArgumentError, as does an
    /// amplitude count that does not match the arities.
    StateVector(std::vector<std::size_t> arities, std::vector<std::complex<double>> amplitudes);

    /// The canonical eigenvector e_index.
    static StateVector basis(std::vector<std::size_t> arities, std::size_t index);

    const std::vector<std::size_t> &arities() const noexcept { return arities_; }
    const std::vector<std::complex<double>> &amplitudes() const noexcept { return amplitudes_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    /// |C_w|² per index.
    std::vector<double> probabilities() const;

   private:
    std::vector<std::size_t> arities_;
    std::vector<std::complex<double>> amplitudes_;
};

/// cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>.
StateVector qubit_state(const QubitAngles &angles);
StateVector product_state(std::span<const StateVector> parts, std::size_t dim_cap = kDefaultDimCap);

/// <ψ|F|ψ> = Tr(ρ_ψ F) = Σ_w |C_w|² λ_w. Throws DimensionMismatchError when
/// the state and observable arities differ.
double born_mean(const StateVector &state, const DiagObservable &f);

/// Fuzzy membership degree of a named binary connective (see
/// table1_catalog) on a two-argument binary state. Only the projective
/// convention defines a membership; isometric throws ConventionError.
double membership(const StateVector &state, std::string_view connective,
                  Convention convention = Convention::Projective);

/// True iff -tol <= born_mean <= 1 + tol. Throws ClassificationError unless f
/// is a projector.
bool bound_check(const StateVector &state, const DiagObservable &f, double tol = kDefaultTol);

}  // namespace eigenlogic
