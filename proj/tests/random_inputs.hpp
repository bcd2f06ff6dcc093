// Copyright 2026 The hardyq Authors
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

// Random states, observables and scenarios for property tests.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "hardyq/qcore.hpp"
#include "hardyq/witness.hpp"

namespace hardyq::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix random_gaussian(Rng &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = Complex{g(rng), g(rng)};
        }
    }
    return m;
}

inline ComplexMatrix random_unitary(Rng &rng, std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(rng, n, n));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline QuantumState random_pure_state(Rng &rng, Dims dims) {
    ComplexVector psi = random_gaussian(rng, static_cast<Eigen::Index>(dims.total()), 1).col(0);
    psi.normalize();
    return QuantumState::pure(dims, psi);
}

/// Mixed state of the given rank (full rank when rank == 0).
inline QuantumState random_mixed_state(Rng &rng, Dims dims, std::size_t rank = 0) {
    const auto n = static_cast<Eigen::Index>(dims.total());
    const auto r = rank == 0 ? n : static_cast<Eigen::Index>(rank);
    const ComplexMatrix g = random_gaussian(rng, n, r);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    return QuantumState::density(dims, rho);
}

inline QuantumState random_state(Rng &rng, Dims dims) {
    std::bernoulli_distribution coin(0.5);
    return coin(rng) ? random_pure_state(rng, dims) : random_mixed_state(rng, dims);
}

/// PVM with the given labels; basis vectors of a random unitary are dealt to
/// the outcomes so that every outcome gets at least one when d allows it.
inline Observable random_observable(Rng &rng, std::size_t d, const std::vector<double> &labels) {
    const ComplexMatrix u = random_unitary(rng, d);
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<std::size_t> owner(d);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (std::size_t i = 0; i < d; ++i) {
        owner[i] = i < labels.size() ? i : pick(rng);
    }
    std::shuffle(owner.begin(), owner.end(), rng);
    std::vector<Outcome> outcomes;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        for (std::size_t i = 0; i < d; ++i) {
            if (owner[i] == k) {
                p += u.col(static_cast<Eigen::Index>(i)) * u.col(static_cast<Eigen::Index>(i)).adjoint();
            }
        }
        outcomes.push_back({labels[k], p});
    }
    return Observable(d, std::move(outcomes));
}

/// Y observables get +1 plus a few other labels.
inline std::vector<double> random_y_labels(Rng &rng, std::size_t d) {
    std::uniform_int_distribution<std::size_t> count(2, std::max<std::size_t>(2, std::min<std::size_t>(d, 4)));
    const std::size_t k = count(rng);
    std::vector<double> labels{1.0};
    for (std::size_t i = 1; i < k; ++i) {
        labels.push_back(1.0 + 0.75 * static_cast<double>(i));
    }
    return labels;
}

inline Scenario random_scenario(Rng &rng, Dims dims, bool trichotomic) {
    const std::vector<double> x_labels = trichotomic ? std::vector<double>{-1.0, 0.0, 1.0} : std::vector<double>{-1.0, 1.0};
    return {random_observable(rng, dims.first, x_labels), random_observable(rng, dims.first, random_y_labels(rng, dims.first)),
            random_observable(rng, dims.second, x_labels), random_observable(rng, dims.second, random_y_labels(rng, dims.second))};
}

inline Dims random_dims(Rng &rng, std::size_t lo = 2, std::size_t hi = 3) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return {d(rng), d(rng)};
}

} // namespace hardyq::testing
