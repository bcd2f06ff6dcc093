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

#include "hardyq/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hardyq {

namespace {

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double clamp_probability(double p) {
    if (p < 0.0 && p >= -tolerance::probability) {
        return 0.0;
    }
    if (p > 1.0 && p <= 1.0 + tolerance::probability) {
        return 1.0;
    }
    return p;
}

bool same_label(double a, double b) { return std::abs(a - b) <= tolerance::label; }

} // namespace

QuantumState QuantumState::pure(Dims dims, ComplexVector amplitudes) {
    if (dims.first < 2 || dims.second < 2) {
        throw InvalidState("subsystem dimensions must be >= 2");
    }
    if (static_cast<std::size_t>(amplitudes.size()) != dims.total()) {
        throw DimensionMismatch("pure state has " + std::to_string(amplitudes.size()) +
                                " amplitudes, expected " + std::to_string(dims.total()));
    }
    if (std::abs(amplitudes.squaredNorm() - 1.0) > tolerance::normalization) {
        throw InvalidState("pure state is not normalized");
    }
    ComplexMatrix rho = amplitudes * amplitudes.adjoint();
    return {dims, Kind::Pure, std::move(amplitudes), std::move(rho)};
}

QuantumState QuantumState::density(Dims dims, ComplexMatrix rho) {
    if (dims.first < 2 || dims.second < 2) {
        throw InvalidState("subsystem dimensions must be >= 2");
    }
    const auto n = static_cast<Eigen::Index>(dims.total());
    if (rho.rows() != n || rho.cols() != n) {
        throw DimensionMismatch("density matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (max_abs(rho - rho.adjoint()) > tolerance::hermiticity) {
        throw InvalidState("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tolerance::normalization) {
        throw InvalidState("density matrix does not have unit trace");
    }
    const ComplexMatrix hermitian_part = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tolerance::positivity) {
        throw InvalidState("density matrix has a negative eigenvalue");
    }
    return {dims, Kind::Density, ComplexVector{}, std::move(rho)};
}

Observable::Observable(std::size_t dim, std::vector<Outcome> outcomes) : dim_(dim), outcomes_(std::move(outcomes)) {
    if (dim_ == 0 || outcomes_.empty()) {
        throw InvalidObservable("observable needs a positive dimension and at least one outcome");
    }
    const auto d = static_cast<Eigen::Index>(dim_);
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        const auto &p = outcomes_[i].projector;
        if (p.rows() != d || p.cols() != d) {
            throw InvalidObservable("projector has wrong dimension");
        }
        if (max_abs(p * p - p) > tolerance::projector || max_abs(p - p.adjoint()) > tolerance::projector) {
            throw InvalidObservable("outcome " + std::to_string(outcomes_[i].label) + " is not an orthogonal projector");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (same_label(outcomes_[i].label, outcomes_[j].label)) {
                throw InvalidObservable("duplicate outcome label " + std::to_string(outcomes_[i].label));
            }
            if (max_abs(p * outcomes_[j].projector) > tolerance::projector) {
                throw InvalidObservable("projectors are not mutually orthogonal");
            }
        }
        sum += p;
    }
    if (max_abs(sum - ComplexMatrix::Identity(d, d)) > tolerance::projector) {
        throw InvalidObservable("projectors do not sum to the identity");
    }
}

bool Observable::has_label(double label) const noexcept {
    return std::any_of(outcomes_.begin(), outcomes_.end(),
                       [label](const Outcome &o) { return same_label(o.label, label); });
}

std::vector<double> Observable::labels() const {
    std::vector<double> out;
    out.reserve(outcomes_.size());
    for (const auto &o : outcomes_) {
        out.push_back(o.label);
    }
    return out;
}

const ComplexMatrix &Observable::projector(double label) const {
    for (const auto &o : outcomes_) {
        if (same_label(o.label, label)) {
            return o.projector;
        }
    }
    throw UnknownLabel("observable has no outcome labelled " + std::to_string(label));
}

BlochDirection BlochDirection::make(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi) || !(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
        throw InvalidObservable("Bloch angles out of range");
    }
    return {theta, phi};
}

BlochDirection BlochDirection::in_xz_plane(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(t, two_pi);
    if (a < 0.0) {
        a += two_pi;
    }
    if (a <= std::numbers::pi) {
        return {a, 0.0};
    }
    return {two_pi - a, std::numbers::pi};
}

BlochDirection BlochDirection::in_xy_plane(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(t, two_pi);
    if (a < 0.0) {
        a += two_pi;
    }
    if (a >= two_pi) {
        a = 0.0;
    }
    return {std::numbers::pi / 2.0, a};
}

ComplexMatrix identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix projector_onto(const ComplexVector &v) {
    const ComplexVector u = v.normalized();
    return u * u.adjoint();
}

Observable spin_observable(BlochDirection dir) {
    const double nx = std::sin(dir.theta) * std::cos(dir.phi);
    const double ny = std::sin(dir.theta) * std::sin(dir.phi);
    const double nz = std::cos(dir.theta);
    ComplexMatrix n_sigma(2, 2);
    n_sigma << Complex{nz, 0.0}, Complex{nx, -ny}, Complex{nx, ny}, Complex{-nz, 0.0};
    const ComplexMatrix id = identity(2);
    return Observable(2, {{+1.0, 0.5 * (id + n_sigma)}, {-1.0, 0.5 * (id - n_sigma)}});
}

double joint_probability(const QuantumState &state, const Observable &obs1, double label1, const Observable &obs2,
                         double label2) {
    if (obs1.dim() != state.dims().first || obs2.dim() != state.dims().second) {
        throw DimensionMismatch("observable dimensions do not match the state");
    }
    const ComplexMatrix op = tensor(obs1.projector(label1), obs2.projector(label2));
    // Tr[rho op] without forming the product.
    const Complex p = (state.rho().transpose().array() * op.array()).sum();
    return clamp_probability(p.real());
}

double marginal_probability(const QuantumState &state, Side side, const Observable &obs, double label) {
    const Dims dims = state.dims();
    const std::size_t expected = side == Side::First ? dims.first : dims.second;
    if (obs.dim() != expected) {
        throw DimensionMismatch("observable dimension does not match the chosen subsystem");
    }
    const ComplexMatrix &p = obs.projector(label);
    const ComplexMatrix op = side == Side::First ? tensor(p, identity(dims.second)) : tensor(identity(dims.first), p);
    const Complex value = (state.rho().transpose().array() * op.array()).sum();
    return clamp_probability(value.real());
}

QuantumState singlet() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(1) = std::numbers::sqrt2 / 2.0;
    psi(2) = -std::numbers::sqrt2 / 2.0;
    psi.normalize();
    return QuantumState::pure({2, 2}, std::move(psi));
}

QuantumState maximally_mixed(Dims dims) {
    const auto n = dims.total();
    return QuantumState::density(dims, identity(n) / static_cast<double>(n));
}

QuantumState product_basis_state(Dims dims, std::size_t i, std::size_t j) {
    if (i >= dims.first || j >= dims.second) {
        throw DimensionMismatch("basis index out of range");
    }
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
    psi(static_cast<Eigen::Index>(i * dims.second + j)) = 1.0;
    return QuantumState::pure(dims, std::move(psi));
}

} // namespace hardyq
