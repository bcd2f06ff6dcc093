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

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "hardyq/qcore.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace hardyq;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

TEST_CASE("spin observable along z is the computational basis") {
    const auto obs = spin_observable(BlochDirection::make(0.0, 0.0));
    CHECK(max_abs(obs.projector(+1.0) - diag2(1, 0)) < 1e-15);
    CHECK(max_abs(obs.projector(-1.0) - diag2(0, 1)) < 1e-15);
}

TEST_CASE("spin observable along x has a uniform +1 projector") {
    const auto obs = spin_observable(BlochDirection::make(pi / 2.0, 0.0));
    const auto &p = obs.projector(+1.0);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            CHECK(std::abs(p(i, j) - Complex{0.5, 0.0}) < 1e-15);
        }
    }
}

TEST_CASE("spin projectors are complete for random directions") {
    testing::Rng rng(11);
    std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2.0 * pi);
    for (int i = 0; i < 50; ++i) {
        const auto obs = spin_observable(BlochDirection::make(th(rng), ph(rng)));
        CHECK(max_abs(obs.projector(1.0) + obs.projector(-1.0) - identity(2)) < 1e-14);
    }
}

TEST_CASE("Bloch direction validation and plane helpers") {
    CHECK_THROWS_AS((void)BlochDirection::make(-0.1, 0.0), InvalidObservable);
    CHECK_THROWS_AS((void)BlochDirection::make(0.0, 2.0 * pi), InvalidObservable);
    const auto d = BlochDirection::in_xz_plane(3.0 * pi / 2.0);
    CHECK(d.theta == Approx(pi / 2.0));
    CHECK(d.phi == Approx(pi));
    // Same operator as the direction (sin t, 0, cos t).
    const auto obs = spin_observable(d);
    CHECK(std::abs(obs.projector(1.0)(0, 1) - Complex{-0.5, 0.0}) < 1e-15);
    CHECK(BlochDirection::in_xy_plane(-pi / 2.0).phi == Approx(3.0 * pi / 2.0));
}

TEST_CASE("tensor product") {
    CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK(max_abs(tensor(diag2(1, 0), diag2(0, 1)) - expected) == 0.0);

    testing::Rng rng(3);
    const auto a = testing::random_gaussian(rng, 2, 3);
    const auto b = testing::random_gaussian(rng, 3, 2);
    const Complex c{0.3, -1.7};
    CHECK(max_abs(tensor(c * a, b) - c * tensor(a, b)) < 1e-14);
    CHECK(max_abs(tensor(a, c * b) - c * tensor(a, b)) < 1e-14);
    CHECK(tensor(a, b).rows() == 6);
    CHECK(tensor(a, b).cols() == 6);
}

TEST_CASE("state validation") {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = 1.0;
    CHECK_NOTHROW((void)QuantumState::pure({2, 2}, psi));
    CHECK_THROWS_AS((void)QuantumState::pure({2, 2}, 2.0 * psi), InvalidState);
    CHECK_THROWS_AS((void)QuantumState::pure({2, 3}, psi), DimensionMismatch);
    CHECK_THROWS_AS((void)QuantumState::pure({1, 4}, psi), InvalidState);

    ComplexMatrix rho = identity(4) / 4.0;
    CHECK_NOTHROW((void)QuantumState::density({2, 2}, rho));
    ComplexMatrix not_hermitian = rho;
    not_hermitian(0, 1) = Complex{0.0, 0.1};
    CHECK_THROWS_AS((void)QuantumState::density({2, 2}, not_hermitian), InvalidState);
    CHECK_THROWS_AS((void)QuantumState::density({2, 2}, 2.0 * rho), InvalidState);
    ComplexMatrix negative = ComplexMatrix::Zero(4, 4);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS((void)QuantumState::density({2, 2}, negative), InvalidState);
    // Rounding-level negativity is tolerated.
    ComplexMatrix nearly = ComplexMatrix::Zero(4, 4);
    nearly(0, 0) = 1.0 + 1e-11;
    nearly(1, 1) = -1e-11;
    CHECK_NOTHROW((void)QuantumState::density({2, 2}, nearly));
}

TEST_CASE("observable validation") {
    CHECK_THROWS_AS(Observable(2, {{1.0, diag2(1, 0)}, {1.0, diag2(0, 1)}}), InvalidObservable);
    CHECK_THROWS_AS(Observable(2, {{1.0, diag2(1, 0)}}), InvalidObservable);
    CHECK_THROWS_AS(Observable(2, {{1.0, diag2(1, 0)}, {-1.0, diag2(1, 1)}}), InvalidObservable);
    CHECK_THROWS_AS(Observable(2, {{1.0, diag2(0.5, 0)}, {-1.0, diag2(0.5, 1)}}), InvalidObservable);
    ComplexMatrix off = ComplexMatrix::Zero(2, 2);
    off(0, 1) = 1.0;
    CHECK_THROWS_AS(Observable(2, {{1.0, off}, {-1.0, identity(2) - off}}), InvalidObservable);
    CHECK_THROWS_AS(Observable(3, {{1.0, diag2(1, 0)}, {-1.0, diag2(0, 1)}}), InvalidObservable);
    const Observable ok(2, {{1.0, diag2(1, 0)}, {-1.0, diag2(0, 1)}});
    CHECK_THROWS_AS((void)ok.projector(0.0), UnknownLabel);
}

TEST_CASE("singlet joint probability against the analytic rule and a hand contraction") {
    const auto s = singlet();
    const auto a = spin_observable(BlochDirection::in_xy_plane(0.0));
    const auto b = spin_observable(BlochDirection::in_xy_plane(3.0 * pi / 4.0));
    const double frozen = (2.0 + std::numbers::sqrt2) / 8.0; // 0.4267766952966369
    CHECK(oracle::singlet_same(3.0 * pi / 4.0) == Approx(frozen).epsilon(1e-15));
    const double contracted = oracle::overlap_sq(oracle::spin_up(pi / 2.0, 0.0), oracle::spin_up(pi / 2.0, 3.0 * pi / 4.0),
                                                 oracle::singlet_amplitudes());
    CHECK(std::abs(contracted - frozen) < 1e-15);
    CHECK(std::abs(joint_probability(s, a, 1.0, b, 1.0) - frozen) < 1e-14);
}

TEST_CASE("joint probability matches hand contraction for random qubit settings") {
    testing::Rng rng(5);
    std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2.0 * pi);
    for (int trial = 0; trial < 100; ++trial) {
        const auto state = testing::random_pure_state(rng, {2, 2});
        std::array<oracle::cd, 4> psi{};
        for (int k = 0; k < 4; ++k) {
            psi[static_cast<std::size_t>(k)] = state.amplitudes()(k);
        }
        const double t1 = th(rng), p1 = ph(rng), t2 = th(rng), p2 = ph(rng);
        const auto o1 = spin_observable({t1, p1});
        const auto o2 = spin_observable({t2, p2});
        CHECK(std::abs(joint_probability(state, o1, 1.0, o2, -1.0) -
                       oracle::overlap_sq(oracle::spin_up(t1, p1), oracle::spin_down(t2, p2), psi)) < 1e-13);
        CHECK(std::abs(joint_probability(state, o1, -1.0, o2, 1.0) -
                       oracle::overlap_sq(oracle::spin_down(t1, p1), oracle::spin_up(t2, p2), psi)) < 1e-13);
    }
}

TEST_CASE("simple joint and marginal probabilities") {
    const auto z = spin_observable({0.0, 0.0});
    const auto zero_zero = product_basis_state({2, 2}, 0, 0);
    CHECK(joint_probability(zero_zero, z, 1.0, z, 1.0) == Approx(1.0));
    CHECK(marginal_probability(zero_zero, Side::First, z, 1.0) == Approx(1.0));

    const auto mixed = maximally_mixed({2, 2});
    const auto x = spin_observable({pi / 2.0, 0.3});
    CHECK(joint_probability(mixed, x, 1.0, z, -1.0) == Approx(0.25));

    testing::Rng rng(8);
    std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2.0 * pi);
    const auto s = singlet();
    for (int i = 0; i < 20; ++i) {
        const auto o = spin_observable({th(rng), ph(rng)});
        CHECK(std::abs(marginal_probability(s, Side::First, o, 1.0) - 0.5) < 1e-14);
        CHECK(std::abs(marginal_probability(s, Side::Second, o, 1.0) - 0.5) < 1e-14);
    }
}

TEST_CASE("dimension and label errors") {
    const auto z = spin_observable({0.0, 0.0});
    testing::Rng rng(1);
    const auto qutrit = testing::random_observable(rng, 3, {-1.0, 0.0, 1.0});
    const auto s = singlet();
    CHECK_THROWS_AS((void)joint_probability(s, qutrit, 1.0, z, 1.0), DimensionMismatch);
    CHECK_THROWS_AS((void)joint_probability(s, z, 2.0, z, 1.0), UnknownLabel);
    CHECK_THROWS_AS((void)marginal_probability(s, Side::Second, qutrit, 1.0), DimensionMismatch);
    CHECK_THROWS_AS((void)marginal_probability(s, Side::First, z, 0.0), UnknownLabel);
}

TEST_CASE("property: outcome probabilities sum to one") {
    testing::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Dims dims = testing::random_dims(rng, 2, 4);
        const auto state = testing::random_state(rng, dims);
        const auto o1 = testing::random_observable(rng, dims.first, testing::random_y_labels(rng, dims.first));
        const auto o2 = testing::random_observable(rng, dims.second, {-1.0, 0.0, 1.0});
        double total = 0.0;
        for (double a : o1.labels()) {
            for (double b : o2.labels()) {
                const double p = joint_probability(state, o1, a, o2, b);
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                total += p;
            }
        }
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("property: marginals are independent of the observable summed out") {
    testing::Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const Dims dims = testing::random_dims(rng, 2, 3);
        const auto state = testing::random_state(rng, dims);
        const auto obs = testing::random_observable(rng, dims.first, {-1.0, 1.0});
        const double marginal = marginal_probability(state, Side::First, obs, 1.0);
        for (int other = 0; other < 3; ++other) {
            const auto o2 = testing::random_observable(rng, dims.second, testing::random_y_labels(rng, dims.second));
            double sum = 0.0;
            for (double b : o2.labels()) {
                sum += joint_probability(state, obs, 1.0, o2, b);
            }
            CHECK(std::abs(sum - marginal) < 1e-10);
        }
        const auto o1 = testing::random_observable(rng, dims.first, {-1.0, 0.0, 1.0});
        const auto o2 = testing::random_observable(rng, dims.second, {-1.0, 1.0});
        double sum = 0.0;
        for (double a : o1.labels()) {
            sum += joint_probability(state, o1, a, o2, -1.0);
        }
        CHECK(std::abs(sum - marginal_probability(state, Side::Second, o2, -1.0)) < 1e-10);
    }
}

TEST_CASE("property: recomputing with the adjoint density operator changes nothing") {
    testing::Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const Dims dims = testing::random_dims(rng, 2, 3);
        const auto state = testing::random_mixed_state(rng, dims);
        const auto adjoint = QuantumState::density(dims, state.rho().adjoint());
        const auto o1 = testing::random_observable(rng, dims.first, {-1.0, 1.0});
        const auto o2 = testing::random_observable(rng, dims.second, {-1.0, 1.0});
        CHECK(std::abs(joint_probability(state, o1, 1.0, o2, -1.0) - joint_probability(adjoint, o1, 1.0, o2, -1.0)) <
              1e-12);
    }
}
