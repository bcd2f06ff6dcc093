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

/**
 * @file
 * Small dense complex linear algebra, bipartite quantum states, projective
 * observables and Born-rule probabilities.
 */

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "hardyq/errors.hpp"

namespace hardyq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tolerance {
inline constexpr double normalization = 1e-12;
inline constexpr double hermiticity = 1e-12;
inline constexpr double positivity = 1e-10;
inline constexpr double projector = 1e-10;
inline constexpr double probability = 1e-10;
inline constexpr double label = 1e-12;
} // namespace tolerance

struct Dims {
    std::size_t first = 2;
    std::size_t second = 2;

    [[nodiscard]] std::size_t total() const noexcept { return first * second; }
    friend bool operator==(const Dims &, const Dims &) = default;
};

enum class Side { First = 1, Second = 2 };

/// Bipartite state on C^d1 (x) C^d2. Pure states keep their amplitudes for
/// serialization but every probability is computed from the density operator.
class QuantumState {
  public:
    enum class Kind { Pure, Density };

    static QuantumState pure(Dims dims, ComplexVector amplitudes);
    static QuantumState density(Dims dims, ComplexMatrix rho);

    [[nodiscard]] Dims dims() const noexcept { return dims_; }
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Only meaningful for Kind::Pure; empty otherwise.
    [[nodiscard]] const ComplexVector &amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const ComplexMatrix &rho() const noexcept { return rho_; }

  private:
    QuantumState(Dims dims, Kind kind, ComplexVector amplitudes, ComplexMatrix rho)
        : dims_(dims), kind_(kind), amplitudes_(std::move(amplitudes)), rho_(std::move(rho)) {}

    Dims dims_;
    Kind kind_;
    ComplexVector amplitudes_;
    ComplexMatrix rho_;
};

struct Outcome {
    double label = 0.0;
    ComplexMatrix projector;
};

/// Projective measurement with real outcome labels on a single subsystem.
class Observable {
  public:
    /// Throws InvalidObservable unless the projectors form a PVM on C^dim
    /// and the labels are pairwise distinct.
    Observable(std::size_t dim, std::vector<Outcome> outcomes);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Outcome> &outcomes() const noexcept { return outcomes_; }
    [[nodiscard]] bool has_label(double label) const noexcept;
    [[nodiscard]] std::vector<double> labels() const;
    /// Throws UnknownLabel.
    [[nodiscard]] const ComplexMatrix &projector(double label) const;

  private:
    std::size_t dim_;
    std::vector<Outcome> outcomes_;
};

/// Direction on the Bloch sphere, theta in [0, pi], phi in [0, 2 pi).
struct BlochDirection {
    double theta = 0.0;
    double phi = 0.0;

    /// Validating constructor; throws InvalidObservable when out of range.
    static BlochDirection make(double theta, double phi);
    /// Direction (sin t, 0, cos t) for any real t.
    static BlochDirection in_xz_plane(double t);
    /// Direction (cos t, sin t, 0) for any real t.
    static BlochDirection in_xy_plane(double t);

    friend bool operator==(const BlochDirection &, const BlochDirection &) = default;
};

[[nodiscard]] ComplexMatrix identity(std::size_t d);
[[nodiscard]] ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
[[nodiscard]] ComplexMatrix projector_onto(const ComplexVector &v);

/// Qubit spin observable with projectors (I +- n.sigma)/2 for outcomes +-1.
[[nodiscard]] Observable spin_observable(BlochDirection dir);

/// Tr[rho (P_a (x) P_b)]. Throws DimensionMismatch or UnknownLabel.
[[nodiscard]] double joint_probability(const QuantumState &state, const Observable &obs1, double label1,
                                       const Observable &obs2, double label2);

/// Tr[rho (P (x) I)] or Tr[rho (I (x) P)].
[[nodiscard]] double marginal_probability(const QuantumState &state, Side side, const Observable &obs,
                                          double label);

// Frequently used states.
[[nodiscard]] QuantumState singlet();
[[nodiscard]] QuantumState maximally_mixed(Dims dims);
[[nodiscard]] QuantumState product_basis_state(Dims dims, std::size_t i, std::size_t j);

} // namespace hardyq
