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
 * Hardy observable construction, derivative-free search for maximal
 * violations, and one-parameter state-family sweeps.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "hardyq/witness.hpp"

namespace hardyq {

/// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4].
struct SchmidtState {
    double theta = 0.0;

    /// Throws InvalidArgument when theta is outside [0, pi/4].
    static SchmidtState make(double theta);
    [[nodiscard]] QuantumState state() const;
};

/// v |singlet><singlet| + (1 - v) I/4.
[[nodiscard]] QuantumState werner_state(double visibility);

/// Scenario with real (x-z plane) qubit observables, plus the planar angle
/// of each observable's +1 direction on the Bloch circle.
struct PlanarSettings {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    [[nodiscard]] Scenario scenario() const;
};

struct HardyConstruction {
    PlanarSettings settings;
    QVector qvec;
    /// max(q1, q2, q3) measured on the returned scenario.
    double residual = 0.0;
};

inline constexpr double default_hardy_tol = 1e-9;

/// Hardy observables for a Schmidt state: q1 = q2 = q3 = 0 and q4 as large
/// as the construction allows. Throws NotEntangled, MaximallyEntangled or
/// NoSolution.
[[nodiscard]] HardyConstruction hardy_construction(SchmidtState s, double tol = default_hardy_tol);
[[nodiscard]] Scenario hardy_observables(SchmidtState s, double tol = default_hardy_tol);

struct HardyOptimum {
    double theta = 0.0;
    double q4 = 0.0;
};

/// Grid over theta in (0, pi/4) followed by golden-section refinement.
/// Throws InvalidArgument when resolution < 100.
[[nodiscard]] HardyOptimum max_hardy_probability(int resolution);

enum class Objective { MaximizeUpper, MinimizeLower };

struct SearchConfig {
    int restarts = 20;
    int max_iterations = 5000;
    double tolerance = 1e-12;
    std::uint64_t seed = 20260101;
    /// Restrict observables to the x-z plane (4 angles instead of 8).
    bool planar = true;
};

struct RestartTrace {
    int restart = 0;
    double value = 0.0;
    int iterations = 0;
};

struct SearchResult {
    Objective objective = Objective::MaximizeUpper;
    /// x1, y1, x2, y2.
    std::array<BlochDirection, 4> settings{};
    double value = 0.0;
    std::vector<RestartTrace> trace;

    [[nodiscard]] Scenario scenario() const;
};

/// Seeded Nelder-Mead restarts over qubit observable angles. Deterministic
/// for a fixed config. Throws DimensionMismatch for non-qubit states.
[[nodiscard]] SearchResult optimize_violation(const QuantumState &state, Objective objective,
                                              const SearchConfig &cfg = {});

/// Visibility where the generalized expression of the Werner family crosses
/// 1, to within 1e-6. Throws InvalidArgument, InvalidScenario or NoCrossing.
[[nodiscard]] double werner_sweep(const Scenario &scenario, double v_lo, double v_hi);

struct SweepRow {
    double parameter = 0.0;
    QVector qvec;
    double generalized = 0.0;
    double ch = 0.0;
};

/// `steps` evenly spaced points over [lo, hi] (both ends included).
[[nodiscard]] std::vector<SweepRow> sweep_werner(const Scenario &scenario, double lo, double hi, int steps);
/// Hardy construction along the Schmidt family; angles where the
/// construction fails are omitted.
[[nodiscard]] std::vector<SweepRow> sweep_schmidt(double lo, double hi, int steps, double tol = default_hardy_tol);

namespace optim {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Minimizes f from x0 with coefficients (1, 2, 0.5, 0.5) and an initial
/// simplex of +step perturbations along each axis. Stops when the spread of
/// objective values drops below ftol or after max_iterations.
[[nodiscard]] NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                                           std::vector<double> x0, double step, int max_iterations, double ftol);

/// Golden-section maximization of a unimodal f on [lo, hi].
[[nodiscard]] double golden_section_max(const std::function<double(double)> &f, double lo, double hi, double xtol);

} // namespace optim

} // namespace hardyq
