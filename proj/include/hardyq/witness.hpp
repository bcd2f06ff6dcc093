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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hardyq/qcore.hpp"

namespace hardyq {

enum class XKind { Dichotomic, Trichotomic };

/// Two settings per side. The X observables carry labels {-1,+1} or
/// {-1,0,+1}; the Y observables only need an outcome labelled +1, every
/// other outcome counts as "not +1".
class Scenario {
  public:
    /// Throws InvalidScenario.
    Scenario(Observable x1, Observable y1, Observable x2, Observable y2);

    [[nodiscard]] const Observable &x1() const noexcept { return x1_; }
    [[nodiscard]] const Observable &y1() const noexcept { return y1_; }
    [[nodiscard]] const Observable &x2() const noexcept { return x2_; }
    [[nodiscard]] const Observable &y2() const noexcept { return y2_; }
    [[nodiscard]] XKind kind() const noexcept { return kind_; }
    [[nodiscard]] bool trichotomic() const noexcept { return kind_ == XKind::Trichotomic; }
    [[nodiscard]] Dims dims() const noexcept { return {x1_.dim(), x2_.dim()}; }

  private:
    Observable x1_, y1_, x2_, y2_;
    XKind kind_;
};

/// Qubit scenario built from four spin directions.
[[nodiscard]] Scenario spin_scenario(BlochDirection x1, BlochDirection y1, BlochDirection x2, BlochDirection y2);

/// X1 at 0, Y2 at pi/4, Y1 at pi/2, X2 at 3 pi/4 in the x-y plane: the
/// singlet configuration that breaks the upper bound.
[[nodiscard]] Scenario singlet_planar_scenario();

/// (q1, q2, q3, q4) with optional (q5, q6) for trichotomic X observables.
struct QVector {
    std::array<double, 4> q{};
    std::optional<std::array<double, 2>> extra;

    /// Throws InvalidQVector if a component lies outside [-1e-10, 1+1e-10];
    /// values within that margin are clamped.
    static QVector make(std::span<const double> components);

    [[nodiscard]] bool trichotomic() const noexcept { return extra.has_value(); }
    [[nodiscard]] std::vector<double> components() const;
    [[nodiscard]] double q1() const noexcept { return q[0]; }
    [[nodiscard]] double q2() const noexcept { return q[1]; }
    [[nodiscard]] double q3() const noexcept { return q[2]; }
    [[nodiscard]] double q4() const noexcept { return q[3]; }
};

enum class Classification { HardyViolation, KunkriViolation, LowerBoundViolation, UpperBoundViolation, NoViolation };

[[nodiscard]] std::string_view to_string(Classification c) noexcept;

inline constexpr double default_classification_tol = 1e-9;

struct WitnessReport {
    QVector qvec;
    double generalized_value = 0.0;
    double ch_value = 0.0;
    Classification classification = Classification::NoViolation;
};

/// q1 = P(X1=+1,X2=+1), q2 = P(Y1=+1,X2=-1), q3 = P(X1=-1,Y2=+1),
/// q4 = P(Y1=+1,Y2=+1), and for trichotomic X also q5 = P(Y1=+1,X2=0),
/// q6 = P(X1=0,Y2=+1).
[[nodiscard]] QVector q_vector(const QuantumState &state, const Scenario &sc);

/// q1+q2+q3-q4 (+q5+q6). Local deterministic models keep it in [0,1].
[[nodiscard]] double generalized_expression(const QVector &q) noexcept;

/// Clauser-Horne combination
/// P(X1+,X2+) - P(Y1+,X2+) - P(X1+,Y2+) - P(Y1+,Y2+) + P(Y1+) + P(Y2+).
[[nodiscard]] double ch_expression(const QuantumState &state, const Scenario &sc);

/// Hardy > Kunkri > lower bound > upper bound > none.
[[nodiscard]] Classification classify(const QVector &q, double gen_value, double tol = default_classification_tol);

[[nodiscard]] WitnessReport evaluate(const QuantumState &state, const Scenario &sc,
                                     double tol = default_classification_tol);

} // namespace hardyq
