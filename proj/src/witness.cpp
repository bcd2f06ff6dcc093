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

#include "hardyq/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardyq {

namespace {

std::optional<XKind> x_kind(const Observable &obs) {
    auto labels = obs.labels();
    std::sort(labels.begin(), labels.end());
    auto matches = [&](std::initializer_list<double> expected) {
        return labels.size() == expected.size() &&
               std::equal(labels.begin(), labels.end(), expected.begin(),
                          [](double a, double b) { return std::abs(a - b) <= tolerance::label; });
    };
    if (matches({-1.0, 1.0})) {
        return XKind::Dichotomic;
    }
    if (matches({-1.0, 0.0, 1.0})) {
        return XKind::Trichotomic;
    }
    return std::nullopt;
}

} // namespace

Scenario::Scenario(Observable x1, Observable y1, Observable x2, Observable y2)
    : x1_(std::move(x1)), y1_(std::move(y1)), x2_(std::move(x2)), y2_(std::move(y2)) {
    if (x1_.dim() != y1_.dim() || x2_.dim() != y2_.dim()) {
        throw InvalidScenario("observables on the same subsystem must share a dimension");
    }
    if (!y1_.has_label(1.0) || !y2_.has_label(1.0)) {
        throw InvalidScenario("Y observables must have an outcome labelled +1");
    }
    const auto k1 = x_kind(x1_);
    const auto k2 = x_kind(x2_);
    if (!k1 || !k2) {
        throw InvalidScenario("X observables must have labels {-1,+1} or {-1,0,+1}");
    }
    if (*k1 != *k2) {
        throw InvalidScenario("X1 and X2 must both be dichotomic or both trichotomic");
    }
    kind_ = *k1;
}

Scenario spin_scenario(BlochDirection x1, BlochDirection y1, BlochDirection x2, BlochDirection y2) {
    return {spin_observable(x1), spin_observable(y1), spin_observable(x2), spin_observable(y2)};
}

Scenario singlet_planar_scenario() {
    constexpr double pi = std::numbers::pi;
    return spin_scenario(BlochDirection::in_xy_plane(0.0), BlochDirection::in_xy_plane(pi / 2.0),
                         BlochDirection::in_xy_plane(3.0 * pi / 4.0), BlochDirection::in_xy_plane(pi / 4.0));
}

QVector QVector::make(std::span<const double> components) {
    if (components.size() != 4 && components.size() != 6) {
        throw InvalidQVector("q-vector must have 4 or 6 components");
    }
    std::vector<double> c(components.begin(), components.end());
    for (auto &v : c) {
        if (!(v >= -tolerance::probability && v <= 1.0 + tolerance::probability)) {
            throw InvalidQVector("q-vector component outside [0,1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    QVector out;
    std::copy_n(c.begin(), 4, out.q.begin());
    if (c.size() == 6) {
        out.extra = std::array<double, 2>{c[4], c[5]};
    }
    return out;
}

std::vector<double> QVector::components() const {
    std::vector<double> out(q.begin(), q.end());
    if (extra) {
        out.push_back((*extra)[0]);
        out.push_back((*extra)[1]);
    }
    return out;
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::HardyViolation:
        return "HardyViolation";
    case Classification::KunkriViolation:
        return "KunkriViolation";
    case Classification::LowerBoundViolation:
        return "LowerBoundViolation";
    case Classification::UpperBoundViolation:
        return "UpperBoundViolation";
    case Classification::NoViolation:
        return "NoViolation";
    }
    return "NoViolation";
}

QVector q_vector(const QuantumState &state, const Scenario &sc) {
    if (state.dims() != sc.dims()) {
        throw DimensionMismatch("scenario dimensions do not match the state");
    }
    std::vector<double> c{
        joint_probability(state, sc.x1(), +1.0, sc.x2(), +1.0),
        joint_probability(state, sc.y1(), +1.0, sc.x2(), -1.0),
        joint_probability(state, sc.x1(), -1.0, sc.y2(), +1.0),
        joint_probability(state, sc.y1(), +1.0, sc.y2(), +1.0),
    };
    if (sc.trichotomic()) {
        c.push_back(joint_probability(state, sc.y1(), +1.0, sc.x2(), 0.0));
        c.push_back(joint_probability(state, sc.x1(), 0.0, sc.y2(), +1.0));
    }
    return QVector::make(c);
}

double generalized_expression(const QVector &q) noexcept {
    double value = q.q1() + q.q2() + q.q3() - q.q4();
    if (q.extra) {
        value += (*q.extra)[0] + (*q.extra)[1];
    }
    return value;
}

double ch_expression(const QuantumState &state, const Scenario &sc) {
    if (state.dims() != sc.dims()) {
        throw DimensionMismatch("scenario dimensions do not match the state");
    }
    return joint_probability(state, sc.x1(), +1.0, sc.x2(), +1.0) -
           joint_probability(state, sc.y1(), +1.0, sc.x2(), +1.0) -
           joint_probability(state, sc.x1(), +1.0, sc.y2(), +1.0) -
           joint_probability(state, sc.y1(), +1.0, sc.y2(), +1.0) +
           marginal_probability(state, Side::First, sc.y1(), +1.0) +
           marginal_probability(state, Side::Second, sc.y2(), +1.0);
}

Classification classify(const QVector &q, double gen_value, double tol) {
    const bool extras_zero = !q.extra || ((*q.extra)[0] < tol && (*q.extra)[1] < tol);
    const bool q2_q3_zero = q.q2() < tol && q.q3() < tol && extras_zero;
    if (q2_q3_zero && q.q1() < tol && q.q4() > tol) {
        return Classification::HardyViolation;
    }
    if (q2_q3_zero && q.q1() > tol && q.q1() < q.q4() - tol) {
        return Classification::KunkriViolation;
    }
    if (gen_value < -tol) {
        return Classification::LowerBoundViolation;
    }
    if (gen_value > 1.0 + tol) {
        return Classification::UpperBoundViolation;
    }
    return Classification::NoViolation;
}

WitnessReport evaluate(const QuantumState &state, const Scenario &sc, double tol) {
    WitnessReport report;
    report.qvec = q_vector(state, sc);
    report.generalized_value = generalized_expression(report.qvec);
    report.ch_value = ch_expression(state, sc);
    report.classification = classify(report.qvec, report.generalized_value, tol);
    return report;
}

} // namespace hardyq
