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
 * Local deterministic hidden-variable models for the two-setting Hardy
 * scenario: finite set measures, deterministic strategies (vertices of the
 * local polytope) and LP feasibility of a q-vector.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hardyq/witness.hpp"

namespace hardyq {

/// Probability weights over n atoms together with four subsets A, B, C, D
/// given as membership vectors.
class FiniteMeasure {
  public:
    /// Throws MalformedMeasure.
    FiniteMeasure(std::vector<double> weights, std::vector<bool> a, std::vector<bool> b, std::vector<bool> c,
                  std::vector<bool> d);

    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] const std::vector<double> &weights() const noexcept { return weights_; }

    /// Measure of the atoms whose membership bits satisfy `pred(a, b, c, d)`.
    template <typename Pred> [[nodiscard]] double measure(Pred pred) const {
        double total = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (pred(a_[i], b_[i], c_[i], d_[i])) {
                total += weights_[i];
            }
        }
        return total;
    }

  private:
    std::vector<double> weights_;
    std::vector<bool> a_, b_, c_, d_;
};

/// mu[A n B] + mu[C] - mu[B n C] + mu[D] - mu[A n D] - mu[C n D]; always in [0,1].
[[nodiscard]] double set_expression(const FiniteMeasure &m);

/// The two intermediate inequalities of the bound's proof:
///   mu[A n D] + mu[B n C] <= mu[C u D] + mu[A n B n C n D]
///   mu[C u D] <= mu[~A u ~B] + mu[A n D] + mu[B n C]
/// where ~Z is the complement of Z in the atom set.
[[nodiscard]] std::pair<bool, bool> proof_step_inequalities(const FiniteMeasure &m);

/// One predetermined outcome per local observable. X outcomes are -1, 0 or
/// +1; for the Y observables only the event "+1" versus "other" matters.
struct DeterministicStrategy {
    int x1 = -1;
    int x2 = -1;
    bool y1_plus = false;
    bool y2_plus = false;

    friend auto operator<=>(const DeterministicStrategy &, const DeterministicStrategy &) = default;
};

/// Lexicographic in (X1, X2, Y1, Y2) with X order (-1, 0, +1) and Y order
/// (other, +1). 16 strategies when dichotomic, 36 when trichotomic.
[[nodiscard]] std::vector<DeterministicStrategy> enumerate_strategies(bool trichotomic);

/// Indicator q-vector of a strategy (4 or 6 entries, each 0 or 1).
[[nodiscard]] std::vector<int> vertex_indicators(const DeterministicStrategy &s, bool trichotomic);

/// Generalized expression on the indicator q-vector. Exact integer arithmetic.
[[nodiscard]] int vertex_expression_value(const DeterministicStrategy &s);

struct FeasibilityResult {
    bool feasible = false;
    /// Weights over enumerate_strategies(q.trichotomic()), present iff feasible.
    std::optional<std::vector<double>> witness;
    /// Feasible: max deviation of the witness-induced q from the input.
    /// Infeasible: phase-one objective (total artificial mass) at optimum.
    double residual = 0.0;
};

inline constexpr double feasibility_tol = 1e-9;

/// q-vector induced by a mixture of strategies.
[[nodiscard]] std::vector<double> induced_q(std::span<const DeterministicStrategy> strategies,
                                            std::span<const double> weights, bool trichotomic);

/// Decides whether q is a convex mixture of deterministic strategies.
/// Throws InvalidQVector when a component lies outside [0,1].
[[nodiscard]] FeasibilityResult lhv_feasible(const QVector &q);

namespace lp {

struct PhaseOneResult {
    std::vector<double> x;
    double infeasibility = 0.0;
    std::size_t pivots = 0;
};

/// Phase-one simplex for {x >= 0 : A x = b} with b >= 0, Bland's rule.
/// `a` is row-major with `rows` rows. Minimizes the total artificial mass.
[[nodiscard]] PhaseOneResult phase_one(std::span<const double> a, std::size_t rows, std::span<const double> b);

} // namespace lp

} // namespace hardyq
