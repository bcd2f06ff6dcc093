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

#include "hardyq/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hardyq {

namespace {

constexpr double weight_tol = 1e-12;
// Slack for comparing sums of the same weights grouped differently.
constexpr double rounding_slack = 1e-12;

} // namespace

FiniteMeasure::FiniteMeasure(std::vector<double> weights, std::vector<bool> a, std::vector<bool> b,
                             std::vector<bool> c, std::vector<bool> d)
    : weights_(std::move(weights)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const std::size_t n = weights_.size();
    if (n == 0) {
        throw MalformedMeasure("measure needs at least one atom");
    }
    if (a_.size() != n || b_.size() != n || c_.size() != n || d_.size() != n) {
        throw MalformedMeasure("subset membership vectors must match the atom count");
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw MalformedMeasure("weights must be finite and nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > weight_tol) {
        throw MalformedMeasure("weights must sum to 1");
    }
}

double set_expression(const FiniteMeasure &m) {
    const double ab = m.measure([](bool a, bool b, bool, bool) { return a && b; });
    const double c = m.measure([](bool, bool, bool c, bool) { return c; });
    const double bc = m.measure([](bool, bool b, bool c, bool) { return b && c; });
    const double d = m.measure([](bool, bool, bool, bool d) { return d; });
    const double ad = m.measure([](bool a, bool, bool, bool d) { return a && d; });
    const double cd = m.measure([](bool, bool, bool c, bool d) { return c && d; });
    return ab + c - bc + d - ad - cd;
}

std::pair<bool, bool> proof_step_inequalities(const FiniteMeasure &m) {
    const double ad = m.measure([](bool a, bool, bool, bool d) { return a && d; });
    const double bc = m.measure([](bool, bool b, bool c, bool) { return b && c; });
    const double c_or_d = m.measure([](bool, bool, bool c, bool d) { return c || d; });
    const double abcd = m.measure([](bool a, bool b, bool c, bool d) { return a && b && c && d; });
    const double not_a_or_not_b = m.measure([](bool a, bool b, bool, bool) { return !a || !b; });
    const bool lower_step = ad + bc <= c_or_d + abcd + rounding_slack;
    const bool upper_step = c_or_d <= not_a_or_not_b + ad + bc + rounding_slack;
    return {lower_step, upper_step};
}

std::vector<DeterministicStrategy> enumerate_strategies(bool trichotomic) {
    const std::vector<int> x_values = trichotomic ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
    std::vector<DeterministicStrategy> out;
    out.reserve(x_values.size() * x_values.size() * 4);
    for (int x1 : x_values) {
        for (int x2 : x_values) {
            for (bool y1 : {false, true}) {
                for (bool y2 : {false, true}) {
                    out.push_back({x1, x2, y1, y2});
                }
            }
        }
    }
    return out;
}

std::vector<int> vertex_indicators(const DeterministicStrategy &s, bool trichotomic) {
    const int y1 = s.y1_plus ? 1 : 0;
    const int y2 = s.y2_plus ? 1 : 0;
    std::vector<int> q{
        (s.x1 == 1 && s.x2 == 1) ? 1 : 0,
        y1 * (s.x2 == -1 ? 1 : 0),
        (s.x1 == -1 ? 1 : 0) * y2,
        y1 * y2,
    };
    if (trichotomic) {
        q.push_back(y1 * (s.x2 == 0 ? 1 : 0));
        q.push_back((s.x1 == 0 ? 1 : 0) * y2);
    }
    return q;
}

int vertex_expression_value(const DeterministicStrategy &s) {
    const auto q = vertex_indicators(s, true);
    return q[0] + q[1] + q[2] - q[3] + q[4] + q[5];
}

std::vector<double> induced_q(std::span<const DeterministicStrategy> strategies, std::span<const double> weights,
                              bool trichotomic) {
    std::vector<double> q(trichotomic ? 6 : 4, 0.0);
    const std::size_t n = std::min(strategies.size(), weights.size());
    for (std::size_t s = 0; s < n; ++s) {
        const auto ind = vertex_indicators(strategies[s], trichotomic);
        for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] += weights[s] * ind[k];
        }
    }
    return q;
}

namespace lp {

PhaseOneResult phase_one(std::span<const double> a, std::size_t rows, std::span<const double> b) {
    constexpr double eps = 1e-12;
    const std::size_t m = rows;
    const std::size_t n = m == 0 ? 0 : a.size() / m;
    const std::size_t cols = n + m + 1; // originals, artificials, rhs
    const std::size_t rhs = n + m;

    std::vector<double> t((m + 1) * cols, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double & { return t[i * cols + j]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            at(i, j) = a[i * n + j];
        }
        at(i, n + i) = 1.0;
        at(i, rhs) = b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the phase-one objective sum(artificials).
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            s += at(i, j);
        }
        at(m, j) = -s;
    }
    at(m, rhs) = -std::accumulate(b.begin(), b.end(), 0.0);

    PhaseOneResult result;
    const std::size_t max_pivots = 50 * (n + m) + 100;
    while (result.pivots < max_pivots) {
        // Bland: lowest-index improving column.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (at(m, j) < -eps) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double coef = at(i, enter);
            if (coef <= eps) {
                continue;
            }
            const double ratio = at(i, rhs) / coef;
            if (ratio < best_ratio - eps || (std::abs(ratio - best_ratio) <= eps && basis[i] < basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == m) {
            break; // unbounded direction; cannot happen for a bounded phase-one objective
        }
        const double pivot = at(leave, enter);
        for (std::size_t j = 0; j < cols; ++j) {
            at(leave, j) /= pivot;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) {
                continue;
            }
            const double factor = at(i, enter);
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                at(i, j) -= factor * at(leave, j);
            }
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    result.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            result.x[basis[i]] = at(i, rhs);
        }
    }
    result.infeasibility = std::max(0.0, -at(m, rhs));
    return result;
}

} // namespace lp

FeasibilityResult lhv_feasible(const QVector &q) {
    const auto target = q.components();
    for (double v : target) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InvalidQVector("q-vector component outside [0,1]");
        }
    }
    const bool tri = q.trichotomic();
    const auto strategies = enumerate_strategies(tri);
    const std::size_t n = strategies.size();
    const std::size_t k = target.size();

    auto check = [&](std::vector<double> w) {
        for (auto &v : w) {
            v = std::max(v, 0.0);
        }
        const auto got = induced_q(strategies, w, tri);
        double residual = std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0);
        for (std::size_t i = 0; i < k; ++i) {
            residual = std::max(residual, std::abs(got[i] - target[i]));
        }
        return std::make_pair(std::move(w), residual);
    };

    // A single vertex reproducing q exactly gives the simplest witness.
    for (std::size_t s = 0; s < n; ++s) {
        const auto ind = vertex_indicators(strategies[s], tri);
        if (std::equal(ind.begin(), ind.end(), target.begin(),
                       [](int i, double v) { return std::abs(i - v) <= feasibility_tol; })) {
            std::vector<double> w(n, 0.0);
            w[s] = 1.0;
            auto [weights, residual] = check(std::move(w));
            return {true, std::move(weights), residual};
        }
    }

    // Rows: normalization, then one row per q component.
    std::vector<double> a((k + 1) * n, 0.0);
    std::vector<double> b(k + 1, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        a[s] = 1.0;
        const auto ind = vertex_indicators(strategies[s], tri);
        for (std::size_t i = 0; i < k; ++i) {
            a[(i + 1) * n + s] = ind[i];
        }
    }
    b[0] = 1.0;
    std::copy(target.begin(), target.end(), b.begin() + 1);

    const auto solution = lp::phase_one(a, k + 1, b);
    if (solution.infeasibility > feasibility_tol) {
        return {false, std::nullopt, solution.infeasibility};
    }
    auto [weights, residual] = check(solution.x);
    if (residual > feasibility_tol) {
        return {false, std::nullopt, residual};
    }
    return {true, std::move(weights), residual};
}

} // namespace hardyq
