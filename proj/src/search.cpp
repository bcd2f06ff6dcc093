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

#include "hardyq/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace hardyq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double entanglement_floor = 1e-12;

using Vec2 = Eigen::Vector2d;

/// +1 eigenvector of the x-z plane spin observable at Bloch angle t.
Vec2 plus_vector(double t) { return {std::cos(t / 2.0), std::sin(t / 2.0)}; }

Vec2 perp(const Vec2 &v) { return Vec2{-v.y(), v.x()}.normalized(); }

double bloch_angle(const Vec2 &v) { return 2.0 * std::atan2(v.y(), v.x()); }

/// Closed-form completion of the Hardy conditions once X1 is fixed: each
/// zero-probability condition pins one remaining +1 eigenvector to the
/// orthogonal complement of a conditional state of the other party.
PlanarSettings complete_hardy(const Eigen::Matrix2d &amplitudes, double x1_angle) {
    const Vec2 x1_plus = plus_vector(x1_angle);
    const Vec2 x1_minus = perp(x1_plus);
    const Vec2 x2_plus = perp(amplitudes.transpose() * x1_plus);  // P(X1+,X2+) = 0
    const Vec2 x2_minus = perp(x2_plus);
    const Vec2 y2_plus = perp(amplitudes.transpose() * x1_minus); // P(X1-,Y2+) = 0
    const Vec2 y1_plus = perp(amplitudes * x2_minus);             // P(Y1+,X2-) = 0
    return {x1_angle, bloch_angle(y1_plus), bloch_angle(x2_plus), bloch_angle(y2_plus)};
}

double hardy_q4(const Eigen::Matrix2d &amplitudes, const PlanarSettings &s) {
    const double overlap = plus_vector(s.y1).dot(amplitudes * plus_vector(s.y2));
    return overlap * overlap;
}

BlochDirection direction_from_angles(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    const double polar = std::acos(std::clamp(nz, -1.0, 1.0));
    double azimuth = std::atan2(ny, nx);
    if (azimuth < 0.0) {
        azimuth += 2.0 * pi;
    }
    if (azimuth >= 2.0 * pi) {
        azimuth = 0.0;
    }
    return {polar, azimuth};
}

Scenario scenario_from(const std::array<BlochDirection, 4> &s) { return spin_scenario(s[0], s[1], s[2], s[3]); }

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) {
        throw InvalidArgument("steps must be positive");
    }
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    }
    return out;
}

} // namespace

SchmidtState SchmidtState::make(double theta) {
    if (!(theta >= 0.0 && theta <= pi / 4.0)) {
        throw InvalidArgument("Schmidt angle must lie in [0, pi/4]");
    }
    return {theta};
}

QuantumState SchmidtState::state() const {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = std::cos(theta);
    psi(3) = std::sin(theta);
    return QuantumState::pure({2, 2}, std::move(psi));
}

QuantumState werner_state(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw InvalidArgument("visibility must lie in [0, 1]");
    }
    const ComplexMatrix rho = visibility * singlet().rho() + (1.0 - visibility) * identity(4) / 4.0;
    return QuantumState::density({2, 2}, rho);
}

Scenario PlanarSettings::scenario() const {
    return spin_scenario(BlochDirection::in_xz_plane(x1), BlochDirection::in_xz_plane(y1),
                         BlochDirection::in_xz_plane(x2), BlochDirection::in_xz_plane(y2));
}

HardyConstruction hardy_construction(SchmidtState s, double tol) {
    if (s.theta <= entanglement_floor) {
        throw NotEntangled("product state admits a local model");
    }
    if (std::abs(s.theta - pi / 4.0) <= tol) {
        throw MaximallyEntangled("Hardy conditions cannot be met on a maximally entangled state");
    }
    Eigen::Matrix2d amplitudes = Eigen::Matrix2d::Zero();
    amplitudes(0, 0) = std::cos(s.theta);
    amplitudes(1, 1) = std::sin(s.theta);

    auto objective = [&](double x1_angle) { return hardy_q4(amplitudes, complete_hardy(amplitudes, x1_angle)); };

    // q4 as a function of the X1 angle is smooth but not unimodal on the
    // full circle; bracket the best grid cell before refining.
    constexpr int grid = 720;
    const double step = 2.0 * pi / grid;
    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < grid; ++i) {
        const double v = objective(i * step);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double x1_angle = optim::golden_section_max(objective, (best - 1) * step, (best + 1) * step, 1e-12);

    HardyConstruction out;
    out.settings = complete_hardy(amplitudes, x1_angle);
    out.qvec = q_vector(s.state(), out.settings.scenario());
    out.residual = std::max({out.qvec.q1(), out.qvec.q2(), out.qvec.q3()});
    if (out.residual >= tol || out.qvec.q4() <= tol) {
        throw NoSolution("Hardy construction failed: residual " + std::to_string(out.residual) + ", q4 " +
                         std::to_string(out.qvec.q4()));
    }
    return out;
}

Scenario hardy_observables(SchmidtState s, double tol) { return hardy_construction(s, tol).settings.scenario(); }

HardyOptimum max_hardy_probability(int resolution) {
    if (resolution < 100) {
        throw InvalidArgument("resolution must be at least 100");
    }
    const double h = (pi / 4.0) / (resolution + 1);
    auto q4_at = [](double theta) {
        try {
            return hardy_construction(SchmidtState::make(theta)).qvec.q4();
        } catch (const Error &) {
            return 0.0;
        }
    };
    int best = 1;
    double best_q4 = -1.0;
    for (int k = 1; k <= resolution; ++k) {
        const double q4 = q4_at(k * h);
        if (q4 > best_q4) {
            best_q4 = q4;
            best = k;
        }
    }
    const double theta = optim::golden_section_max(q4_at, (best - 1) * h, (best + 1) * h, 1e-10);
    const double refined = q4_at(theta);
    if (refined >= best_q4) {
        return {theta, refined};
    }
    return {best * h, best_q4};
}

Scenario SearchResult::scenario() const { return scenario_from(settings); }

SearchResult optimize_violation(const QuantumState &state, Objective objective, const SearchConfig &cfg) {
    if (state.dims() != Dims{2, 2}) {
        throw DimensionMismatch("the optimizer handles two-qubit states only");
    }
    if (cfg.restarts < 1 || cfg.max_iterations < 1 || !(cfg.tolerance > 0.0)) {
        throw InvalidArgument("search configuration values must be positive");
    }

    auto to_settings = [&](const std::vector<double> &p) {
        std::array<BlochDirection, 4> s{};
        for (std::size_t i = 0; i < 4; ++i) {
            s[i] = cfg.planar ? BlochDirection::in_xz_plane(p[i]) : direction_from_angles(p[2 * i], p[2 * i + 1]);
        }
        return s;
    };
    auto value_of = [&](const std::array<BlochDirection, 4> &s) {
        return generalized_expression(q_vector(state, scenario_from(s)));
    };
    const double sign = objective == Objective::MaximizeUpper ? -1.0 : 1.0;
    auto cost = [&](const std::vector<double> &p) { return sign * value_of(to_settings(p)); };

    const std::size_t dim = cfg.planar ? 4 : 8;
    SearchResult result;
    result.objective = objective;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
        std::vector<double> x0(dim);
        for (auto &v : x0) {
            v = angle(rng);
        }
        const auto nm = optim::nelder_mead(cost, std::move(x0), 0.1, cfg.max_iterations, cfg.tolerance);
        const auto settings = to_settings(nm.x);
        const double value = value_of(settings);
        result.trace.push_back({r, value, nm.iterations});
        const bool better = objective == Objective::MaximizeUpper ? value > result.value : value < result.value;
        if (!have_best || better) {
            have_best = true;
            result.value = value;
            result.settings = settings;
        }
    }
    return result;
}

double werner_sweep(const Scenario &scenario, double v_lo, double v_hi) {
    if (!(v_lo >= 0.0 && v_lo < v_hi && v_hi <= 1.0)) {
        throw InvalidArgument("visibility bounds must satisfy 0 <= lo < hi <= 1");
    }
    if (scenario.trichotomic()) {
        throw InvalidScenario("Werner sweep needs a dichotomic scenario");
    }
    auto excess = [&](double v) { return generalized_expression(q_vector(werner_state(v), scenario)) - 1.0; };
    double lo = v_lo;
    double hi = v_hi;
    const double f_lo = excess(lo);
    const double f_hi = excess(hi);
    const bool rising = f_lo <= 0.0 && f_hi > 0.0;
    const bool falling = f_lo > 0.0 && f_hi <= 0.0;
    if (!rising && !falling) {
        throw NoCrossing("generalized expression does not cross 1 on the interval");
    }
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const bool above = excess(mid) > 0.0;
        if (above == rising) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<SweepRow> sweep_werner(const Scenario &scenario, double lo, double hi, int steps) {
    std::vector<SweepRow> rows;
    for (double v : linspace(lo, hi, steps)) {
        const auto state = werner_state(v);
        const auto report = evaluate(state, scenario);
        rows.push_back({v, report.qvec, report.generalized_value, report.ch_value});
    }
    return rows;
}

std::vector<SweepRow> sweep_schmidt(double lo, double hi, int steps, double tol) {
    std::vector<SweepRow> rows;
    for (double theta : linspace(lo, hi, steps)) {
        try {
            const auto s = SchmidtState::make(theta);
            const auto c = hardy_construction(s, tol);
            rows.push_back({theta, c.qvec, generalized_expression(c.qvec), ch_expression(s.state(), c.settings.scenario())});
        } catch (const NotEntangled &) {
        } catch (const MaximallyEntangled &) {
        } catch (const NoSolution &) {
        }
    }
    return rows;
}

namespace optim {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             double step, int max_iterations, double ftol) {
    constexpr double reflection = 1.0;
    constexpr double expansion = 2.0;
    constexpr double contraction = 0.5;
    constexpr double shrink = 0.5;

    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1][i] += step;
    }
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        vals[i] = f(pts[i]);
    }
    std::vector<std::size_t> order(n + 1);

    auto combine = [n](const std::vector<double> &a, const std::vector<double> &b, double t) {
        // a + t (b - a)
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = a[k] + t * (b[k] - a[k]);
        }
        return out;
    };

    int it = 0;
    for (; it < max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];
        if (vals[worst] - vals[best] < ftol) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += pts[order[i]][k] / static_cast<double>(n);
            }
        }
        const auto xr = combine(centroid, pts[worst], -reflection);
        const double fr = f(xr);
        if (fr < vals[best]) {
            const auto xe = combine(centroid, xr, expansion);
            const double fe = f(xe);
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second_worst]) {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        const auto xc = outside ? combine(centroid, xr, contraction) : combine(centroid, pts[worst], contraction);
        const double fc = f(xc);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            pts[i] = combine(pts[best], pts[i], shrink);
            vals[i] = f(pts[i]);
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], it};
}

double golden_section_max(const std::function<double(double)> &f, double lo, double hi, double xtol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace optim

} // namespace hardyq
