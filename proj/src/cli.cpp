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

#include "hardyq/cli.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hardyq/io.hpp"
#include "hardyq/lhv.hpp"
#include "hardyq/search.hpp"
#include "hardyq/witness.hpp"

namespace hardyq::cli {

namespace {

using io::format_number;
using io::Json;

std::string join(const std::vector<double> &values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? ", " : "") + format_number(values[i]);
    }
    return s + "]";
}

std::vector<double> parse_q_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw ParseError("cannot parse q component \"" + item + "\"");
        }
        if (used != item.size()) {
            throw ParseError("cannot parse q component \"" + item + "\"");
        }
        out.push_back(v);
    }
    if (out.size() != 4 && out.size() != 6) {
        throw ParseError("--q needs 4 or 6 comma-separated values");
    }
    return out;
}

void print_json(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

void print_report(std::ostream &out, const WitnessReport &r) {
    out << "q = " << join(r.qvec.components()) << '\n'
        << "generalized = " << format_number(r.generalized_value) << '\n'
        << "ch = " << format_number(r.ch_value) << '\n'
        << "class = " << to_string(r.classification) << '\n';
}

Json planar_json(const PlanarSettings &s) { return {{"x1", s.x1}, {"y1", s.y1}, {"x2", s.x2}, {"y2", s.y2}}; }

} // namespace

int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hardy-type nonlocality and Clauser-Horne toolkit", "hardyq"};
    app.require_subcommand(1, 1);

    bool json = false;
    double tol = default_classification_tol;

    std::string state_path;
    std::string scenario_path;
    auto *eval = app.add_subcommand("eval", "Evaluate q-vector, generalized and CH expressions");
    eval->add_option("--state", state_path, "State JSON file, - for stdin")->required();
    eval->add_option("--scenario", scenario_path, "Scenario JSON file, - for stdin")->required();
    eval->add_option("--tol", tol, "Classification tolerance")->check(CLI::PositiveNumber);
    eval->add_flag("--json", json, "Full-precision JSON output");

    std::string q_text;
    auto *lhv_check = app.add_subcommand("lhv-check", "Decide local-model feasibility of a q-vector");
    lhv_check->add_option("--q", q_text, "q1,q2,q3,q4[,q5,q6]")->required();
    lhv_check->add_flag("--json", json, "Full-precision JSON output");

    bool trichotomic = false;
    bool csv = false;
    auto *vertices = app.add_subcommand("vertices", "List deterministic strategies with expression values");
    vertices->add_flag("--trichotomic", trichotomic, "X observables with outcomes -1, 0, +1");
    vertices->add_flag("--csv", csv, "CSV output");

    double theta = 0.0;
    double hardy_tol = default_hardy_tol;
    auto *hardy = app.add_subcommand("hardy", "Construct Hardy observables for cos t|00> + sin t|11>");
    hardy->add_option("--theta", theta, "Schmidt angle in (0, pi/4)")->required();
    hardy->add_option("--tol", hardy_tol, "Zero tolerance")->check(CLI::PositiveNumber);
    hardy->add_flag("--json", json, "Full-precision JSON output");

    std::string objective = "upper";
    SearchConfig cfg;
    bool full_bloch = false;
    auto *optimize = app.add_subcommand("optimize", "Search observables for the largest violation");
    optimize->add_option("--state", state_path, "State JSON file, - for stdin")->required();
    optimize->add_option("--objective", objective, "upper or lower")
        ->check(CLI::IsMember({"upper", "lower"}))
        ->required();
    optimize->add_option("--restarts", cfg.restarts, "Number of restarts")->check(CLI::PositiveNumber);
    optimize->add_option("--seed", cfg.seed, "Pseudo-random seed");
    optimize->add_option("--max-iter", cfg.max_iterations, "Iterations per restart")->check(CLI::PositiveNumber);
    optimize->add_flag("--full-bloch", full_bloch, "Search the whole Bloch sphere instead of the x-z plane");
    optimize->add_flag("--json", json, "Full-precision JSON output");

    std::string family;
    double lo = 0.0;
    double hi = 1.0;
    int steps = 11;
    auto *sweep = app.add_subcommand("sweep", "Sweep a state family and print CSV");
    sweep->add_option("--family", family, "werner or schmidt")
        ->check(CLI::IsMember({"werner", "schmidt"}))
        ->required();
    sweep->add_option("--lo", lo, "Lower parameter")->required();
    sweep->add_option("--hi", hi, "Upper parameter")->required();
    sweep->add_option("--steps", steps, "Number of points")->check(CLI::PositiveNumber)->required();

    std::string demo_name;
    auto *demo = app.add_subcommand("demo", "Run a built-in example");
    demo->add_option("name", demo_name, "singlet")->check(CLI::IsMember({"singlet"}))->required();
    demo->add_flag("--json", json, "Full-precision JSON output");

    std::vector<const char *> raw;
    raw.reserve(argv.size());
    for (const auto &a : argv) {
        raw.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    try {
        if (eval->parsed()) {
            const auto state = io::state_from_json(io::parse_json(io::read_text(state_path)));
            const auto scenario = io::scenario_from_json(io::parse_json(io::read_text(scenario_path)));
            const auto report = evaluate(state, scenario, tol);
            json ? print_json(out, io::to_json(report)) : print_report(out, report);
        } else if (lhv_check->parsed()) {
            const auto q = QVector::make(parse_q_list(q_text));
            const auto result = lhv_feasible(q);
            if (json) {
                print_json(out, io::to_json(result));
            } else {
                out << "feasible: " << (result.feasible ? "true" : "false") << '\n'
                    << "residual: " << format_number(result.residual) << '\n';
                if (result.witness) {
                    out << "witness: " << join(*result.witness) << '\n';
                }
            }
        } else if (vertices->parsed()) {
            if (csv) {
                out << io::vertices_csv(trichotomic);
            } else {
                for (const auto &s : enumerate_strategies(trichotomic)) {
                    out << "X1=" << s.x1 << " X2=" << s.x2 << " Y1=" << (s.y1_plus ? "+1" : "other")
                        << " Y2=" << (s.y2_plus ? "+1" : "other") << " value=" << vertex_expression_value(s) << '\n';
                }
            }
        } else if (hardy->parsed()) {
            const auto c = hardy_construction(SchmidtState::make(theta), hardy_tol);
            if (json) {
                Json j;
                j["theta"] = theta;
                j["angles"] = planar_json(c.settings);
                j["scenario"] = io::to_json(c.settings.scenario());
                j["q"] = c.qvec.components();
                j["residual"] = c.residual;
                print_json(out, j);
            } else {
                out << "theta = " << format_number(theta) << '\n'
                    << "angles (x-z plane): x1 = " << format_number(c.settings.x1)
                    << ", y1 = " << format_number(c.settings.y1) << ", x2 = " << format_number(c.settings.x2)
                    << ", y2 = " << format_number(c.settings.y2) << '\n'
                    << "q = " << join(c.qvec.components()) << '\n'
                    << "residual = " << format_number(c.residual) << '\n';
            }
        } else if (optimize->parsed()) {
            const auto state = io::state_from_json(io::parse_json(io::read_text(state_path)));
            cfg.planar = !full_bloch;
            const auto result = optimize_violation(
                state, objective == "upper" ? Objective::MaximizeUpper : Objective::MinimizeLower, cfg);
            if (json) {
                print_json(out, io::to_json(result));
            } else {
                out << "objective = " << objective << '\n' << "value = " << format_number(result.value) << '\n';
                const char *names[] = {"x1", "y1", "x2", "y2"};
                for (std::size_t i = 0; i < 4; ++i) {
                    out << names[i] << " = (theta " << format_number(result.settings[i].theta) << ", phi "
                        << format_number(result.settings[i].phi) << ")\n";
                }
            }
        } else if (sweep->parsed()) {
            const auto rows = family == "werner" ? sweep_werner(singlet_planar_scenario(), lo, hi, steps)
                                                 : sweep_schmidt(lo, hi, steps);
            out << io::sweep_csv(rows);
        } else if (demo->parsed()) {
            const auto report = evaluate(singlet(), singlet_planar_scenario());
            const double expected = (1.0 + std::numbers::sqrt2) / 2.0;
            if (json) {
                Json j = io::to_json(report);
                j["expected"] = expected;
                print_json(out, j);
            } else {
                print_report(out, report);
                out << "expected (1+sqrt2)/2 = " << format_number(expected) << '\n'
                    << "deviation = " << format_number(report.generalized_value - expected) << '\n';
            }
        }
    } catch (const ParseError &e) {
        err << "ParseError: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const Error &e) {
        err << e.name() << ": " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

} // namespace hardyq::cli
