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

#include "hardyq/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hardyq::io {

namespace {

Json complex_entries(const ComplexMatrix &m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            data.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return data;
}

std::vector<Complex> parse_complex_entries(const Json &data) {
    if (!data.is_array()) {
        throw ParseError("\"data\" must be an array of [re,im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(data.size());
    for (const auto &e : data) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("complex entries must be [re,im] number pairs");
        }
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::size_t positive_size(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw ParseError(std::string(what) + " must be a positive integer");
    }
    return j.get<std::size_t>();
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

} // namespace

Json to_json(const QuantumState &state) {
    Json j;
    j["dims"] = {state.dims().first, state.dims().second};
    if (state.kind() == QuantumState::Kind::Pure) {
        j["kind"] = "pure";
        j["data"] = complex_entries(state.amplitudes());
    } else {
        j["kind"] = "density";
        j["data"] = complex_entries(state.rho());
    }
    return j;
}

Json to_json(const Observable &obs) {
    Json j;
    j["dim"] = obs.dim();
    Json outcomes = Json::array();
    for (const auto &o : obs.outcomes()) {
        Json entry;
        entry["label"] = o.label;
        entry["projector"] = complex_entries(o.projector);
        outcomes.push_back(std::move(entry));
    }
    j["outcomes"] = std::move(outcomes);
    return j;
}

Json to_json(const Scenario &sc) {
    Json j;
    j["x1"] = to_json(sc.x1());
    j["y1"] = to_json(sc.y1());
    j["x2"] = to_json(sc.x2());
    j["y2"] = to_json(sc.y2());
    return j;
}

Json to_json(const WitnessReport &report) {
    Json j;
    j["q"] = report.qvec.components();
    j["generalized"] = report.generalized_value;
    j["ch"] = report.ch_value;
    j["class"] = std::string(to_string(report.classification));
    return j;
}

Json to_json(const FeasibilityResult &result) {
    Json j;
    j["feasible"] = result.feasible;
    j["witness"] = result.witness ? Json(*result.witness) : Json(nullptr);
    j["residual"] = result.residual;
    return j;
}

Json to_json(BlochDirection dir) {
    Json j;
    j["theta"] = dir.theta;
    j["phi"] = dir.phi;
    return j;
}

Json to_json(const SearchResult &result) {
    Json j;
    j["objective"] = result.objective == Objective::MaximizeUpper ? "upper" : "lower";
    j["value"] = result.value;
    j["settings"] = {{"x1", to_json(result.settings[0])},
                     {"y1", to_json(result.settings[1])},
                     {"x2", to_json(result.settings[2])},
                     {"y2", to_json(result.settings[3])}};
    Json trace = Json::array();
    for (const auto &t : result.trace) {
        trace.push_back({{"restart", t.restart}, {"value", t.value}, {"iterations", t.iterations}});
    }
    j["trace"] = std::move(trace);
    return j;
}

QuantumState state_from_json(const Json &j) {
    const auto &dims_j = field(j, "dims");
    if (!dims_j.is_array() || dims_j.size() != 2) {
        throw ParseError("\"dims\" must be [d1,d2]");
    }
    const Dims dims{positive_size(dims_j[0], "d1"), positive_size(dims_j[1], "d2")};
    const auto &kind = field(j, "kind");
    const auto entries = parse_complex_entries(field(j, "data"));
    const auto n = static_cast<Eigen::Index>(dims.total());
    if (kind == "pure") {
        if (static_cast<Eigen::Index>(entries.size()) != n) {
            throw ParseError("pure state needs d1*d2 amplitudes");
        }
        ComplexVector psi(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            psi(i) = entries[static_cast<std::size_t>(i)];
        }
        return QuantumState::pure(dims, std::move(psi));
    }
    if (kind == "density") {
        if (static_cast<Eigen::Index>(entries.size()) != n * n) {
            throw ParseError("density state needs (d1*d2)^2 entries");
        }
        ComplexMatrix rho(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index k = 0; k < n; ++k) {
                rho(i, k) = entries[static_cast<std::size_t>(i * n + k)];
            }
        }
        return QuantumState::density(dims, std::move(rho));
    }
    throw ParseError("\"kind\" must be \"pure\" or \"density\"");
}

Observable observable_from_json(const Json &j) {
    if (j.is_object() && j.contains("bloch")) {
        const auto &b = j.at("bloch");
        return spin_observable(BlochDirection::make(number(field(b, "theta"), "theta"), number(field(b, "phi"), "phi")));
    }
    const std::size_t d = positive_size(field(j, "dim"), "dim");
    const auto &outcomes_j = field(j, "outcomes");
    if (!outcomes_j.is_array()) {
        throw ParseError("\"outcomes\" must be an array");
    }
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<Outcome> outcomes;
    for (const auto &o : outcomes_j) {
        const auto entries = parse_complex_entries(field(o, "projector"));
        if (static_cast<Eigen::Index>(entries.size()) != n * n) {
            throw ParseError("projector needs dim*dim entries");
        }
        ComplexMatrix p(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                p(r, c) = entries[static_cast<std::size_t>(r * n + c)];
            }
        }
        outcomes.push_back({number(field(o, "label"), "label"), std::move(p)});
    }
    return Observable(d, std::move(outcomes));
}

Scenario scenario_from_json(const Json &j) {
    return {observable_from_json(field(j, "x1")), observable_from_json(field(j, "y1")),
            observable_from_json(field(j, "x2")), observable_from_json(field(j, "y2"))};
}

std::string read_text(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(e.what());
    }
}

std::string format_number(double value, bool full_precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.9g", value);
    return buf;
}

std::string vertices_csv(bool trichotomic) {
    std::ostringstream out;
    out << "X1,X2,Y1,Y2,value\n";
    for (const auto &s : enumerate_strategies(trichotomic)) {
        out << s.x1 << ',' << s.x2 << ',' << (s.y1_plus ? "+1" : "other") << ',' << (s.y2_plus ? "+1" : "other")
            << ',' << vertex_expression_value(s) << '\n';
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "parameter,q1,q2,q3,q4,q5,q6,generalized,ch\n";
    for (const auto &r : rows) {
        out << format_number(r.parameter);
        for (double q : r.qvec.q) {
            out << ',' << format_number(q);
        }
        if (r.qvec.extra) {
            out << ',' << format_number((*r.qvec.extra)[0]) << ',' << format_number((*r.qvec.extra)[1]);
        } else {
            out << ",,";
        }
        out << ',' << format_number(r.generalized) << ',' << format_number(r.ch) << '\n';
    }
    return out.str();
}

} // namespace hardyq::io
