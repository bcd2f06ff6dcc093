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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardyq/io.hpp"
#include "hardyq/lhv.hpp"
#include "hardyq/qcore.hpp"
#include "hardyq/search.hpp"
#include "hardyq/witness.hpp"

namespace py = pybind11;
using namespace hardyq;

namespace {

Dims to_dims(std::pair<std::size_t, std::size_t> d) { return {d.first, d.second}; }

std::pair<std::size_t, std::size_t> from_dims(Dims d) { return {d.first, d.second}; }

} // namespace

PYBIND11_MODULE(_hardyq, m) {
    m.doc() = "Hardy-type nonlocality, Clauser-Horne expressions and local-model feasibility";

    py::object base_error =
        py::reinterpret_steal<py::object>(PyErr_NewException("hardyq._hardyq.Error", PyExc_RuntimeError, nullptr));
    m.attr("Error") = base_error;
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::gil_scoped_acquire gil;
            py::object cls = py::module_::import("hardyq._hardyq").attr(std::string(e.name()).c_str());
            PyErr_SetString(cls.ptr(), e.what());
        }
    });
    for (const char *name : {"DimensionMismatch", "UnknownLabel", "InvalidState", "InvalidObservable",
                             "InvalidScenario", "InvalidQVector", "MalformedMeasure", "NotEntangled",
                             "MaximallyEntangled", "NoSolution", "NoCrossing", "InvalidArgument", "ParseError"}) {
        const std::string qualified = std::string("hardyq._hardyq.") + name;
        m.attr(name) = py::reinterpret_steal<py::object>(
            PyErr_NewException(qualified.c_str(), base_error.ptr(), nullptr));
    }

    // qcore
    py::enum_<Side>(m, "Side").value("First", Side::First).value("Second", Side::Second);

    py::class_<QuantumState>(m, "QuantumState")
        .def_static(
            "pure", [](std::pair<std::size_t, std::size_t> dims, ComplexVector psi) {
                return QuantumState::pure(to_dims(dims), std::move(psi));
            },
            py::arg("dims"), py::arg("amplitudes"))
        .def_static(
            "density", [](std::pair<std::size_t, std::size_t> dims, ComplexMatrix rho) {
                return QuantumState::density(to_dims(dims), std::move(rho));
            },
            py::arg("dims"), py::arg("rho"))
        .def_property_readonly("dims", [](const QuantumState &s) { return from_dims(s.dims()); })
        .def_property_readonly("is_pure", [](const QuantumState &s) { return s.kind() == QuantumState::Kind::Pure; })
        .def_property_readonly("rho", &QuantumState::rho)
        .def("to_json", [](const QuantumState &s) { return io::to_json(s).dump(); })
        .def_static("from_json", [](const std::string &text) { return io::state_from_json(io::parse_json(text)); });

    py::class_<Observable>(m, "Observable")
        .def(py::init([](std::size_t dim, const std::vector<std::pair<double, ComplexMatrix>> &outcomes) {
                 std::vector<Outcome> o;
                 for (const auto &[label, p] : outcomes) {
                     o.push_back({label, p});
                 }
                 return Observable(dim, std::move(o));
             }),
             py::arg("dim"), py::arg("outcomes"))
        .def_property_readonly("dim", &Observable::dim)
        .def_property_readonly("labels", &Observable::labels)
        .def("projector", &Observable::projector, py::arg("label"));

    py::class_<BlochDirection>(m, "BlochDirection")
        .def(py::init(&BlochDirection::make), py::arg("theta"), py::arg("phi"))
        .def_static("in_xz_plane", &BlochDirection::in_xz_plane)
        .def_static("in_xy_plane", &BlochDirection::in_xy_plane)
        .def_readonly("theta", &BlochDirection::theta)
        .def_readonly("phi", &BlochDirection::phi);

    m.def("spin_observable", &spin_observable, py::arg("direction"));
    m.def("tensor", &tensor);
    m.def("joint_probability", &joint_probability, py::arg("state"), py::arg("obs1"), py::arg("label1"),
          py::arg("obs2"), py::arg("label2"));
    m.def("marginal_probability", &marginal_probability, py::arg("state"), py::arg("side"), py::arg("obs"),
          py::arg("label"));
    m.def("singlet", &singlet);
    m.def("maximally_mixed", [](std::pair<std::size_t, std::size_t> dims) { return maximally_mixed(to_dims(dims)); });

    // witness
    py::class_<Scenario>(m, "Scenario")
        .def(py::init<Observable, Observable, Observable, Observable>(), py::arg("x1"), py::arg("y1"), py::arg("x2"),
             py::arg("y2"))
        .def_property_readonly("trichotomic", &Scenario::trichotomic)
        .def("to_json", [](const Scenario &s) { return io::to_json(s).dump(); })
        .def_static("from_json", [](const std::string &text) { return io::scenario_from_json(io::parse_json(text)); });
    m.def("spin_scenario", &spin_scenario, py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"));
    m.def("singlet_planar_scenario", &singlet_planar_scenario);

    py::class_<QVector>(m, "QVector")
        .def(py::init([](const std::vector<double> &c) { return QVector::make(c); }), py::arg("components"))
        .def_property_readonly("trichotomic", &QVector::trichotomic)
        .def("components", &QVector::components);

    py::enum_<Classification>(m, "Classification")
        .value("HardyViolation", Classification::HardyViolation)
        .value("KunkriViolation", Classification::KunkriViolation)
        .value("LowerBoundViolation", Classification::LowerBoundViolation)
        .value("UpperBoundViolation", Classification::UpperBoundViolation)
        .value("NoViolation", Classification::NoViolation);

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("qvec", &WitnessReport::qvec)
        .def_readonly("generalized_value", &WitnessReport::generalized_value)
        .def_readonly("ch_value", &WitnessReport::ch_value)
        .def_readonly("classification", &WitnessReport::classification)
        .def("to_json", [](const WitnessReport &r) { return io::to_json(r).dump(); });

    m.def("q_vector", &q_vector, py::arg("state"), py::arg("scenario"));
    m.def("generalized_expression", &generalized_expression, py::arg("q"));
    m.def("ch_expression", &ch_expression, py::arg("state"), py::arg("scenario"));
    m.def("classify", &classify, py::arg("q"), py::arg("gen_value"), py::arg("tol") = default_classification_tol);
    m.def("evaluate", &evaluate, py::arg("state"), py::arg("scenario"), py::arg("tol") = default_classification_tol);

    // lhv
    py::class_<FiniteMeasure>(m, "FiniteMeasure")
        .def(py::init<std::vector<double>, std::vector<bool>, std::vector<bool>, std::vector<bool>,
                      std::vector<bool>>(),
             py::arg("weights"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("set_expression", &set_expression);
    m.def("proof_step_inequalities", &proof_step_inequalities);

    py::class_<DeterministicStrategy>(m, "DeterministicStrategy")
        .def_readonly("x1", &DeterministicStrategy::x1)
        .def_readonly("x2", &DeterministicStrategy::x2)
        .def_readonly("y1_plus", &DeterministicStrategy::y1_plus)
        .def_readonly("y2_plus", &DeterministicStrategy::y2_plus);
    m.def("enumerate_strategies", &enumerate_strategies, py::arg("trichotomic") = false);
    m.def("vertex_expression_value", &vertex_expression_value);

    py::class_<FeasibilityResult>(m, "FeasibilityResult")
        .def_readonly("feasible", &FeasibilityResult::feasible)
        .def_readonly("witness", &FeasibilityResult::witness)
        .def_readonly("residual", &FeasibilityResult::residual)
        .def("to_json", [](const FeasibilityResult &r) { return io::to_json(r).dump(); });
    m.def("lhv_feasible", &lhv_feasible, py::arg("q"));

    // search
    py::class_<SchmidtState>(m, "SchmidtState")
        .def(py::init(&SchmidtState::make), py::arg("theta"))
        .def_readonly("theta", &SchmidtState::theta)
        .def("state", &SchmidtState::state);
    m.def("werner_state", &werner_state, py::arg("visibility"));

    py::class_<PlanarSettings>(m, "PlanarSettings")
        .def_readonly("x1", &PlanarSettings::x1)
        .def_readonly("y1", &PlanarSettings::y1)
        .def_readonly("x2", &PlanarSettings::x2)
        .def_readonly("y2", &PlanarSettings::y2)
        .def("scenario", &PlanarSettings::scenario);
    py::class_<HardyConstruction>(m, "HardyConstruction")
        .def_readonly("settings", &HardyConstruction::settings)
        .def_readonly("qvec", &HardyConstruction::qvec)
        .def_readonly("residual", &HardyConstruction::residual);
    m.def("hardy_construction", &hardy_construction, py::arg("state"), py::arg("tol") = default_hardy_tol);
    m.def("hardy_observables", &hardy_observables, py::arg("state"), py::arg("tol") = default_hardy_tol);
    m.def(
        "max_hardy_probability",
        [](int resolution) {
            const auto r = max_hardy_probability(resolution);
            return std::make_pair(r.theta, r.q4);
        },
        py::arg("resolution") = 1000);

    py::enum_<Objective>(m, "Objective")
        .value("MaximizeUpper", Objective::MaximizeUpper)
        .value("MinimizeLower", Objective::MinimizeLower);
    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &SearchConfig::restarts)
        .def_readwrite("max_iterations", &SearchConfig::max_iterations)
        .def_readwrite("tolerance", &SearchConfig::tolerance)
        .def_readwrite("seed", &SearchConfig::seed)
        .def_readwrite("planar", &SearchConfig::planar);
    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("value", &SearchResult::value)
        .def_property_readonly("settings",
                               [](const SearchResult &r) {
                                   return std::vector<BlochDirection>(r.settings.begin(), r.settings.end());
                               })
        .def("scenario", &SearchResult::scenario)
        .def("to_json", [](const SearchResult &r) { return io::to_json(r).dump(); });
    m.def("optimize_violation", &optimize_violation, py::arg("state"), py::arg("objective"),
          py::arg("config") = SearchConfig{});
    m.def("werner_sweep", &werner_sweep, py::arg("scenario"), py::arg("v_lo") = 0.0, py::arg("v_hi") = 1.0);
}
