// Copyright 2026 The hqcdfs Authors
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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hqcdfs/cli.h"
#include "hqcdfs/gates.h"
#include "hqcdfs/holonomy.h"
#include "hqcdfs/noise.h"
#include "hqcdfs/serialization.h"

namespace py = pybind11;
using namespace hqcdfs;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& obj) {
    return parse_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

HermitianOperator hermitian(const ComplexMatrix& m) { return HermitianOperator(m); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Holonomic gates in decoherence-free subspaces";

    auto base = py::register_exception<Error>(m, "HqcdfsError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<DimensionCapError>(m, "DimensionCapError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<IndexError>(m, "IndexError", base.ptr());
    py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
    py::register_exception<SingularChainError>(m, "SingularChainError", base.ptr());

    py::enum_<Axis>(m, "Axis").value("X", Axis::kX).value("Y", Axis::kY).value("Z", Axis::kZ);
    py::enum_<GateKind>(m, "GateKind")
        .value("XZ", GateKind::kXZ)
        .value("ZX", GateKind::kZX)
        .value("CNOT", GateKind::kCNOT);

    // operator_algebra
    m.def("pauli_on", [](Axis axis, int k, int n) { return pauli_on(axis, k, n).matrix(); }, py::arg("axis"),
          py::arg("k"), py::arg("n"));
    m.def("tensor_product", [](const ComplexMatrix& a, const ComplexMatrix& b) { return tensor_product(a, b); });
    m.def("evolve", [](const ComplexMatrix& h, double t) { return evolve(hermitian(h), t).matrix(); },
          py::arg("h"), py::arg("t"));
    m.def("polar_unitary", [](const ComplexMatrix& a) { return polar_unitary(a).matrix(); });
    m.def("phase_aligned_distance", [](const ComplexMatrix& u, const ComplexMatrix& v) {
        return phase_aligned_distance(UnitaryOperator(u), UnitaryOperator(v));
    });

    // model
    py::class_<GateRecipe>(m, "GateRecipe")
        .def_static("xz", &GateRecipe::xz, py::arg("phase"), py::arg("strength") = 1.0, py::arg("block") = 1)
        .def_static("zx", &GateRecipe::zx, py::arg("phase"), py::arg("strength") = 1.0, py::arg("block") = 1)
        .def_static("cnot", &GateRecipe::cnot, py::arg("strength") = 1.0, py::arg("control") = 1,
                    py::arg("target") = 2)
        .def_static("make", &GateRecipe::make, py::arg("kind"), py::arg("phase"), py::arg("strength"),
                    py::arg("duration"), py::arg("blocks"))
        .def_static("detuned", &GateRecipe::detuned, py::arg("kind"), py::arg("phase"), py::arg("strength"),
                    py::arg("duration"), py::arg("blocks"))
        .def_static("from_json", [](const py::object& d) { return gate_recipe_from_json(from_python(d)); })
        .def("to_json", [](const GateRecipe& r) { return to_python(to_json(r)); })
        .def_property_readonly("kind", &GateRecipe::kind)
        .def_property_readonly("phase", &GateRecipe::phase)
        .def_property_readonly("strength", &GateRecipe::strength)
        .def_property_readonly("duration", &GateRecipe::duration)
        .def_property_readonly("blocks", &GateRecipe::blocks)
        .def_property_readonly("is_detuned", &GateRecipe::is_detuned)
        .def_property_readonly("pulse_area", &GateRecipe::pulse_area);
    m.def("nominal_pulse_area", &nominal_pulse_area);
    m.def("assemble", [](const py::object& config) {
        return assemble(coupling_config_from_json(from_python(config))).matrix();
    });
    m.def("recipe_hamiltonian",
          [](const GateRecipe& r, int n_blocks) { return recipe_hamiltonian(r, n_blocks).matrix(); });

    // subspace and holonomy
    m.def("recipe_logical_basis",
          [](const GateRecipe& r, int n_blocks) { return recipe_logical_basis(r, n_blocks).columns(); });
    m.def(
        "certify",
        [](const ComplexMatrix& h, const ComplexMatrix& basis, double tau, int steps) {
            int n = 0;
            while ((Eigen::Index{1} << n) < h.rows()) ++n;
            std::vector<StateVector> vectors;
            std::vector<std::string> labels;
            for (Eigen::Index c = 0; c < basis.cols(); ++c) {
                vectors.emplace_back(basis.col(c));
                labels.push_back(std::to_string(c));
            }
            return to_python(to_json(certify(hermitian(h), BasisSet(n, vectors, labels), tau, steps)));
        },
        py::arg("h"), py::arg("basis"), py::arg("tau"), py::arg("steps"));

    // gates
    m.def("target_for", [](const GateRecipe& r) { return target_for(r).matrix(); });
    m.def(
        "realize",
        [](const GateRecipe& r, int n_blocks, int steps) {
            GateRealization g = realize(r, n_blocks, steps);
            py::dict d = to_python(to_json(g));
            d["restricted"] = g.restricted;
            d["target"] = g.target.matrix();
            return d;
        },
        py::arg("recipe"), py::arg("n_blocks"), py::arg("steps") = 0);
    m.def("no_go_certificate",
          [](int trials, std::uint64_t seed) { return to_python(to_json(no_go_certificate(trials, seed))); },
          py::arg("trials") = 1000, py::arg("seed") = 7);

    // noise
    m.def(
        "noisy_realize",
        [](const GateRecipe& r, const py::object& ensemble, int n_blocks) {
            return to_python(to_json(noisy_realize(r, noise_ensemble_from_json(from_python(ensemble)), n_blocks), true));
        },
        py::arg("recipe"), py::arg("ensemble"), py::arg("n_blocks"));

    // cli
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> argv = {"hqcdfs"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out, err;
        int code = run_cli(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
