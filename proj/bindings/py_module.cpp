// Copyright 2026 The cugates developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cugates/classify.hpp"
#include "cugates/falsify.hpp"
#include "cugates/json_io.hpp"
#include "cugates/synth.hpp"
#include "cugates/verify.hpp"

namespace py = pybind11;
using namespace cugates;

namespace {

using PyMat2 = std::array<std::array<cxd, 2>, 2>;
using PyMat4 = std::array<std::array<cxd, 4>, 4>;

Mat2 to_mat2(const PyMat2& m) {
  return Mat2{m[0][0], m[0][1], m[1][0], m[1][1]};
}

PyMat2 from_mat2(const Mat2& m) {
  return PyMat2{{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

PyMat4 from_mat4(const Mat4& m) {
  PyMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

py::object json_to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_cugates, m) {
  m.doc() = "Minimal-gate-count circuits for controlled 2x2 unitaries";

  py::register_exception<ParseError>(m, "CircuitParseError", PyExc_ValueError);

  m.def(
      "classify",
      [](const PyMat2& u, double eps) { return json_to_py(report_to_json(classify(to_mat2(u), eps))); },
      py::arg("u"), py::arg("eps") = kDefaultEps,
      "Class tag, m(U) and decision margins as a dict.");

  m.def(
      "m_of",
      [](const PyMat2& u) { return classify(to_mat2(u)).m; },
      py::arg("u"), "Minimal elementary-gate count for controlled-U.");

  m.def(
      "is_generic",
      [](const PyMat2& u, double eps) { return is_generic(to_mat2(u), eps); },
      py::arg("u"), py::arg("eps") = kDefaultEps);

  m.def(
      "synth",
      [](const PyMat2& u) { return json_to_py(report_to_json(synth(to_mat2(u)))); },
      py::arg("u"),
      "Optimal circuit for controlled-U (class, gate list, factors, exact error).");

  m.def(
      "verify",
      [](const py::object& circuit, const PyMat2& u, const std::string& metric) {
        const json cj = json::parse(
            py::module_::import("json").attr("dumps")(circuit).cast<std::string>());
        const Circuit c = circuit_from_json_obj(cj);
        const VerifyMode mode = metric == "exact" ? VerifyMode::exact : VerifyMode::phase;
        return json_to_py(report_to_json(verify(c, to_mat2(u), mode)));
      },
      py::arg("circuit"), py::arg("u"), py::arg("metric") = "exact",
      "Check a circuit dict against controlled-U.");

  m.def(
      "evaluate",
      [](const py::object& circuit) {
        const json cj = json::parse(
            py::module_::import("json").attr("dumps")(circuit).cast<std::string>());
        return from_mat4(evaluate(circuit_from_json_obj(cj)));
      },
      py::arg("circuit"), "Operator of a circuit dict as a nested list.");

  m.def(
      "controlled",
      [](const PyMat2& u) { return from_mat4(controlled(to_mat2(u))); },
      py::arg("u"));

  m.def(
      "falsify",
      [](const PyMat2& u, int gates, int restarts, std::uint64_t seed,
         const std::string& metric, double threshold, int threads) {
        FalsifyOptions o;
        o.restarts = restarts;
        o.seed = seed;
        o.metric = metric == "exact" ? VerifyMode::exact : VerifyMode::phase;
        o.threshold = threshold;
        o.threads = threads;
        return json_to_py(report_to_json(falsify(to_mat2(u), gates, o)));
      },
      py::arg("u"), py::arg("gates"), py::arg("restarts") = 200, py::arg("seed") = 42,
      py::arg("metric") = "phase", py::arg("threshold") = 0.01, py::arg("threads") = 0,
      "Template search for realizations of controlled-U below the optimum.");

  m.def(
      "lemmas",
      [](int trials, std::uint64_t seed) {
        const auto ids = check_identities(100, seed);
        const auto l1 = lemma1_suite(trials, seed);
        json rep{{"identities", report_to_json(ids)},
                 {"lemma1", report_to_json(l1)},
                 {"pass", ids.pass && l1.failures == 0}};
        return json_to_py(rep);
      },
      py::arg("trials") = 10000, py::arg("seed") = 42,
      "Entanglement criterion and circuit identity checks.");

  m.def(
      "sample",
      [](const std::string& tag, std::uint64_t seed) {
        return from_mat2(sample(gate_class_from_string(tag), seed));
      },
      py::arg("tag"), py::arg("seed"),
      "Random unitary classifying exactly into the given class.");

  m.def(
      "named",
      [](const std::string& name) { return from_mat2(named_matrix(name)); },
      py::arg("name"), "Named constant: I, X, Z, H, S or T.");

  m.def(
      "zyz",
      [](const PyMat2& u) {
        const ZyzAngles z = zyz(to_mat2(u));
        return py::make_tuple(z.alpha, z.beta, z.gamma, z.delta);
      },
      py::arg("u"), "Euler angles (alpha, beta, gamma, delta).");

  m.def(
      "to_qasm3",
      [](const py::object& circuit) {
        const json cj = json::parse(
            py::module_::import("json").attr("dumps")(circuit).cast<std::string>());
        return to_qasm3(circuit_from_json_obj(cj));
      },
      py::arg("circuit"), "OpenQASM 3 program for a circuit dict.");

  m.def(
      "render_ascii",
      [](const py::object& circuit) {
        const json cj = json::parse(
            py::module_::import("json").attr("dumps")(circuit).cast<std::string>());
        return render_ascii(circuit_from_json_obj(cj));
      },
      py::arg("circuit"), "Two-row wire diagram for a circuit dict.");
}
