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

#include "cugates/json_io.hpp"

#include "cugates/classify.hpp"
#include "cugates/falsify.hpp"
#include "cugates/synth.hpp"
#include "cugates/verify.hpp"

namespace cugates {

json complex_to_json(cxd z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entry must be a [re, im] pair");
  return cxd{j[0].get<double>(), j[1].get<double>()};
}

json mat2_to_array(const Mat2& m) {
  return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                      json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Mat2 mat2_from_array(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw ParseError("matrix must be a 2x2 array of [re, im] pairs");
  Mat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  require_finite(m, "matrix");
  return m;
}

Mat2 named_matrix(const std::string& name) {
  if (name == "I") return identity2();
  if (name == "X") return pauli_x();
  if (name == "Z") return pauli_z();
  if (name == "H") return hadamard();
  if (name == "S") return phase_s();
  if (name == "T") return phase_t();
  throw ParseError("unknown matrix name '" + name + "'");
}

json mat2_to_spec(const Mat2& m) { return json{{"u", mat2_to_array(m)}}; }

Mat2 mat2_from_spec(const json& j) {
  if (!j.is_object()) throw ParseError("matrix spec must be a JSON object");
  if (j.contains("u")) return mat2_from_array(j.at("u"));
  if (j.contains("name")) return named_matrix(j.at("name").get<std::string>());
  if (j.contains("rz")) return rz(j.at("rz").get<double>());
  if (j.contains("ry")) return ry(j.at("ry").get<double>());
  if (j.contains("phase")) return phase_gate(j.at("phase").get<double>());
  throw ParseError("matrix spec needs one of: u, name, rz, ry, phase");
}

json circuit_to_json_obj(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    if (const auto* s = std::get_if<SingleGate>(&g)) {
      gates.push_back(json{{"kind", "single"},
                           {"wire", s->wire},
                           {"label", s->label},
                           {"matrix", mat2_to_array(s->matrix)}});
    } else {
      const auto& x = std::get<CnotGate>(g);
      gates.push_back(json{{"kind", "cnot"}, {"control", x.control}, {"target", x.target}});
    }
  }
  return json{{"qubits", 2}, {"gates", gates}};
}

Circuit circuit_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("qubits") || !j.contains("gates"))
    throw ParseError("circuit needs 'qubits' and 'gates'");
  if (j.at("qubits") != 2) throw ParseError("only 2-qubit circuits are supported");
  if (!j.at("gates").is_array()) throw ParseError("'gates' must be an array");

  Circuit c;
  int idx = 0;
  for (const auto& g : j.at("gates")) {
    const std::string at = "gate " + std::to_string(idx);
    if (!g.is_object() || !g.contains("kind"))
      throw ParseError(at + ": missing 'kind'", idx);
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "single") {
      const int wire = g.value("wire", -1);
      if (wire != 0 && wire != 1) throw ParseError(at + ": bad wire index", idx);
      if (!g.contains("matrix")) throw ParseError(at + ": missing matrix", idx);
      Mat2 m;
      try {
        m = mat2_from_array(g.at("matrix"));
      } catch (const std::invalid_argument& e) {
        throw ParseError(at + ": " + e.what(), idx);
      }
      if (!is_unitary(m, kInputUnitaryTol))
        throw ParseError(at + ": non-unitary gate", idx);
      c.add_single(wire, m, g.value("label", "custom"));
    } else if (kind == "cnot") {
      const int control = g.value("control", -1);
      const int target = g.value("target", -1);
      if (control < 0 || control > 1 || target < 0 || target > 1)
        throw ParseError(at + ": bad wire index", idx);
      if (control == target) throw ParseError(at + ": invalid cnot", idx);
      c.gates.push_back(CnotGate{control, target});
    } else {
      throw ParseError(at + ": unknown gate kind '" + kind + "'", idx);
    }
    ++idx;
  }
  return c;
}

std::string to_json(const Circuit& c, bool pretty) {
  return circuit_to_json_obj(c).dump(pretty ? 2 : -1);
}

Circuit circuit_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return circuit_from_json_obj(j);
}

json report_to_json(const ClassificationReport& r) {
  return json{{"tag", to_string(r.tag)},
              {"m", r.m},
              {"trace", complex_to_json(r.trace)},
              {"trace_ux", complex_to_json(r.trace_ux)},
              {"det", complex_to_json(r.det)},
              {"margins", r.margins},
              {"eps", r.eps},
              {"near_boundary", r.near_boundary}};
}

json report_to_json(const SynthesisResult& r) {
  json factors = json::object();
  if (r.phi) factors["phi"] = *r.phi;
  if (r.p) factors["P"] = mat2_to_spec(*r.p);
  if (r.a) factors["A"] = mat2_to_spec(*r.a);
  if (r.b) factors["B"] = mat2_to_spec(*r.b);
  if (r.c) factors["C"] = mat2_to_spec(*r.c);
  if (r.e) factors["E"] = mat2_to_spec(*r.e);
  return json{{"class", to_string(r.tag)},
              {"m", r.m},
              {"exact_error", r.exact_error},
              {"circuit", circuit_to_json_obj(r.circuit)},
              {"factors", factors}};
}

json report_to_json(const VerifyReport& r) {
  json j{{"mode", r.mode == VerifyMode::exact ? "exact" : "phase"},
         {"distance", r.distance},
         {"pass", r.pass}};
  if (r.mode == VerifyMode::phase) j["phase_recovered"] = r.phase_recovered;
  return j;
}

json report_to_json(const FalsifyReport& r) {
  json templates = json::array();
  for (const auto& t : r.templates) {
    json slots = json::array();
    for (const auto& s : t.tmpl.slots) {
      json wires = json::array();
      if (s[0]) wires.push_back(0);
      if (s[1]) wires.push_back(1);
      slots.push_back(wires);
    }
    templates.push_back(json{{"cnots", t.tmpl.cnot_targets},
                             {"slots", slots},
                             {"residual", t.residual},
                             {"params", t.params},
                             {"restarts_used", t.restarts_used}});
  }
  return json{{"target", mat2_to_spec(r.target)},
              {"k", r.k},
              {"metric", r.metric == VerifyMode::phase ? "phase" : "exact"},
              {"seed", r.seed},
              {"restarts", r.restarts},
              {"threshold", r.threshold},
              {"found_tol", r.found_tol},
              {"templates", templates},
              {"min_residual", r.min_residual},
              {"best_template", r.best_template},
              {"verdict", r.verdict}};
}

json report_to_json(const IdentitiesReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"trials", c.trials},
                          {"failures", c.failures},
                          {"max_residual", c.max_residual}});
  return json{{"checks", checks}, {"pass", r.pass}};
}

json report_to_json(const Lemma1Report& r) {
  return json{{"name", "lemma1_iff"},
              {"trials", r.trials},
              {"failures", r.failures},
              {"redraws", r.redraws},
              {"pass", r.failures == 0}};
}

}  // namespace cugates
