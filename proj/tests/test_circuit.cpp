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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "cugates/circuit.hpp"
#include "cugates/json_io.hpp"
#include "cugates/rng.hpp"
#include "cugates/synth.hpp"

using namespace cugates;

namespace {

Circuit random_circuit(Rng& rng, int gates) {
  Circuit c;
  for (int i = 0; i < gates; ++i) {
    if (rng.uniform(0, 1) < 0.4) {
      const int control = rng.uniform(0, 1) < 0.5 ? 0 : 1;
      c.add_cnot(control, 1 - control);
    } else {
      c.add_single(rng.uniform(0, 1) < 0.5 ? 0 : 1, haar_unitary2(rng));
    }
  }
  return c;
}

// Minimal QASM3 re-simulator for the emitter's output: understands the
// header, one gphase statement, U(...) calls and cx statements.
Mat4 resimulate_qasm(const std::string& text) {
  Mat4 m = identity4();
  std::istringstream in(text);
  std::string line;
  double gphase = 0.0;
  while (std::getline(in, line)) {
    double theta, phi, lam;
    int w, ctl, tgt;
    if (std::sscanf(line.c_str(), "U(%lf, %lf, %lf) q[%d];", &theta, &phi, &lam, &w) == 4) {
      // U(theta, phi, lambda) = e^{i(phi+lambda)/2} Rz(phi) Ry(theta) Rz(lambda)
      const Mat2 g = std::polar(1.0, (phi + lam) / 2) * (rz(phi) * ry(theta) * rz(lam));
      apply_single(m, g, w);
    } else if (std::sscanf(line.c_str(), "cx q[%d], q[%d];", &ctl, &tgt) == 2) {
      apply_cnot(m, ctl, tgt);
    } else if (std::sscanf(line.c_str(), "gphase(%lf);", &theta) == 1) {
      gphase += theta;
    }
  }
  return m * std::polar(1.0, gphase);
}

int count_gate_statements(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (line.rfind("U(", 0) == 0 || line.rfind("cx ", 0) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("evaluate basics") {
  CHECK(max_abs_diff(evaluate(Circuit{}), identity4()) == 0.0);

  Circuit cnot;
  cnot.add_cnot(1, 0);
  Mat4 want;
  want(0, 0) = 1;
  want(1, 1) = 1;
  want(2, 3) = 1;
  want(3, 2) = 1;
  CHECK(max_abs_diff(evaluate(cnot), want) == 0.0);
  CHECK(cnot.gate_count() == 1);
  CHECK(Circuit{}.gate_count() == 0);

  // Two singles on one wire compose right-to-left: I (x) (B A).
  Rng rng(5);
  const Mat2 a = haar_unitary2(rng), b = haar_unitary2(rng);
  Circuit c;
  c.add_single(0, a, "A");
  c.add_single(0, b, "B");
  CHECK(max_abs_diff(evaluate(c), kron(identity2(), b * a)) <= 1e-15);
}

TEST_CASE("evaluate is multiplicative over concatenation") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    Circuit c1 = random_circuit(rng, 3), c2 = random_circuit(rng, 4);
    Circuit cat = c1;
    cat.gates.insert(cat.gates.end(), c2.gates.begin(), c2.gates.end());
    CHECK(max_abs_diff(evaluate(cat), evaluate(c2) * evaluate(c1)) <= 1e-12);
  }
}

TEST_CASE("control/target flip identity") {
  Circuit lhs;
  lhs.add_single(1, hadamard(), "H");
  lhs.add_single(0, hadamard(), "H");
  lhs.add_cnot(1, 0);
  lhs.add_single(1, hadamard(), "H");
  lhs.add_single(0, hadamard(), "H");
  Circuit rhs;
  rhs.add_cnot(0, 1);
  CHECK(max_abs_diff(evaluate(lhs), evaluate(rhs)) <= 1e-12);
}

TEST_CASE("X-absorption identity for antidiagonal gates") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const Mat2 a1{0, std::polar(1.0, rng.uniform(0.0, 2 * kPi)),
                  std::polar(1.0, rng.uniform(0.0, 2 * kPi)), 0};
    Circuit lhs;
    lhs.add_single(1, a1);
    lhs.add_cnot(1, 0);
    Circuit rhs;
    rhs.add_single(1, pauli_x() * a1);
    rhs.add_cnot(1, 0);
    rhs.add_single(1, pauli_x());
    rhs.add_single(0, pauli_x());
    CHECK(max_abs_diff(evaluate(lhs), evaluate(rhs)) <= 1e-12);
  }
}

TEST_CASE("diagonal gates commute through flipped cnot pairs") {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Mat2 cm{std::polar(1.0, rng.uniform(0.0, 2 * kPi)), 0, 0,
                  std::polar(1.0, rng.uniform(0.0, 2 * kPi))};
    Circuit lhs;
    lhs.add_cnot(0, 1);
    lhs.add_single(1, cm);
    lhs.add_cnot(0, 1);
    Circuit rhs;
    rhs.add_cnot(1, 0);
    rhs.add_single(0, cm);
    rhs.add_cnot(1, 0);
    CHECK(max_abs_diff(evaluate(lhs), evaluate(rhs)) <= 1e-12);
  }
}

TEST_CASE("json round trip") {
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    const Circuit c = random_circuit(rng, 6);
    const std::string text = to_json(c);
    const Circuit back = circuit_from_json(text);

    // Identical byte payload and bit-identical operator.
    CHECK(to_json(back) == text);
    const Mat4 m1 = evaluate(c), m2 = evaluate(back);
    CHECK(std::memcmp(m1.e.data(), m2.e.data(), sizeof m1.e) == 0);
  }
}

TEST_CASE("json errors name the offending gate") {
  // control == target
  const std::string bad_cnot =
      R"({"qubits":2,"gates":[{"kind":"cnot","control":0,"target":0}]})";
  CHECK_THROWS_WITH_AS(circuit_from_json(bad_cnot), "gate 0: invalid cnot", ParseError);

  // Perturbed Hadamard fails the unitarity gate.
  Mat2 h = hadamard();
  h(0, 0) += 1e-4;
  json j{{"qubits", 2},
         {"gates", json::array({json{{"kind", "single"},
                                     {"wire", 1},
                                     {"label", "H"},
                                     {"matrix", mat2_to_array(h)}}})}};
  try {
    circuit_from_json_obj(j);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-unitary gate") != std::string::npos);
    CHECK(e.gate_index == 0);
  }

  CHECK_THROWS_AS(circuit_from_json("{not json"), ParseError);
  CHECK_THROWS_AS(circuit_from_json(R"({"qubits":3,"gates":[]})"), ParseError);
  const std::string bad_wire =
      R"({"qubits":2,"gates":[{"kind":"single","wire":2,"label":"X","matrix":[[[0,0],[1,0]],[[1,0],[0,0]]]}]})";
  CHECK_THROWS_AS(circuit_from_json(bad_wire), ParseError);
}

TEST_CASE("qasm3 emission") {
  Circuit cnot;
  cnot.add_cnot(1, 0);
  const std::string q = to_qasm3(cnot);
  CHECK(q.find("cx q[1], q[0];") != std::string::npos);
  CHECK(count_gate_statements(q) == 1);

  // diag(1, e^{i pi/4}) comes out as a pure phase-type U call.
  Circuit t;
  t.add_single(1, phase_gate(kPi / 4), "T");
  const std::string qt = to_qasm3(t);
  CHECK(qt.find("U(0, ") != std::string::npos);
  CHECK(max_abs_diff(resimulate_qasm(qt), evaluate(t)) <= 1e-8);

  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const Circuit c = random_circuit(rng, 6);
    CHECK(max_abs_diff(resimulate_qasm(to_qasm3(c)), evaluate(c)) <= 1e-8);
  }
}

TEST_CASE("ascii rendering") {
  Circuit c;
  c.add_cnot(1, 0);
  const std::string art = render_ascii(c);
  CHECK(art.find("●") != std::string::npos);  // control dot on top row
  CHECK(art.find("⊕") != std::string::npos);
  CHECK(art.find("●") < art.find("\n"));

  const std::string empty = render_ascii(Circuit{});
  CHECK(empty == "q1: --\nq0: --\n");

  Circuit c1;
  c1.add_single(1, phase_gate(0.3), "E");
  c1.add_single(0, hadamard().dagger(), "P†");
  c1.add_cnot(1, 0);
  c1.add_single(0, hadamard(), "P");
  const std::string a1 = render_ascii(c1);
  CHECK(a1.find("[E]") != std::string::npos);
  CHECK(a1.find("[P†]") != std::string::npos);
  CHECK(a1.find("[P]") != std::string::npos);
}
