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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cugates/mat.hpp"

namespace cugates {

/// Single-qubit gate on one of the two wires. Wire 1 is the most significant
/// (control) qubit, drawn as the top wire.
struct SingleGate {
  int wire = 0;
  Mat2 matrix;
  std::string label = "custom";
};

/// Controlled-not gate; control and target must differ.
struct CnotGate {
  int control = 1;
  int target = 0;
};

using Gate = std::variant<SingleGate, CnotGate>;

/// Ordered two-wire gate list; list order is time order (leftmost acts
/// first), so the operator is the product of the embeddings composed
/// right-to-left.
struct Circuit {
  std::vector<Gate> gates;

  std::size_t gate_count() const { return gates.size(); }

  Circuit& add_single(int wire, const Mat2& m, std::string label = "custom");
  Circuit& add_cnot(int control, int target);
};

/// Left-multiply m by the embedding of a single-qubit gate on `wire`.
void apply_single(Mat4& m, const Mat2& g, int wire);
/// Left-multiply m by the CNOT with the given target wire (rows swap).
void apply_cnot(Mat4& m, int control, int target);

/// Operator of the circuit; the empty circuit evaluates to the identity.
Mat4 evaluate(const Circuit& c);

/// Two-row wire diagram, gates in time order, control dot and crossed-circle
/// target for CNOTs.
std::string render_ascii(const Circuit& c);

/// Parse error for circuit/matrix JSON; gate_index is -1 when the error is
/// not tied to a particular gate.
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg, int gate_index = -1)
      : std::invalid_argument(msg), gate_index(gate_index) {}
  int gate_index;
};

std::string to_json(const Circuit& c, bool pretty = false);
Circuit circuit_from_json(const std::string& text);

/// OpenQASM 3 program: one generic 4-parameter unitary call per single-qubit
/// gate (ZYZ angles plus a folded global-phase statement) and one `cx` per
/// CNOT. Re-simulating the emitted parameters reproduces evaluate(c).
std::string to_qasm3(const Circuit& c);

}  // namespace cugates
