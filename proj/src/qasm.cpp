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

#include <cstdio>
#include <string>

#include "cugates/circuit.hpp"
#include "cugates/synth.hpp"

namespace cugates {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_qasm3(const Circuit& c) {
  // U(theta, phi, lambda) = e^{i(phi+lambda)/2} Rz(phi) Ry(theta) Rz(lambda),
  // so a gate with ZYZ angles (a, b, g, d) is e^{i(a-(b+d)/2)} U(g, b, d).
  // The per-gate phases commute with everything and fold into one gphase.
  double total_phase = 0.0;
  std::string body;
  for (const auto& g : c.gates) {
    if (const auto* s = std::get_if<SingleGate>(&g)) {
      const ZyzAngles z = zyz(s->matrix);
      total_phase += z.alpha - (z.beta + z.delta) / 2;
      body += "U(" + num(z.gamma) + ", " + num(z.beta) + ", " + num(z.delta) +
              ") q[" + std::to_string(s->wire) + "];\n";
    } else {
      const auto& x = std::get<CnotGate>(g);
      body += "cx q[" + std::to_string(x.control) + "], q[" +
              std::to_string(x.target) + "];\n";
    }
  }

  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\nqubit[2] q;\n";
  if (total_phase != 0.0) out += "gphase(" + num(total_phase) + ");\n";
  return out + body;
}

}  // namespace cugates
