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

#include "cugates/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace cugates {

Circuit& Circuit::add_single(int wire, const Mat2& m, std::string label) {
  gates.push_back(SingleGate{wire, m, std::move(label)});
  return *this;
}

Circuit& Circuit::add_cnot(int control, int target) {
  if (control == target) throw std::invalid_argument("invalid cnot");
  gates.push_back(CnotGate{control, target});
  return *this;
}

void apply_single(Mat4& m, const Mat2& g, int wire) {
  // Row pairs coupled by the wire's bit: wire 1 -> (0,2),(1,3); wire 0 ->
  // (0,1),(2,3).
  const int bit = wire == 1 ? 2 : 1;
  for (int base : {0, 3 - bit}) {
    const int r0 = base, r1 = base | bit;
    for (int c = 0; c < 4; ++c) {
      const cxd a = m(r0, c), b = m(r1, c);
      m(r0, c) = g.e[0] * a + g.e[1] * b;
      m(r1, c) = g.e[2] * a + g.e[3] * b;
    }
  }
}

void apply_cnot(Mat4& m, int /*control*/, int target) {
  // Cnot(1->0) permutes |10><->|11| (rows 2,3); Cnot(0->1) permutes
  // |01><->|11| (rows 1,3).
  const int r0 = target == 0 ? 2 : 1;
  for (int c = 0; c < 4; ++c) std::swap(m(r0, c), m(3, c));
}

Mat4 evaluate(const Circuit& c) {
  Mat4 m = identity4();
  for (const auto& g : c.gates) {
    if (const auto* s = std::get_if<SingleGate>(&g)) {
      apply_single(m, s->matrix, s->wire);
    } else {
      const auto& x = std::get<CnotGate>(g);
      apply_cnot(m, x.control, x.target);
    }
  }
  return m;
}

namespace {

// Display columns of a UTF-8 string: count code points (the glyphs used
// here are all single-column).
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

std::string render_ascii(const Circuit& c) {
  std::string top = "q1: --", bot = "q0: --";
  for (const auto& g : c.gates) {
    std::string t, b;
    if (const auto* s = std::get_if<SingleGate>(&g)) {
      const std::string box = "[" + s->label + "]";
      (s->wire == 1 ? t : b) = box;
    } else {
      const auto& x = std::get<CnotGate>(g);
      t = x.control == 1 ? "●" : "⊕";
      b = x.control == 1 ? "⊕" : "●";
    }
    const std::size_t wt = display_width(t), wb = display_width(b);
    const std::size_t w = std::max(wt, wb);
    top += t + std::string(w - wt, '-') + "--";
    bot += b + std::string(w - wb, '-') + "--";
  }
  return top + "\n" + bot + "\n";
}

}  // namespace cugates
