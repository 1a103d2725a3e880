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

#include <optional>

#include "cugates/circuit.hpp"
#include "cugates/classify.hpp"
#include "cugates/mat.hpp"

namespace cugates {

/// Euler angles with u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta),
/// gamma in [0, 2pi], alpha/beta/delta in [-pi, pi). When gamma is 0 or pi
/// only a combination of beta and delta is determined; delta is fixed to 0.
struct ZyzAngles {
  double alpha, beta, gamma, delta;
};

ZyzAngles zyz(const Mat2& u);

/// Reconstruction e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
Mat2 from_zyz(const ZyzAngles& z);

/// For traceless u: u = e^{i phi} P X P^dagger with e^{i phi} the canonical
/// first eigenvalue. When det u = -1 the phi = 0 branch is forced so the
/// C1 phase gate drops out. Throws std::domain_error if |tr u| > 1e-9.
struct PhaseConjugation {
  double phi;
  Mat2 p;
};
PhaseConjugation decompose_traceless(const Mat2& u);

/// For u with tr(uX) = 0: u = e^{i phi} P X P^dagger X, computed as
/// decompose_traceless(u X). det u = 1 forces the phi = 0 branch.
PhaseConjugation decompose_xtraceless(const Mat2& u);

/// For det v = 1: A, B, C with C B A = I and C X B X A = v.
struct AbcFactors {
  Mat2 a, b, c;
};
AbcFactors decompose_abc(const Mat2& v);

/// Synthesis failure (reconstruction residual above 1e-8).
struct SynthesisError : std::runtime_error {
  SynthesisError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};

struct SynthesisResult {
  Circuit circuit;
  GateClass tag;
  int m;
  double exact_error;  // max-norm of evaluate(circuit) - controlled(u)
  // Decomposition data, filled per class.
  std::optional<double> phi;
  std::optional<Mat2> p, a, b, c, e;
};

/// Optimal circuit for controlled-u: gate_count equals m(u) and the circuit
/// reproduces controlled(u) exactly (no global-phase slack).
SynthesisResult synth(const Mat2& u);

}  // namespace cugates
