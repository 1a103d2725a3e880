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

#include <cstdint>
#include <string>
#include <vector>

#include "cugates/circuit.hpp"
#include "cugates/mat.hpp"

namespace cugates {

/// |0><0| (x) I + |1><1| (x) u in the |q1 q0> basis.
Mat4 controlled(const Mat2& u);

enum class VerifyMode { exact, phase };

struct VerifyReport {
  VerifyMode mode;
  double distance;
  bool pass;  // distance <= 1e-10 (exact) or <= 1e-12 (phase)
  double phase_recovered = 0.0;
};

inline constexpr double kExactVerifyTol = 1e-10;
inline constexpr double kPhaseVerifyTol = 1e-12;

VerifyReport verify(const Circuit& c, const Mat2& u, VerifyMode mode = VerifyMode::exact);

/// Schmidt-rank test: reshape the amplitudes into a 2x2 coefficient matrix
/// (rows = q1) and compare |det| against eps.
bool schmidt_entangled(const Vec4& state, double eps = 1e-9);

/// Entanglement criterion for controlled-u on psi (x) phi: the output is
/// entangled iff phi is not an eigenvector of u and both amplitudes of psi
/// are nonzero. Returns true when prediction and simulation agree.
bool check_lemma1(const Mat2& u, const Vec2& psi, const Vec2& phi);

struct CheckResult {
  std::string name;
  int trials;
  int failures;
  double max_residual;
};

struct IdentitiesReport {
  std::vector<CheckResult> checks;
  bool pass;  // every residual <= 1e-12
};

/// The fixed circuit identities — control/target flip by H conjugation,
/// X-absorption around a CNOT, diagonal commutation through flipped CNOTs —
/// plus the diag(1, lambda) eigenvector form, on randomized instances.
IdentitiesReport check_identities(int trials = 100, std::uint64_t seed = 42);

struct Lemma1Report {
  int trials;
  int failures;
  int redraws;  // boundary-zone hits that were re-drawn
};

/// Randomized iff-test of the entanglement criterion; draws within 1e-6 of
/// the eigenvector/basis-state boundary are re-drawn.
Lemma1Report lemma1_suite(int trials = 10000, std::uint64_t seed = 42);

}  // namespace cugates
