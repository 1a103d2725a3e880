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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cugates/mat.hpp"
#include "cugates/verify.hpp"

namespace cugates {

/// Circuit skeleton: CNOT orientations plus, for each of the c+1 segments
/// between/around the CNOTs, which wires carry a parameterized single-qubit
/// gate. At most one slot per wire per segment (adjacent gates fuse).
struct Template {
  std::vector<int> cnot_targets;           // target wire per CNOT (0 or 1)
  std::vector<std::array<bool, 2>> slots;  // [segment][wire]

  int cnot_count() const { return static_cast<int>(cnot_targets.size()); }
  int slot_count() const;
  int gate_count() const { return cnot_count() + slot_count(); }
};

/// Every template with total gate count <= k, 0 <= k <= 7. The list size is
/// sum_c 2^c * sum_{s<=k-c} C(2(c+1), s).
std::vector<Template> enumerate_templates(int k);

/// Canonical 64-bit encoding of a template (budget-independent), used to
/// derive its optimization seed.
std::uint64_t template_key(const Template& t);

struct OptimizeResult {
  double residual;
  std::vector<double> params;  // 4 angles per slot, segment-major, wire 0 first
  int restarts_used;
  long long evals;
};

struct OptimizeOptions {
  int restarts = 200;
  std::uint64_t seed = 42;
  VerifyMode metric = VerifyMode::phase;
  double stop_below = 1e-9;   // stop restarting once the best is this small
  int max_evals = 20000;      // per restart
  double diameter_tol = 1e-9; // simplex convergence
};

/// Multi-start simplex descent of the matching residual over the template's
/// slot angles. Each slot is e^{i a} Rz(b) Ry(g) Rz(d); starts are uniform in
/// [-pi, pi]^4 per slot. Deterministic for a fixed seed.
OptimizeResult optimize_template(const Template& t, const Mat4& target,
                                 const OptimizeOptions& opts);

struct TemplateResult {
  Template tmpl;
  double residual;
  std::vector<double> params;
  int restarts_used;
};

struct FalsifyReport {
  Mat2 target;
  int k;
  VerifyMode metric;
  std::uint64_t seed;
  int restarts;
  double threshold;  // "no realization" floor, reported alongside the data
  double found_tol;  // residual treated as a converged realization
  std::vector<TemplateResult> templates;
  double min_residual;
  int best_template;
  std::string verdict;  // "realization found" | "no realization found" | "inconclusive"
};

struct FalsifyOptions {
  int restarts = 200;
  std::uint64_t seed = 42;
  VerifyMode metric = VerifyMode::phase;
  double threshold = 0.01;
  double found_tol = 1e-6;
  double stop_below = 1e-9;
  int threads = 0;  // 0: hardware concurrency
};

/// Sweep every template with at most k gates against controlled(u). Template
/// optimizations run in parallel with per-template seeds derived from
/// (seed, template index); the report is deterministic for fixed inputs.
FalsifyReport falsify(const Mat2& u, int k, const FalsifyOptions& opts = {});

}  // namespace cugates
