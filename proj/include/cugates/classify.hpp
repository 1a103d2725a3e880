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
#include <map>
#include <string>

#include "cugates/mat.hpp"
#include "cugates/rng.hpp"

namespace cugates {

/// The eleven classes of 2x2 unitaries, ordered as the dispatch table that
/// assigns each its minimal controlled-U gate count m.
enum class GateClass { a, b, c, d, e, f, g, h, i, j, generic };

/// Minimal elementary-gate count for a controlled-U with U in the class:
/// {a:0, b:1, c:1, d:2, e:3, f:3, g:4, h:4, i:5, j:5, generic:6}.
int m_of(GateClass t);

std::string to_string(GateClass t);
GateClass gate_class_from_string(const std::string& s);

inline constexpr double kDefaultEps = 1e-9;

struct ClassificationReport {
  GateClass tag;
  int m;
  cxd trace;     // tr U
  cxd trace_ux;  // tr(UX)
  cxd det;       // det U
  // Distances to the decision surfaces the classifier tests against eps.
  std::map<std::string, double> margins;
  double eps;
  // Some margin fell in (eps, 100*eps): the decision stands by precedence
  // but sits close to a class boundary.
  bool near_boundary;
};

/// Decide the class of u. The branch precedence is: trace zero, then
/// trace(UX) zero, then determinant one, else generic; special forms are
/// peeled off inside the first two branches. Throws std::domain_error on
/// non-unitary input, std::invalid_argument on eps outside (0, 1e-3].
ClassificationReport classify(const Mat2& u, double eps = kDefaultEps);

/// det u != 1, tr u != 0 and tr(uX) != 0, all by margin > eps.
bool is_generic(const Mat2& u, double eps = kDefaultEps);

/// Random class member: unitary u with classify(u).tag == tag, comfortably
/// inside the class (rejection sampling; throws std::runtime_error if the
/// attempt budget is exhausted).
Mat2 sample(GateClass tag, std::uint64_t seed);
Mat2 sample(GateClass tag, Rng& rng);

}  // namespace cugates
