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

#include "cugates/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace cugates {

int m_of(GateClass t) {
  switch (t) {
    case GateClass::a: return 0;
    case GateClass::b: return 1;
    case GateClass::c: return 1;
    case GateClass::d: return 2;
    case GateClass::e: return 3;
    case GateClass::f: return 3;
    case GateClass::g: return 4;
    case GateClass::h: return 4;
    case GateClass::i: return 5;
    case GateClass::j: return 5;
    case GateClass::generic: return 6;
  }
  return -1;
}

std::string to_string(GateClass t) {
  switch (t) {
    case GateClass::a: return "a";
    case GateClass::b: return "b";
    case GateClass::c: return "c";
    case GateClass::d: return "d";
    case GateClass::e: return "e";
    case GateClass::f: return "f";
    case GateClass::g: return "g";
    case GateClass::h: return "h";
    case GateClass::i: return "i";
    case GateClass::j: return "j";
    case GateClass::generic: return "generic";
  }
  return "?";
}

GateClass gate_class_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(GateClass::generic); ++i) {
    const auto t = static_cast<GateClass>(i);
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown gate class '" + s + "'");
}

ClassificationReport classify(const Mat2& u, double eps) {
  if (!(eps > 0.0 && eps <= 1e-3))
    throw std::invalid_argument("classify: eps must lie in (0, 1e-3]");
  require_unitary(u, kInputUnitaryTol, "classify");

  ClassificationReport r;
  r.trace = u.trace();
  r.trace_ux = u(0, 1) + u(1, 0);  // tr(UX)
  r.det = u.det();
  r.eps = eps;

  const double m_tr = std::abs(r.trace);
  const double m_trux = std::abs(r.trace_ux);
  const double m_det1 = std::abs(r.det - cxd{1, 0});
  const double m_detm1 = std::abs(r.det + cxd{1, 0});
  // Distance to the antidiagonal-with-equal-entries manifold (e^{ip}X), the
  // diagonal manifold, and the multiple-of-identity manifold.
  const double m_prop_x =
      std::max({std::abs(u(0, 0)), std::abs(u(1, 1)), std::abs(u(0, 1) - u(1, 0))});
  const double m_diag = std::max(std::abs(u(0, 1)), std::abs(u(1, 0)));
  const double m_prop_i =
      std::max({std::abs(u(0, 1)), std::abs(u(1, 0)), std::abs(u(0, 0) - u(1, 1))});
  const double m_is_x = max_abs_diff(u, pauli_x());
  const double m_is_i = max_abs_diff(u, identity2());

  r.margins = {{"tr", m_tr},         {"tr_ux", m_trux},   {"det_minus_1", m_det1},
               {"det_plus_1", m_detm1}, {"prop_x", m_prop_x}, {"diag", m_diag},
               {"prop_i", m_prop_i},  {"dist_x", m_is_x},  {"dist_i", m_is_i}};

  if (m_tr <= eps) {
    if (m_prop_x <= eps) {
      r.tag = m_is_x <= eps ? GateClass::c : GateClass::d;
    } else if (m_diag <= eps) {
      r.tag = GateClass::e;
    } else if (m_detm1 <= eps) {
      r.tag = GateClass::f;
    } else {
      r.tag = GateClass::g;
    }
  } else if (m_trux <= eps) {
    if (m_prop_i <= eps) {
      r.tag = m_is_i <= eps ? GateClass::a : GateClass::b;
    } else if (m_det1 <= eps) {
      r.tag = GateClass::h;
    } else {
      r.tag = GateClass::i;
    }
  } else if (m_det1 <= eps) {
    r.tag = GateClass::j;
  } else {
    r.tag = GateClass::generic;
  }

  r.m = m_of(r.tag);
  r.near_boundary = false;
  for (const auto& [name, v] : r.margins) {
    if (v > eps && v < 100 * eps) r.near_boundary = true;
  }
  return r;
}

bool is_generic(const Mat2& u, double eps) {
  require_unitary(u, kInputUnitaryTol, "is_generic");
  const cxd tr = u.trace();
  const cxd trux = u(0, 1) + u(1, 0);
  const cxd dt = u.det();
  return std::abs(dt - cxd{1, 0}) > eps && std::abs(tr) > eps && std::abs(trux) > eps;
}

namespace {

// Coarse acceptance margin for the sampler: accepted draws classify the same
// at eps and at this distance from every boundary.
constexpr double kSampleMargin = 1e-3;

// Generic draws additionally keep all three genericity margins at least this
// large. The no-realization floor of a budget-(m-1) search scales with the
// squared margins, so shallow-generic draws would sink below the reported
// 0.01 threshold.
constexpr double kGenericDepth = 0.8;

bool well_inside(const Mat2& u, GateClass tag) {
  if (classify(u, kDefaultEps).tag != tag || classify(u, kSampleMargin).tag != tag)
    return false;
  if (tag == GateClass::generic) {
    const cxd tr = u.trace();
    const cxd trux = u(0, 1) + u(1, 0);
    const cxd dt = u.det();
    return std::abs(tr) >= kGenericDepth && std::abs(trux) >= kGenericDepth &&
           std::abs(dt - cxd{1, 0}) >= kGenericDepth;
  }
  return true;
}

Mat2 candidate(GateClass tag, Rng& rng) {
  switch (tag) {
    case GateClass::a:
      return identity2();
    case GateClass::b:
      return std::polar(1.0, rng.uniform(2 * kSampleMargin, 2 * kPi - 2 * kSampleMargin)) *
             identity2();
    case GateClass::c:
      return pauli_x();
    case GateClass::d:
      return std::polar(1.0, rng.uniform(2 * kSampleMargin, 2 * kPi - 2 * kSampleMargin)) *
             pauli_x();
    case GateClass::e:
      return std::polar(1.0, rng.uniform(0.0, 2 * kPi)) * pauli_z();
    case GateClass::f: {
      const Mat2 p = haar_unitary2(rng);
      return p * pauli_x() * p.dagger();
    }
    case GateClass::g: {
      const Mat2 p = haar_unitary2(rng);
      return std::polar(1.0, rng.uniform(0.0, 2 * kPi)) * (p * pauli_x() * p.dagger());
    }
    case GateClass::h: {
      const Mat2 p = haar_unitary2(rng);
      return p * pauli_x() * p.dagger() * pauli_x();
    }
    case GateClass::i: {
      const Mat2 p = haar_unitary2(rng);
      return std::polar(1.0, rng.uniform(0.0, 2 * kPi)) *
             (p * pauli_x() * p.dagger() * pauli_x());
    }
    case GateClass::j: {
      const Mat2 u = haar_unitary2(rng);
      // Rescale to determinant one (principal square root branch).
      return std::polar(1.0, -0.5 * std::arg(u.det())) * u;
    }
    case GateClass::generic:
      return haar_unitary2(rng);
  }
  return identity2();
}

}  // namespace

Mat2 sample(GateClass tag, Rng& rng) {
  constexpr int kMaxAttempts = 10000;
  for (int i = 0; i < kMaxAttempts; ++i) {
    const Mat2 u = candidate(tag, rng);
    if (well_inside(u, tag)) return u;
  }
  throw std::runtime_error("sample: rejection budget exhausted for class " + to_string(tag));
}

Mat2 sample(GateClass tag, std::uint64_t seed) {
  Rng rng(seed);
  return sample(tag, rng);
}

}  // namespace cugates
