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

#include "cugates/mat.hpp"
#include "cugates/rng.hpp"

using namespace cugates;

namespace {

Mat4 cnot10_matrix() {
  // Permutation |10> <-> |11>, fixing |00>, |01>.
  Mat4 m;
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

}  // namespace

TEST_CASE("fixed constants") {
  CHECK(std::abs(pauli_x().trace()) == 0.0);
  CHECK(std::abs(hadamard().det() - cxd{-1, 0}) < 1e-15);
  // tr(H X) multiplied out by hand: (1 + 1)/sqrt(2).
  CHECK(std::abs((hadamard() * pauli_x()).trace() - cxd{std::sqrt(2.0), 0}) < 1e-15);

  CHECK(max_abs_diff(hadamard() * hadamard(), identity2()) <= 1e-12);
  CHECK(max_abs_diff(hadamard() * pauli_x() * hadamard(), pauli_z()) <= 1e-12);
  CHECK(max_abs_diff(pauli_x() * pauli_x(), identity2()) <= 1e-12);
  CHECK(max_abs_diff(pauli_z() * pauli_z(), identity2()) <= 1e-12);
}

TEST_CASE("algebra basics") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Mat2 a = haar_unitary2(rng);
    const Mat2 b = haar_unitary2(rng);
    CHECK(max_abs_diff(a.dagger().dagger(), a) == 0.0);
    CHECK(std::abs((a * b).det() - a.det() * b.det()) <= 1e-12);
    // Unitarity closure under products and adjoints.
    CHECK(is_unitary(a * b, 1e-12));
    CHECK(is_unitary(a.dagger(), 1e-12));
  }
}

TEST_CASE("non-finite input is rejected") {
  Mat2 bad = identity2();
  bad(0, 1) = cxd{std::nan(""), 0};
  CHECK_THROWS_AS(require_finite(bad, "test"), std::invalid_argument);
  CHECK_THROWS_AS(eig_unitary2(bad), std::invalid_argument);
}

TEST_CASE("kron under |q1 q0| ordering") {
  CHECK(max_abs_diff(kron(identity2(), identity2()), identity4()) == 0.0);

  // X on q1 flips |00> to |10>.
  const Vec4 v = kron(pauli_x(), identity2()) * Vec4{1, 0, 0, 0};
  CHECK(std::abs(v[2] - cxd{1, 0}) == 0.0);
  CHECK(std::abs(v[0]) + std::abs(v[1]) + std::abs(v[3]) == 0.0);

  // Z (x) X has blocks X and -X.
  const Mat4 zx = kron(pauli_z(), pauli_x());
  Mat4 want;
  want(0, 1) = 1;
  want(1, 0) = 1;
  want(2, 3) = -1;
  want(3, 2) = -1;
  CHECK(max_abs_diff(zx, want) == 0.0);

  // (a (x) b)(|x> (x) |y>) = a|x> (x) b|y>.
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mat2 a = haar_unitary2(rng), b = haar_unitary2(rng);
    const Vec2 x = random_state2(rng), y = random_state2(rng);
    const Vec4 lhs = kron(a, b) * kron(x, y);
    const Vec4 rhs = kron(a * x, b * y);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-12);
  }
}

TEST_CASE("eig_unitary2 named examples") {
  const Eig2 ez = eig_unitary2(pauli_z());
  CHECK(std::abs(ez.lambda0 - cxd{1, 0}) <= 1e-12);
  CHECK(std::abs(ez.lambda1 + cxd{1, 0}) <= 1e-12);
  CHECK(std::abs(ez.v0[0] - cxd{1, 0}) <= 1e-12);
  CHECK(std::abs(ez.v1[1] - cxd{1, 0}) <= 1e-12);

  const Eig2 ex = eig_unitary2(pauli_x());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ex.lambda0 - cxd{1, 0}) <= 1e-12);
  CHECK(std::abs(ex.v0[0] - cxd{s, 0}) <= 1e-12);
  CHECK(std::abs(ex.v0[1] - cxd{s, 0}) <= 1e-12);
  CHECK(std::abs(ex.v1[0] - cxd{s, 0}) <= 1e-12);
  CHECK(std::abs(ex.v1[1] + cxd{s, 0}) <= 1e-12);
}

TEST_CASE("eig_unitary2 Haar property") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 u = haar_unitary2(rng);
    const Eig2 e = eig_unitary2(u);

    CHECK(std::abs(std::abs(e.lambda0) - 1.0) <= 1e-10);
    CHECK(std::abs(std::abs(e.lambda1) - 1.0) <= 1e-10);
    CHECK(std::abs(inner(e.v0, e.v1)) <= 1e-10);

    for (const auto& [l, v] : {std::pair{e.lambda0, e.v0}, std::pair{e.lambda1, e.v1}}) {
      const Vec2 uv = u * v;
      CHECK(norm(Vec2{uv[0] - l * v[0], uv[1] - l * v[1]}) <= 1e-10);
    }

    // Reconstruction V diag(l0, l1) V^dagger.
    const Mat2 vmat{e.v0[0], e.v1[0], e.v0[1], e.v1[1]};
    const Mat2 d{e.lambda0, 0, 0, e.lambda1};
    CHECK(max_abs_diff(vmat * d * vmat.dagger(), u) <= 1e-9);
  }
}

TEST_CASE("eig_unitary2 rejects non-unitary input") {
  CHECK_THROWS_AS(eig_unitary2(Mat2{2, 0, 0, 1}), std::domain_error);
}

TEST_CASE("phase distance") {
  CHECK(phase_distance(identity4(), identity4()) == 0.0);
  CHECK(phase_distance(identity4(), identity4() * std::polar(1.0, kPi / 3)) <= 1e-15);
  // tr(CNOT) = 2, so the distance is 1 - 2/4.
  CHECK(std::abs(phase_distance(identity4(), cnot10_matrix()) - 0.5) <= 1e-15);
}

TEST_CASE("phase distance matches phase-aligned exact distance") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Mat4 t = kron(haar_unitary2(rng), haar_unitary2(rng));
    const double theta = rng.uniform(-kPi, kPi);
    const Mat4 m = t * std::polar(1.0, theta);
    CHECK(phase_distance(m, t) <= 1e-12);
    const double rec = recovered_phase(m, t);
    CHECK(exact_distance(m * std::polar(1.0, -rec), t) <= 1e-10);
  }
}
