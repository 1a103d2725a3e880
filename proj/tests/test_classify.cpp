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

#include "cugates/classify.hpp"
#include "cugates/rng.hpp"

using namespace cugates;

namespace {

constexpr GateClass kAllTags[] = {GateClass::a, GateClass::b, GateClass::c,
                                  GateClass::d, GateClass::e, GateClass::f,
                                  GateClass::g, GateClass::h, GateClass::i,
                                  GateClass::j, GateClass::generic};

}  // namespace

TEST_CASE("m values match the dispatch table") {
  const int want[] = {0, 1, 1, 2, 3, 3, 4, 4, 5, 5, 6};
  for (int i = 0; i < 11; ++i) CHECK(m_of(kAllTags[i]) == want[i]);
}

TEST_CASE("named matrices classify as expected") {
  CHECK(classify(identity2()).tag == GateClass::a);
  CHECK(classify(std::polar(1.0, kPi / 3) * identity2()).tag == GateClass::b);
  CHECK(classify(pauli_x()).tag == GateClass::c);
  CHECK(classify(std::polar(1.0, 0.9) * pauli_x()).tag == GateClass::d);
  CHECK(classify(pauli_z()).tag == GateClass::e);
  CHECK(classify(std::polar(1.0, 1.3) * pauli_z()).tag == GateClass::e);
  CHECK(classify(hadamard()).tag == GateClass::f);
  CHECK(classify(hadamard()).m == 3);
  CHECK(classify(rz(0.7)).tag == GateClass::h);
  CHECK(classify(phase_s()).tag == GateClass::i);
  CHECK(classify(phase_t()).tag == GateClass::i);
  CHECK(classify(phase_t()).m == 5);

  // iZ is traceless with det 1 and is diagonal, so it stays in class e.
  CHECK(classify(cxd{0, 1} * pauli_z()).tag == GateClass::e);
}

TEST_CASE("classify rejects bad input") {
  CHECK_THROWS_AS(classify(Mat2{2, 0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(classify(identity2(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(classify(identity2(), 1e-2), std::invalid_argument);
}

TEST_CASE("Haar-random matrices are generic") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 u = haar_unitary2(rng);
    const auto rep = classify(u);
    CHECK(rep.tag == GateClass::generic);
    CHECK(rep.m == 6);
    CHECK(is_generic(u));
  }
}

TEST_CASE("is_generic named examples and dagger invariance") {
  CHECK_FALSE(is_generic(pauli_x()));          // tr X = 0
  CHECK_FALSE(is_generic(phase_t()));          // tr(TX) = 0
  CHECK_FALSE(is_generic(identity2()));

  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 u = haar_unitary2(rng);
    CHECK(is_generic(u) == is_generic(u.dagger()));
  }
}

TEST_CASE("classification gate count is dagger invariant") {
  Rng rng(44);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 u = haar_unitary2(rng);
    CHECK(classify(u).m == classify(u.dagger()).m);
  }
  for (const GateClass tag : kAllTags) {
    for (int i = 0; i < 100; ++i) {
      const Mat2 u = sample(tag, derive_seed(91, i));
      CHECK(classify(u).m == classify(u.dagger()).m);
    }
  }
}

TEST_CASE("sampler round trip") {
  Rng rng(45);
  for (const GateClass tag : kAllTags) {
    for (int i = 0; i < 300; ++i) {
      const Mat2 u = sample(tag, rng);
      CHECK(is_unitary(u, 1e-12));
      CHECK(classify(u).tag == tag);
    }
  }
}

TEST_CASE("sampler witnesses") {
  // Class f: trace is zero to machine precision and det = -1.
  for (int i = 0; i < 100; ++i) {
    const Mat2 u = sample(GateClass::f, derive_seed(7, i));
    CHECK(std::abs(u.trace()) <= 1e-12);
    CHECK(std::abs(u.det() + cxd{1, 0}) <= 1e-10);
  }

  // Generic samples keep healthy average margins.
  double tr_sum = 0, trux_sum = 0, det_sum = 0;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    const Mat2 u = sample(GateClass::generic, derive_seed(8, i));
    tr_sum += std::abs(u.trace());
    trux_sum += std::abs(u(0, 1) + u(1, 0));
    det_sum += std::abs(u.det() - cxd{1, 0});
  }
  CHECK(tr_sum / n > 0.05);
  CHECK(trux_sum / n > 0.05);
  CHECK(det_sum / n > 0.05);
}

TEST_CASE("boundary flag fires near a class edge") {
  // det barely away from 1: still class generic by precedence, but flagged.
  const Mat2 u = std::polar(1.0, 2.5e-8) * sample(GateClass::j, 123);
  const auto rep = classify(u, 1e-9);
  CHECK(rep.near_boundary);
}
