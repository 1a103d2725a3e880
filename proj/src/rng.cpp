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

#include "cugates/rng.hpp"

#include <cmath>

namespace cugates {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat2 haar_unitary2(Rng& rng) {
  const cxd g0{rng.gaussian(), rng.gaussian()};
  const cxd g1{rng.gaussian(), rng.gaussian()};
  const cxd g2{rng.gaussian(), rng.gaussian()};
  const cxd g3{rng.gaussian(), rng.gaussian()};
  // First column: normalized (g0, g2); second: Gram-Schmidt of (g1, g3).
  Vec2 c0{g0, g2};
  const double n0 = norm(c0);
  c0 = Vec2{c0[0] / n0, c0[1] / n0};
  Vec2 c1{g1, g3};
  const cxd proj = inner(c0, c1);
  c1 = Vec2{c1[0] - proj * c0[0], c1[1] - proj * c0[1]};
  const double n1 = norm(c1);
  c1 = Vec2{c1[0] / n1, c1[1] / n1};
  return Mat2{c0[0], c1[0], c0[1], c1[1]};
}

Vec2 random_state2(Rng& rng) {
  Vec2 v{cxd{rng.gaussian(), rng.gaussian()}, cxd{rng.gaussian(), rng.gaussian()}};
  const double n = norm(v);
  return Vec2{v[0] / n, v[1] / n};
}

Vec4 random_state4(Rng& rng) {
  Vec4 v;
  for (auto& c : v) c = cxd{rng.gaussian(), rng.gaussian()};
  const double n = norm(v);
  for (auto& c : v) c /= n;
  return v;
}

}  // namespace cugates
