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
#include <random>

#include "cugates/mat.hpp"

namespace cugates {

/// Seeded random source. Every randomized routine takes one of these by
/// reference (or a seed), so runs are reproducible for a fixed build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Stable seed derivation for parallel sub-streams (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-distributed 2x2 unitary: Gram-Schmidt of a complex Gaussian draw
/// with the positive-diagonal phase convention.
Mat2 haar_unitary2(Rng& rng);

/// Uniform pure states (Gaussian components, normalized).
Vec2 random_state2(Rng& rng);
Vec4 random_state4(Rng& rng);

}  // namespace cugates
