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
#include <complex>
#include <string>

namespace cugates {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Entry-level comparison tolerance; determinant/trace predicates get 1e-9.
inline constexpr double kEntryTol = 1e-10;
// Unitarity gate applied to external inputs (classify/synth/from_json).
inline constexpr double kInputUnitaryTol = 1e-8;

/// Dense complex 2x2 matrix, row-major.
struct Mat2 {
  std::array<cxd, 4> e{};

  Mat2() = default;
  Mat2(cxd a, cxd b, cxd c, cxd d) : e{a, b, c, d} {}

  cxd& operator()(int r, int c) { return e[2 * r + c]; }
  const cxd& operator()(int r, int c) const { return e[2 * r + c]; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]};
  }
  Mat2 operator*(cxd s) const { return Mat2{s * e[0], s * e[1], s * e[2], s * e[3]}; }
  Mat2 operator+(const Mat2& o) const {
    return Mat2{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]};
  }
  Mat2 operator-(const Mat2& o) const {
    return Mat2{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]};
  }

  Mat2 dagger() const {
    return Mat2{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
  }
  cxd det() const { return e[0] * e[3] - e[1] * e[2]; }
  cxd trace() const { return e[0] + e[3]; }
};

inline Mat2 operator*(cxd s, const Mat2& m) { return m * s; }

/// Dense complex 4x4 matrix, row-major, basis order |q1 q0> with q1 the
/// most significant (control) qubit.
struct Mat4 {
  std::array<cxd, 16> e{};

  cxd& operator()(int r, int c) { return e[4 * r + c]; }
  const cxd& operator()(int r, int c) const { return e[4 * r + c]; }

  Mat4 operator*(const Mat4& o) const;
  Mat4 operator*(cxd s) const;
  Mat4 operator-(const Mat4& o) const;
  Mat4 dagger() const;
  cxd trace() const { return e[0] + e[5] + e[10] + e[15]; }
};

using Vec2 = std::array<cxd, 2>;
using Vec4 = std::array<cxd, 4>;

// Fixed single-qubit constants.
Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 phase_s();
Mat2 phase_t();

// Rotation constructors: rz(t) = diag(e^{-it/2}, e^{it/2}), ry(t) the real
// rotation by t/2, phase_gate(p) = diag(1, e^{ip}).
Mat2 rz(double theta);
Mat2 ry(double theta);
Mat2 phase_gate(double phi);

Mat4 identity4();

/// Kronecker product under the |q1 q0> ordering: a acts on q1, b on q0.
Mat4 kron(const Mat2& a, const Mat2& b);

Vec4 kron(const Vec2& a, const Vec2& b);
Vec4 operator*(const Mat4& m, const Vec4& v);
Vec2 operator*(const Mat2& m, const Vec2& v);

double norm(const Vec2& v);
double norm(const Vec4& v);
cxd inner(const Vec2& a, const Vec2& b);

double max_abs(const Mat2& m);
double max_abs_diff(const Mat2& a, const Mat2& b);
double max_abs_diff(const Mat4& a, const Mat4& b);

bool is_finite(const Mat2& m);
bool is_unitary(const Mat2& m, double tol = kEntryTol);
bool is_unitary(const Mat4& m, double tol = 1e-9);

/// Throws std::invalid_argument when m has a NaN/Inf entry.
void require_finite(const Mat2& m, const std::string& what);
/// Throws std::domain_error when m fails the unitarity check at tol.
void require_unitary(const Mat2& m, double tol, const std::string& what);

struct Eig2 {
  cxd lambda0, lambda1;  // |lambda|=1; lambda0 has the smaller arg in [0,2pi)
  Vec2 v0, v1;           // orthonormal; first nonzero component real positive
};

/// Spectral decomposition of a unitary 2x2 matrix with deterministic
/// ordering: lambda0 carries the smaller principal argument in [0, 2pi) and
/// eigenvector phases are canonicalized (first nonzero component made real
/// positive). Throws std::domain_error on non-unitary input.
Eig2 eig_unitary2(const Mat2& u);

/// Phase-invariant distance 1 - |tr(m^dagger t)|/4; zero iff m = e^{i theta} t.
double phase_distance(const Mat4& m, const Mat4& t);
/// Entrywise max-norm of (m - t).
double exact_distance(const Mat4& m, const Mat4& t);
/// Global phase theta with m ~ e^{i theta} t (arg of the overlap tr(t^dagger m)).
double recovered_phase(const Mat4& m, const Mat4& t);

}  // namespace cugates
