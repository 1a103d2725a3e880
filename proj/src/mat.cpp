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

#include "cugates/mat.hpp"

#include <cmath>
#include <stdexcept>

namespace cugates {

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const cxd a = e[4 * i + k];
      if (a == cxd{}) continue;
      for (int j = 0; j < 4; ++j) r.e[4 * i + j] += a * o.e[4 * k + j];
    }
  }
  return r;
}

Mat4 Mat4::operator*(cxd s) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = s * e[i];
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mat4 Mat4::dagger() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.e[4 * i + j] = std::conj(e[4 * j + i]);
  return r;
}

Mat2 identity2() { return Mat2{1, 0, 0, 1}; }
Mat2 pauli_x() { return Mat2{0, 1, 1, 0}; }
Mat2 pauli_z() { return Mat2{1, 0, 0, -1}; }
Mat2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Mat2{s, s, s, -s};
}
Mat2 phase_s() { return Mat2{1, 0, 0, cxd{0, 1}}; }
Mat2 phase_t() { return phase_gate(kPi / 4); }

Mat2 rz(double theta) {
  return Mat2{std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
}

Mat2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Mat2{c, -s, s, c};
}

Mat2 phase_gate(double phi) { return Mat2{1, 0, 0, std::polar(1.0, phi)}; }

Mat4 identity4() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
  return m;
}

Vec4 kron(const Vec2& a, const Vec2& b) {
  return Vec4{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Vec4 operator*(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
  return r;
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return Vec2{m.e[0] * v[0] + m.e[1] * v[1], m.e[2] * v[0] + m.e[3] * v[1]};
}

double norm(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

double norm(const Vec4& v) {
  double s = 0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

cxd inner(const Vec2& a, const Vec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double max_abs(const Mat2& m) {
  double r = 0;
  for (const auto& c : m.e) r = std::max(r, std::abs(c));
  return r;
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double r = 0;
  for (int i = 0; i < 16; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

bool is_finite(const Mat2& m) {
  for (const auto& c : m.e)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

bool is_unitary(const Mat2& m, double tol) {
  if (!is_finite(m)) return false;
  return max_abs_diff(m.dagger() * m, identity2()) <= tol;
}

bool is_unitary(const Mat4& m, double tol) {
  return max_abs_diff(m.dagger() * m, identity4()) <= tol;
}

void require_finite(const Mat2& m, const std::string& what) {
  if (!is_finite(m)) throw std::invalid_argument(what + ": non-finite entry");
}

void require_unitary(const Mat2& m, double tol, const std::string& what) {
  require_finite(m, what);
  if (!is_unitary(m, tol)) throw std::domain_error(what + ": matrix is not unitary");
}

namespace {

// Principal argument mapped into [0, 2pi).
double arg_2pi(cxd z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * kPi;
  return a;
}

// Multiply v by a unit phase making its first nonzero component real positive.
Vec2 canonical_phase(Vec2 v) {
  for (const auto& c : v) {
    const double a = std::abs(c);
    if (a > 1e-9) {
      const cxd f = std::conj(c) / a;
      return Vec2{f * v[0], f * v[1]};
    }
  }
  return v;
}

}  // namespace

Eig2 eig_unitary2(const Mat2& u) {
  require_unitary(u, kInputUnitaryTol, "eig_unitary2");

  const cxd tr = u.trace();
  const cxd dt = u.det();
  const cxd disc = std::sqrt(tr * tr - 4.0 * dt);
  cxd l0 = 0.5 * (tr + disc);
  cxd l1 = 0.5 * (tr - disc);
  // Unitary input: eigenvalues sit on the unit circle.
  l0 /= std::abs(l0);
  l1 /= std::abs(l1);
  if (arg_2pi(l1) < arg_2pi(l0)) std::swap(l0, l1);

  Eig2 out;
  out.lambda0 = l0;
  out.lambda1 = l1;

  if (std::abs(l0 - l1) <= 1e-12) {
    // u is (a multiple of) the identity; any orthonormal basis works.
    out.v0 = Vec2{1, 0};
    out.v1 = Vec2{0, 1};
    return out;
  }

  // Null space of (u - l0 I), taking the better-conditioned row.
  const Vec2 c1{u(0, 1), l0 - u(0, 0)};
  const Vec2 c2{l0 - u(1, 1), u(1, 0)};
  Vec2 v = norm(c1) >= norm(c2) ? c1 : c2;
  const double n = norm(v);
  v = Vec2{v[0] / n, v[1] / n};
  out.v0 = canonical_phase(v);
  // The orthogonal complement of an eigenvector of a unitary is the other
  // eigenvector.
  out.v1 = canonical_phase(Vec2{-std::conj(out.v0[1]), std::conj(out.v0[0])});
  return out;
}

double phase_distance(const Mat4& m, const Mat4& t) {
  cxd s{};
  for (int i = 0; i < 16; ++i) s += std::conj(m.e[i]) * t.e[i];
  double d = 1.0 - std::abs(s) / 4.0;
  return d < 0 ? 0.0 : d;
}

double exact_distance(const Mat4& m, const Mat4& t) { return max_abs_diff(m, t); }

double recovered_phase(const Mat4& m, const Mat4& t) {
  // theta with m ~ e^{i theta} t.
  cxd s{};
  for (int i = 0; i < 16; ++i) s += std::conj(t.e[i]) * m.e[i];
  return std::arg(s);
}

}  // namespace cugates
