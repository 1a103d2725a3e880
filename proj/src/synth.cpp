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

#include "cugates/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "cugates/verify.hpp"

namespace cugates {

namespace {

// Wrap into [-pi, pi); each 2pi shift flips the sign of Rz(x), counted in
// `flips` so the caller can compensate through the global phase.
double wrap_half_turns(double x, int& flips) {
  while (x >= kPi) {
    x -= 2 * kPi;
    ++flips;
  }
  while (x < -kPi) {
    x += 2 * kPi;
    ++flips;
  }
  return x;
}

double wrap_pi(double x) {
  while (x >= kPi) x -= 2 * kPi;
  while (x < -kPi) x += 2 * kPi;
  return x;
}

}  // namespace

ZyzAngles zyz(const Mat2& u) {
  require_unitary(u, kInputUnitaryTol, "zyz");

  double alpha = 0.5 * std::arg(u.det());
  const Mat2 su = std::polar(1.0, -alpha) * u;  // det ~ 1

  const double amag = std::abs(su(0, 0));
  const double bmag = std::abs(su(1, 0));
  const double gamma = 2.0 * std::atan2(bmag, amag);

  double beta, delta;
  if (bmag <= 1e-12) {  // gamma ~ 0: su = Rz(beta + delta)
    beta = 2.0 * std::arg(su(1, 1));
    delta = 0.0;
  } else if (amag <= 1e-12) {  // gamma ~ pi: su = Rz(beta) Ry(pi) Rz(delta)
    beta = 2.0 * std::arg(su(1, 0));
    delta = 0.0;
  } else {
    const double psi = std::arg(su(1, 1));  // (beta + delta) / 2
    const double chi = std::arg(su(1, 0));  // (beta - delta) / 2
    beta = psi + chi;
    delta = psi - chi;
  }

  int flips = 0;
  beta = wrap_half_turns(beta, flips);
  delta = wrap_half_turns(delta, flips);
  if (flips % 2 != 0) alpha += kPi;
  alpha = wrap_pi(alpha);

  return ZyzAngles{alpha, beta, gamma, delta};
}

Mat2 from_zyz(const ZyzAngles& z) {
  return std::polar(1.0, z.alpha) * (rz(z.beta) * ry(z.gamma) * rz(z.delta));
}

PhaseConjugation decompose_traceless(const Mat2& u) {
  require_unitary(u, kInputUnitaryTol, "decompose_traceless");
  if (std::abs(u.trace()) > 1e-9)
    throw std::domain_error("decompose_traceless: trace is not zero");

  const Eig2 eig = eig_unitary2(u);
  // Eigenvalues are +-e^{i phi}; the canonical ordering puts phi in [0, pi).
  double phi = std::arg(eig.lambda0);
  if (phi < 0) phi += 2 * kPi;
  // det u = -1 means the eigenvalues are exactly {1, -1}; pin the phi = 0
  // branch so E = I in circuit C1.
  if (std::abs(u.det() + cxd{1, 0}) <= 1e-9) phi = 0.0;

  const Mat2 w{eig.v0[0], eig.v1[0], eig.v0[1], eig.v1[1]};
  return PhaseConjugation{phi, w * hadamard()};
}

PhaseConjugation decompose_xtraceless(const Mat2& u) {
  require_unitary(u, kInputUnitaryTol, "decompose_xtraceless");
  if (std::abs(u(0, 1) + u(1, 0)) > 1e-9)
    throw std::domain_error("decompose_xtraceless: tr(uX) is not zero");
  return decompose_traceless(u * pauli_x());
}

AbcFactors decompose_abc(const Mat2& v) {
  require_unitary(v, kInputUnitaryTol, "decompose_abc");
  if (std::abs(v.det() - cxd{1, 0}) > 1e-9)
    throw std::domain_error("decompose_abc: determinant is not one");

  ZyzAngles z = zyz(v);
  // det 1 makes e^{i alpha} = +-1; fold a -1 into Ry via gamma + 2pi.
  if (std::cos(z.alpha) < 0) z.gamma += 2 * kPi;

  AbcFactors f;
  f.c = rz(z.beta) * ry(z.gamma / 2);
  f.b = ry(-z.gamma / 2) * rz(-(z.delta + z.beta) / 2);
  f.a = rz((z.delta - z.beta) / 2);
  return f;
}

namespace {

bool is_identity_phase(double phi) { return phi == 0.0; }

void push_e(Circuit& c, double phi) {
  if (!is_identity_phase(phi)) c.add_single(1, phase_gate(phi), "E");
}

}  // namespace

SynthesisResult synth(const Mat2& u) {
  require_unitary(u, kInputUnitaryTol, "synth");
  const ClassificationReport cls = classify(u);

  SynthesisResult r;
  r.tag = cls.tag;
  r.m = cls.m;

  switch (cls.tag) {
    case GateClass::a:
      break;
    case GateClass::b: {
      const double phi = std::arg(u(0, 0));
      r.phi = phi;
      r.e = phase_gate(phi);
      r.circuit.add_single(1, *r.e, "E");
      break;
    }
    case GateClass::c:
      r.circuit.add_cnot(1, 0);
      break;
    case GateClass::d: {
      const double phi = std::arg(u(0, 1));
      r.phi = phi;
      r.e = phase_gate(phi);
      r.circuit.add_single(1, *r.e, "E");
      r.circuit.add_cnot(1, 0);
      break;
    }
    case GateClass::e: {
      // u = e^{i phi0} Z: [H A on wire 1] Cnot(0->1) [H on wire 1] with
      // A = diag(1, e^{i phi0}); the H A product stays one gate.
      const double phi0 = std::arg(u(0, 0));
      r.phi = phi0;
      r.a = phase_gate(phi0);
      r.circuit.add_single(1, hadamard() * (*r.a), "HA");
      r.circuit.add_cnot(0, 1);
      r.circuit.add_single(1, hadamard(), "H");
      break;
    }
    case GateClass::f:
    case GateClass::g: {
      // Circuit C1 for u = e^{i phi} P X P^dagger.
      const PhaseConjugation d = decompose_traceless(u);
      r.phi = d.phi;
      r.p = d.p;
      r.e = phase_gate(d.phi);
      push_e(r.circuit, d.phi);
      r.circuit.add_single(0, d.p.dagger(), "P†");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, d.p, "P");
      break;
    }
    case GateClass::h:
    case GateClass::i: {
      // Circuit C2 for u = e^{i phi} P X P^dagger X.
      const PhaseConjugation d = decompose_xtraceless(u);
      r.phi = d.phi;
      r.p = d.p;
      r.e = phase_gate(d.phi);
      r.circuit.add_cnot(1, 0);
      push_e(r.circuit, d.phi);
      r.circuit.add_single(0, d.p.dagger(), "P†");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, d.p, "P");
      break;
    }
    case GateClass::j: {
      // Circuit C3 for det u = 1: u = C X B X A with C B A = I.
      const AbcFactors f = decompose_abc(u);
      r.a = f.a;
      r.b = f.b;
      r.c = f.c;
      r.circuit.add_single(0, f.a, "A");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, f.b, "B");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, f.c, "C");
      break;
    }
    case GateClass::generic: {
      // Circuit C4: u = e^{i phi} C X B X A with e^{i phi} the principal
      // square root of det u.
      const double phi = 0.5 * std::arg(u.det());
      const Mat2 v = std::polar(1.0, -phi) * u;
      const AbcFactors f = decompose_abc(v);
      r.phi = phi;
      r.e = phase_gate(phi);
      r.a = f.a;
      r.b = f.b;
      r.c = f.c;
      r.circuit.add_single(1, *r.e, "E");
      r.circuit.add_single(0, f.a, "A");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, f.b, "B");
      r.circuit.add_cnot(1, 0);
      r.circuit.add_single(0, f.c, "C");
      break;
    }
  }

  r.exact_error = exact_distance(evaluate(r.circuit), controlled(u));
  if (r.exact_error > 1e-8)
    throw SynthesisError("synth: reconstruction residual " + std::to_string(r.exact_error),
                         r.exact_error);
  if (static_cast<int>(r.circuit.gate_count()) != r.m)
    throw SynthesisError("synth: gate count does not match m(U)", r.exact_error);
  return r;
}

}  // namespace cugates
