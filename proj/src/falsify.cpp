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

#include "cugates/falsify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cugates/circuit.hpp"
#include "cugates/rng.hpp"

namespace cugates {

int Template::slot_count() const {
  int n = 0;
  for (const auto& s : slots) n += (s[0] ? 1 : 0) + (s[1] ? 1 : 0);
  return n;
}

std::uint64_t template_key(const Template& t) {
  // Canonical packing: cnot count, orientation bits, slot mask.
  std::uint64_t key = static_cast<std::uint64_t>(t.cnot_count());
  for (int i = 0; i < t.cnot_count(); ++i)
    key |= static_cast<std::uint64_t>(t.cnot_targets[i]) << (3 + i);
  for (std::size_t seg = 0; seg < t.slots.size(); ++seg)
    for (int w = 0; w < 2; ++w)
      if (t.slots[seg][w]) key |= 1ULL << (11 + 2 * seg + w);
  return key;
}

std::vector<Template> enumerate_templates(int k) {
  if (k < 0 || k > 7) throw std::invalid_argument("enumerate_templates: k must be in [0, 7]");
  std::vector<Template> out;
  for (int c = 0; c <= k; ++c) {
    const int positions = 2 * (c + 1);
    for (int orient = 0; orient < (1 << c); ++orient) {
      for (int mask = 0; mask < (1 << positions); ++mask) {
        if (__builtin_popcount(mask) > k - c) continue;
        Template t;
        t.cnot_targets.resize(c);
        for (int i = 0; i < c; ++i) t.cnot_targets[i] = (orient >> i) & 1;
        t.slots.resize(c + 1);
        for (int seg = 0; seg <= c; ++seg)
          for (int w = 0; w < 2; ++w) t.slots[seg][w] = (mask >> (2 * seg + w)) & 1;
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

namespace {

// e^{i a} Rz(b) Ry(g) Rz(d) straight from the angles.
inline Mat2 slot_gate(const double* p) {
  const double a = p[0], b = p[1], g = p[2], d = p[3];
  const double ch = std::cos(g / 2), sh = std::sin(g / 2);
  return Mat2{std::polar(ch, a - (b + d) / 2), -std::polar(sh, a - (b - d) / 2),
              std::polar(sh, a + (b - d) / 2), std::polar(ch, a + (b + d) / 2)};
}

struct Objective {
  const Template& t;
  const Mat4& target;
  VerifyMode metric;

  double operator()(const double* params) const {
    Mat4 m = identity4();
    const double* p = params;
    const int c = t.cnot_count();
    for (int seg = 0; seg <= c; ++seg) {
      for (int w = 0; w < 2; ++w) {
        if (t.slots[seg][w]) {
          apply_single(m, slot_gate(p), w);
          p += 4;
        }
      }
      if (seg < c) {
        const int tgt = t.cnot_targets[seg];
        apply_cnot(m, 1 - tgt, tgt);
      }
    }
    return metric == VerifyMode::phase ? phase_distance(m, target)
                                       : exact_distance(m, target);
  }
};

struct NmOut {
  double fmin;
  std::vector<double> x;
  long long evals;
};

// Nelder-Mead with the standard coefficients; stops when the simplex
// collapses below diam_tol or the evaluation budget runs out.
template <typename F>
NmOut nelder_mead(const F& f, std::vector<double> x0, double step, double diam_tol,
                  int max_evals) {
  const int n = static_cast<int>(x0.size());
  std::vector<std::vector<double>> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  long long evals = 0;
  for (int i = 1; i <= n; ++i) xs[i][i - 1] += step;
  for (int i = 0; i <= n; ++i) {
    fs[i] = f(xs[i].data());
    ++evals;
  }

  std::vector<double> xr(n), xe(n), xc(n), centroid(n);
  while (evals < max_evals) {
    // Order: lo = best, hi = worst, sh = second worst.
    int lo = 0, hi = 0, sh = 0;
    for (int i = 1; i <= n; ++i) {
      if (fs[i] < fs[lo]) lo = i;
      if (fs[i] > fs[hi]) hi = i;
    }
    sh = lo;
    for (int i = 0; i <= n; ++i)
      if (i != hi && fs[i] > fs[sh]) sh = i;

    double diam = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < n; ++j) diam = std::max(diam, std::abs(xs[i][j] - xs[lo][j]));
    }
    if (diam < diam_tol) break;

    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int i = 0; i <= n; ++i)
        if (i != hi) s += xs[i][j];
      centroid[j] = s / n;
    }

    for (int j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - xs[hi][j]);
    const double fr = f(xr.data());
    ++evals;

    if (fr < fs[lo]) {
      for (int j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (xr[j] - centroid[j]);
      const double fe = f(xe.data());
      ++evals;
      if (fe < fr) {
        xs[hi] = xe;
        fs[hi] = fe;
      } else {
        xs[hi] = xr;
        fs[hi] = fr;
      }
    } else if (fr < fs[sh]) {
      xs[hi] = xr;
      fs[hi] = fr;
    } else {
      const bool outside = fr < fs[hi];
      if (outside) {
        for (int j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
      } else {
        for (int j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xs[hi][j] - centroid[j]);
      }
      const double fc = f(xc.data());
      ++evals;
      if (fc < (outside ? fr : fs[hi])) {
        xs[hi] = xc;
        fs[hi] = fc;
      } else {
        // Shrink toward the best vertex.
        for (int i = 0; i <= n; ++i) {
          if (i == lo) continue;
          for (int j = 0; j < n; ++j) xs[i][j] = xs[lo][j] + 0.5 * (xs[i][j] - xs[lo][j]);
          fs[i] = f(xs[i].data());
          ++evals;
        }
      }
    }
  }

  int lo = 0;
  for (int i = 1; i <= n; ++i)
    if (fs[i] < fs[lo]) lo = i;
  return NmOut{fs[lo], xs[lo], evals};
}

}  // namespace

OptimizeResult optimize_template(const Template& t, const Mat4& target,
                                 const OptimizeOptions& opts) {
  const Objective f{t, target, opts.metric};
  const int n = 4 * t.slot_count();

  if (n == 0) {
    // Nothing to optimize; the residual is a closed-form constant.
    return OptimizeResult{f(nullptr), {}, 1, 1};
  }

  Rng rng(opts.seed);
  OptimizeResult best;
  best.residual = std::numeric_limits<double>::infinity();
  best.restarts_used = 0;
  best.evals = 0;

  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x0(n);
    for (auto& x : x0) x = rng.uniform(-kPi, kPi);
    const NmOut nm = nelder_mead(f, std::move(x0), 0.5, opts.diameter_tol, opts.max_evals);
    best.evals += nm.evals;
    best.restarts_used = r + 1;
    if (nm.fmin < best.residual) {
      best.residual = nm.fmin;
      best.params = nm.x;
    }
    if (best.residual <= opts.stop_below) break;
  }
  return best;
}

FalsifyReport falsify(const Mat2& u, int k, const FalsifyOptions& opts) {
  require_unitary(u, kInputUnitaryTol, "falsify");
  const Mat4 target = controlled(u);
  const std::vector<Template> templates = enumerate_templates(k);

  FalsifyReport rep;
  rep.target = u;
  rep.k = k;
  rep.metric = opts.metric;
  rep.seed = opts.seed;
  rep.restarts = opts.restarts;
  rep.threshold = opts.threshold;
  rep.found_tol = opts.found_tol;
  rep.templates.resize(templates.size());

  // Independent optimizations with per-template seeds derived from the
  // template's content, so a template shared by two budgets gets the same
  // stream (this keeps min residual non-increasing in k). Results merge by
  // index; threading does not change the report.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= templates.size()) return;
      OptimizeOptions o;
      o.restarts = opts.restarts;
      o.seed = derive_seed(opts.seed, template_key(templates[i]));
      o.metric = opts.metric;
      o.stop_below = opts.stop_below;
      const OptimizeResult r = optimize_template(templates[i], target, o);
      rep.templates[i] =
          TemplateResult{templates[i], r.residual, r.params, r.restarts_used};
    }
  };

  unsigned nthreads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                       : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, templates.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  rep.min_residual = std::numeric_limits<double>::infinity();
  rep.best_template = -1;
  for (std::size_t i = 0; i < rep.templates.size(); ++i) {
    if (rep.templates[i].residual < rep.min_residual) {
      rep.min_residual = rep.templates[i].residual;
      rep.best_template = static_cast<int>(i);
    }
  }
  rep.verdict = rep.min_residual <= opts.found_tol ? "realization found"
                : rep.min_residual >= opts.threshold ? "no realization found"
                                                     : "inconclusive";
  return rep;
}

}  // namespace cugates
