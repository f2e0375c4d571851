// Copyright 2026 The cqbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cqbox/bounds/phase_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"

namespace cqbox {
namespace {

constexpr double kFullFidelityTol = 1e-9;
constexpr double kInitialStep = kPi / 2;

double beta_of(double alpha) { return std::sqrt(1.0 - alpha * alpha); }

// Gauge-fixed search problem: support size m, pairing sigma at (1,1),
// identity elsewhere. Parameters are [alice x=0 | alice x=1 | bob y=0 | bob y=1],
// m entries each.
struct Problem {
  int n;
  int m;
  std::vector<int> sigma;
  double base;
  double cross;

  double operator()(const std::vector<double>& p) const {
    const double* a0 = p.data();
    const double* a1 = a0 + m;
    const double* b0 = a1 + m;
    const double* b1 = b0 + m;
    const double shift = kTwoPi / n;
    double sum = 0.0;
    for (int b = 0; b < m; ++b) {
      sum += std::cos(a0[b] + b0[b]) + std::cos(a1[b] + b0[b]) + std::cos(a0[b] + b1[b]) +
             std::cos(a1[sigma[b]] + b1[b] - shift);
    }
    return base + cross * sum / (4.0 * m);
  }
};

struct StartResult {
  double value = -1.0;
  std::vector<double> params;
  long long iterations = 0;
  double step = 0.0;
  bool converged = false;
};

StartResult compass_search(const Problem& f, std::vector<double> x, const OptimizerBudget& budget) {
  StartResult r;
  double fx = f(x);
  double step = kInitialStep;
  long long it = 0;
  while (step >= budget.step_tolerance && it < budget.max_iterations) {
    ++it;
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double dir : {1.0, -1.0}) {
        const double keep = x[i];
        x[i] = keep + dir * step;
        const double fy = f(x);
        if (fy > fx) {
          fx = fy;
          improved = true;
          break;
        }
        x[i] = keep;
      }
    }
    if (!improved) step /= 2;
  }
  r.value = fx;
  r.params = std::move(x);
  r.iterations = it;
  r.step = step;
  r.converged = step < budget.step_tolerance;
  return r;
}

double wrap(double angle) {
  const double w = std::fmod(angle, kTwoPi);
  return w < 0 ? w + kTwoPi : w;
}

PhaseStrategySpec certificate_of(int k, const Problem& f, const std::vector<double>& p) {
  PhaseStrategySpec spec;
  spec.k = k;
  spec.alice_phases.assign(2, std::vector<double>(static_cast<std::size_t>(k), 0.0));
  spec.bob_phases.assign(2, std::vector<double>(static_cast<std::size_t>(k), 0.0));
  for (int b = 0; b < f.m; ++b) {
    spec.alice_phases[0][b] = wrap(p[b]);
    spec.alice_phases[1][b] = wrap(p[f.m + b]);
    spec.bob_phases[0][b] = wrap(p[2 * f.m + b]);
    spec.bob_phases[1][b] = wrap(p[3 * f.m + b]);
  }
  std::vector<int> id(static_cast<std::size_t>(k));
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> last = id;
  for (int b = 0; b < f.m; ++b) last[b] = f.sigma[b];
  spec.couplings = {{id, id}, {id, last}};
  spec.marginal.assign(static_cast<std::size_t>(k), 0.0);
  for (int b = 0; b < f.m; ++b) spec.marginal[b] = 1.0 / f.m;
  return spec;
}

}  // namespace

void PhaseStrategySpec::validate() const {
  if (k < 1) throw ParameterError("phase strategy needs at least one outcome");
  if (alice_phases.size() != 2 || bob_phases.size() != 2 || couplings.size() != 2) {
    throw DimensionError("phase strategies have binary inputs");
  }
  for (const auto& row : alice_phases) {
    if (static_cast<int>(row.size()) != k) throw DimensionError("one Alice phase per outcome is required");
  }
  for (const auto& row : bob_phases) {
    if (static_cast<int>(row.size()) != k) throw DimensionError("one Bob phase per outcome is required");
  }
  if (static_cast<int>(marginal.size()) != k) throw DimensionError("marginal must cover every outcome");
  double total = 0.0;
  for (double q : marginal) {
    if (q < 0.0) throw ParameterError("marginal must be nonnegative");
    total += q;
  }
  if (std::abs(total - 1.0) > kTolNum) throw ParameterError("marginal must sum to 1");
  // CouplingBox checks the pairings.
  (void)box();
}

CouplingBox PhaseStrategySpec::box() const { return CouplingBox(marginal, couplings); }

Strategy PhaseStrategySpec::strategy(const StateVector& shared) const {
  validate();
  auto alice = alice_phases;
  auto bob = bob_phases;
  return Strategy(
      "phase-only", box(), shared, [alice](int x, int a) { return phase_diag({0.0, alice[x][a]}); },
      [bob](int y, int b) { return phase_diag({0.0, bob[y][b]}); });
}

CQBox bound_target(int n) {
  if (n < 2) throw ParameterError("bound targets need n >= 2");
  return phase_target(1.0 / n, kBoundAlpha, beta_of(kBoundAlpha));
}

double phase_strategy_fidelity(const PhaseStrategySpec& spec, const CQBox& target) {
  spec.validate();
  if (target.inputs().radices() != std::vector<int>{2, 2} || target.structure().total_dim() != 4 ||
      target.structure().size() != 2) {
    throw DimensionError("phase strategies target two-qubit boxes with binary inputs");
  }
  const auto shared = target.pure_output(0);
  if (!shared) throw ValidationError("phase strategy target must be pure at input (0,0)");
  const CQBox sim = simulate(spec.strategy(*shared)).box;
  double sum = 0.0;
  for (std::size_t i = 0; i < sim.size(); ++i) sum += fidelity(sim.output(i), target.output(i));
  return sum / static_cast<double>(sim.size());
}

BoundResult best_fidelity(int n, int k, const OptimizerBudget& budget, RandomSeed seed) {
  if (n < 2) throw ParameterError("bound search needs n >= 2");
  if (k < 1) throw ParameterError("bound search needs k >= 1");
  if (k > budget.enumeration_cap) throw ParameterError("k exceeds the enumeration cap");
  if (budget.restarts < 1) throw ParameterError("at least one restart is required");

  const double a2 = kBoundAlpha * kBoundAlpha;
  const double b2 = 1.0 - a2;
  std::vector<Problem> problems;
  for (int m = 1; m <= k; ++m) {
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      problems.push_back(Problem{n, m, sigma, a2 * a2 + b2 * b2, 2 * a2 * b2});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  // Start (problem p, restart r) uses stream p * restarts + r, so results do
  // not depend on k or on the thread count.
  const std::size_t total = problems.size() * static_cast<std::size_t>(budget.restarts);
  std::vector<StartResult> results(total);
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t s = begin; s < total; s += stride) {
      const Problem& f = problems[s / static_cast<std::size_t>(budget.restarts)];
      Rng rng = make_rng(seed, s);
      std::uniform_real_distribution<double> angle(0.0, kTwoPi);
      std::vector<double> x(static_cast<std::size_t>(4 * f.m));
      for (double& v : x) v = angle(rng);
      results[s] = compass_search(f, std::move(x), budget);
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, budget.threads));
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
    for (auto& th : pool) th.join();
  }

  BoundResult out;
  out.n = n;
  out.k = k;
  std::size_t winner = 0;
  for (std::size_t s = 0; s < total; ++s) {
    out.trace.iterations += results[s].iterations;
    if (!results[s].converged) ++out.trace.unconverged;
    if (results[s].value > results[winner].value) winner = s;
  }
  out.trace.starts = static_cast<long long>(total);
  out.trace.residual = results[winner].step;
  out.best_fidelity = std::clamp(results[winner].value, 0.0, 1.0);
  out.certificate =
      certificate_of(k, problems[winner / static_cast<std::size_t>(budget.restarts)], results[winner].params);
  return out;
}

double bound_gap(int n, int k) {
  // 1 - alpha^4 - beta^4 - 2 alpha^2 beta^2 max_{L <= k} cos(D_L / 4L),
  // D_L = 2 pi dist(L/n, Z), rounded down; a 1-degree grid over the
  // pairings agrees wherever it is feasible.
  struct Entry {
    int n, k;
    double gap;
  };
  static constexpr Entry table[] = {
      {2, 1, 0.1349}, {3, 1, 0.06173}, {3, 2, 0.01570}, {4, 1, 0.03507}, {4, 2, 0.03507}, {4, 3, 0.003942},
  };
  for (const auto& e : table) {
    if (e.n == n && e.k == k) return e.gap;
  }
  throw ParameterError("no frozen gap for n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

BoundReport verify_bound(int n, const OptimizerBudget& budget, RandomSeed seed) {
  if (n < 2 || n > 4) throw ParameterError("bound verification is limited to 2 <= n <= 4");
  BoundReport report;
  report.n = n;
  report.pass = true;
  for (int k = 1; k <= n; ++k) {
    BoundRow row;
    row.k = k;
    row.result = best_fidelity(n, k, budget, seed);
    if (k < n) {
      row.gap = bound_gap(n, k);
      row.pass = row.result.best_fidelity <= 1.0 - row.gap;
    } else {
      row.pass = row.result.best_fidelity >= 1.0 - kFullFidelityTol;
    }
    report.pass = report.pass && row.pass;
    report.budget_exhausted = report.budget_exhausted || row.result.trace.unconverged > 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cqbox
