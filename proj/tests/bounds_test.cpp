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
#include <gtest/gtest.h>

#include <cmath>

#include "cqbox/bounds/phase_bounds.hpp"
#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/synthesis/constructions.hpp"

using namespace cqbox;

namespace {

// Oracle: every cycle of length L of the (1,1) pairing carries 4L cosine terms
// whose angles must add up to 2 pi L / n modulo 2 pi; spreading the residual
// evenly is optimal.
double closed_form_best(int n, int k) {
  const double a2 = kBoundAlpha * kBoundAlpha, b2 = 1.0 - a2;
  double best = -1.0;
  for (int l = 1; l <= k; ++l) {
    const double t = static_cast<double>(l) / n;
    const double d = kTwoPi * std::abs(t - std::round(t));
    best = std::max(best, std::cos(d / (4.0 * l)));
  }
  return a2 * a2 + b2 * b2 + 2 * a2 * b2 * best;
}

PhaseStrategySpec mod_spec(int n) {
  PhaseStrategySpec s;
  s.k = n;
  s.alice_phases.assign(2, std::vector<double>(n));
  s.bob_phases.assign(2, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < 2; ++x) {
      s.alice_phases[x][i] = kTwoPi * i / n;
      s.bob_phases[x][i] = -kTwoPi * i / n;
    }
  }
  s.couplings = CouplingBox::cyclic(n, 2, 2, [](int x, int y) { return x * y; }).pairing();
  s.marginal.assign(n, 1.0 / n);
  return s;
}

OptimizerBudget small_budget() {
  OptimizerBudget b;
  b.restarts = 16;
  return b;
}

}  // namespace

TEST(PhaseStrategyFidelity, mod_construction_is_exact) {
  for (int n = 2; n <= 5; ++n) EXPECT_NEAR(phase_strategy_fidelity(mod_spec(n), bound_target(n)), 1.0, 1e-12) << n;
}

TEST(PhaseStrategyFidelity, random_specs_in_range) {
  Rng rng = make_rng(RandomSeed{3}, 0);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int t = 0; t < 20; ++t) {
    PhaseStrategySpec s = mod_spec(3);
    for (auto& row : s.alice_phases) {
      for (double& v : row) v = u(rng);
    }
    for (auto& row : s.bob_phases) {
      for (double& v : row) v = u(rng);
    }
    const double f = phase_strategy_fidelity(s, bound_target(3));
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(PhaseStrategyFidelity, alphabet_mismatch) {
  PhaseStrategySpec s = mod_spec(2);
  s.bob_phases[0].pop_back();
  EXPECT_THROW(phase_strategy_fidelity(s, bound_target(2)), DimensionError);
  EXPECT_THROW(phase_strategy_fidelity(mod_spec(2), eight_output_target()), DimensionError);
}

TEST(BestFidelity, single_outcome_sign_flip_matches_oracle) {
  const BoundResult r = best_fidelity(2, 1, small_budget());
  EXPECT_NEAR(r.best_fidelity, closed_form_best(2, 1), 1e-9);
  EXPECT_LT(r.best_fidelity, 1.0 - 0.1);
  EXPECT_NEAR(phase_strategy_fidelity(r.certificate, bound_target(2)), r.best_fidelity, 1e-12);
}

TEST(BestFidelity, frontier_matches_closed_form) {
  for (int n = 2; n <= 4; ++n) {
    double previous = 0.0;
    for (int k = 1; k <= n; ++k) {
      const BoundResult r = best_fidelity(n, k, small_budget());
      EXPECT_NEAR(r.best_fidelity, closed_form_best(n, k), 1e-9) << n << " " << k;
      EXPECT_GE(r.best_fidelity, previous);
      previous = r.best_fidelity;
      EXPECT_EQ(r.trace.unconverged, 0);
      EXPECT_NEAR(phase_strategy_fidelity(r.certificate, bound_target(n)), r.best_fidelity, 1e-12);
      if (k < n) {
        EXPECT_LE(r.best_fidelity, 1.0 - bound_gap(n, k));
        // The frozen gap is tight to the oracle.
        EXPECT_LT(1.0 - closed_form_best(n, k) - bound_gap(n, k), 1e-3 * bound_gap(n, k));
      }
    }
  }
}

TEST(BestFidelity, certificate_at_threshold_reproduces_target) {
  for (int n = 2; n <= 4; ++n) {
    const BoundResult r = best_fidelity(n, n, small_budget());
    EXPECT_GE(r.best_fidelity, 1.0 - 1e-9);
    const CQBox target = bound_target(n);
    const CQBox sim = simulate(r.certificate.strategy(*target.pure_output(0))).box;
    for (std::size_t i = 0; i < sim.size(); ++i) EXPECT_GE(fidelity(sim.output(i), target.output(i)), 1.0 - 1e-9);
  }
}

TEST(BestFidelity, deterministic_and_thread_independent) {
  OptimizerBudget b = small_budget();
  const BoundResult a = best_fidelity(3, 2, b, RandomSeed{5});
  const BoundResult c = best_fidelity(3, 2, b, RandomSeed{5});
  b.threads = 3;
  const BoundResult d = best_fidelity(3, 2, b, RandomSeed{5});
  EXPECT_EQ(a.best_fidelity, c.best_fidelity);
  EXPECT_EQ(a.best_fidelity, d.best_fidelity);
  EXPECT_EQ(a.certificate.alice_phases, d.certificate.alice_phases);
  EXPECT_EQ(a.trace.iterations, d.trace.iterations);
}

TEST(BestFidelity, restart_robustness) {
  OptimizerBudget b;
  const double base = best_fidelity(3, 2, b).best_fidelity;
  b.restarts *= 2;
  EXPECT_NEAR(best_fidelity(3, 2, b).best_fidelity, base, 1e-6);
}

TEST(BestFidelity, errors) {
  EXPECT_THROW(best_fidelity(1, 1), ParameterError);
  EXPECT_THROW(best_fidelity(3, 0), ParameterError);
  EXPECT_THROW(best_fidelity(3, 6), ParameterError);
  EXPECT_THROW(bound_gap(5, 1), ParameterError);
}

TEST(VerifyBound, small_frontiers) {
  for (int n : {2, 3}) {
    const BoundReport rep = verify_bound(n, small_budget());
    EXPECT_TRUE(rep.pass) << n;
    EXPECT_FALSE(rep.budget_exhausted);
    ASSERT_EQ(rep.rows.size(), static_cast<std::size_t>(n));
    EXPECT_LT(rep.rows.front().result.best_fidelity, 1.0);
    EXPECT_GE(rep.rows.back().result.best_fidelity, 1.0 - 1e-9);
  }
  EXPECT_THROW(verify_bound(5), ParameterError);
  EXPECT_THROW(verify_bound(1), ParameterError);
}
