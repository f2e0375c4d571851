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
#pragma once

#include <vector>

#include "cqbox/boxes/coupling.hpp"
#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/core/random.hpp"
#include "cqbox/synthesis/strategy.hpp"

namespace cqbox {

/// Schmidt amplitude of |00> in the phase boxes probed by the bound search;
/// |11> carries sqrt(1 - kBoundAlpha^2).
inline constexpr double kBoundAlpha = 0.8;

/// Phase-only strategy on two qubits driven by a k-outcome coupling: Alice
/// applies diag(1, e^{i alice_phases[x][a]}), Bob diag(1, e^{i bob_phases[y][b]}).
struct PhaseStrategySpec {
  int k = 1;
  std::vector<std::vector<double>> alice_phases;
  std::vector<std::vector<double>> bob_phases;
  /// [x][y][b] -> a.
  std::vector<std::vector<std::vector<int>>> couplings;
  std::vector<double> marginal;

  /// Throws ParameterError or DimensionError on malformed tables.
  void validate() const;
  CouplingBox box() const;
  Strategy strategy(const StateVector& shared) const;
};

/// alpha|00> + beta e^{i 2 pi x.y / n}|11> with alpha = kBoundAlpha.
CQBox bound_target(int n);

/// Mean over inputs of the fidelity between the exactly simulated strategy
/// (shared state = target output at input (0,0)) and the target.
double phase_strategy_fidelity(const PhaseStrategySpec& spec, const CQBox& target);

struct OptimizerBudget {
  /// Random starts per (support size, pairing) combination.
  int restarts = 64;
  /// Pattern search stops once its step falls below this.
  double step_tolerance = 1e-10;
  /// Iteration cap per start; hitting it marks the result unconverged.
  int max_iterations = 20000;
  /// Largest k accepted.
  int enumeration_cap = 5;
  int threads = 1;
};

struct OptimizerTrace {
  long long starts = 0;
  long long iterations = 0;
  /// Final step size of the winning start.
  double residual = 0.0;
  /// Number of starts that hit the iteration cap.
  long long unconverged = 0;
};

struct BoundResult {
  int n = 0;
  int k = 0;
  double best_fidelity = 0.0;
  OptimizerTrace trace;
  PhaseStrategySpec certificate;
};

/// Best mean fidelity to bound_target(n) over phase-only strategies driven by
/// k-outcome couplings. Relabelling Alice's outcomes per input and Bob's
/// outcomes for y = 1 fixes three pairings to the identity; the marginal is
/// uniform on a support of size k' <= k (optimal marginals are uniform on an
/// orbit of the pairings); the last pairing runs over all of S_{k'}; phases
/// are refined by multi-start compass search.
BoundResult best_fidelity(int n, int k, const OptimizerBudget& budget = {}, RandomSeed seed = {});

/// Frozen regression gap: best_fidelity(n, k) <= 1 - gap for k < n.
double bound_gap(int n, int k);

struct BoundRow {
  int k = 0;
  BoundResult result;
  /// Gap asserted for k < n; 0 on the k = n row.
  double gap = 0.0;
  bool pass = false;
};

struct BoundReport {
  int n = 0;
  std::vector<BoundRow> rows;
  bool pass = false;
  bool budget_exhausted = false;
};

/// Frontier k = 1..n for n in 2..4: k = n must reach 1 within 1e-9, every
/// k < n must stay at or below 1 - bound_gap(n, k).
BoundReport verify_bound(int n, const OptimizerBudget& budget = {}, RandomSeed seed = {});

}  // namespace cqbox
