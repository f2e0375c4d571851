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

#include <array>
#include <functional>
#include <vector>

#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/synthesis/strategy.hpp"

namespace cqbox {

// Target boxes. Inputs are binary unless stated otherwise.

/// Bell pair for x.y = 0 and its bit-flipped partner (|01>+|10>)/sqrt(2) for x.y = 1.
CQBox bit_flip_target();
/// alpha|00> + beta e^{i 2 pi theta x.y}|11>.
CQBox phase_target(double theta, Complex alpha, Complex beta);
/// (T_{x,y} x 1)|reference>, where targets is indexed [x][y].
CQBox local_unitary_target(const std::vector<std::vector<UnitaryOperator>>& targets, const StateVector& reference);
/// Bell pair everywhere except sqrt(sigma_z) on Alice at (1,1) and sigma_x on
/// Alice at (1,2); x in {0,1}, y in {0,1,2}.
CQBox eight_output_target();

/// Per-level phase in turns for input pair (x, y).
using LevelPhases = std::function<double(int x, int y, int level)>;

/// (U_x x V_y)(W_{x,y} x 1) sum_i sqrt(p_i)|ii>, W_{x,y} = diag(e^{i 2 pi phase(x,y,i)}).
CQBox nonmax_target(const std::vector<double>& probabilities, const LevelPhases& phases,
                    const std::vector<UnitaryOperator>& local_alice, const std::vector<UnitaryOperator>& local_bob);

// Constructions.

/// PR box on a shared Bell pair; each party flips its bit when its outcome is 1.
Strategy bit_flip_strategy();
/// PR box on alpha|00> + beta|11>; the parties rotate |1> by e^{i pi a} and e^{-i pi b}.
Strategy sign_flip_strategy(Complex alpha, Complex beta);
/// (a - b) mod n = x.y with rotations e^{i 2 pi a m / n} and e^{-i 2 pi b m / n}.
Strategy rational_phase_strategy(int m, int n, Complex alpha, Complex beta);

struct ApproximatePhase {
  Strategy strategy;
  int numerator = 0;
  int denominator = 0;
  /// 1 - F at x.y = 1, which is the worst input: 4|alpha|^2|beta|^2 sin^2(D/2)
  /// with D = 2 pi |theta - m/n|.
  double error_bound = 0.0;
};
/// Rational strategy with m = round(n theta).
ApproximatePhase irrational_phase_strategy(double theta, int n, Complex alpha = 0.8, Complex beta = 0.6);

/// Haar coupling on a maximally entangled reference: every draw outputs
/// (T_{x,y} x 1)|reference> exactly. targets is indexed [x][y].
Strategy max_entangled_strategy(const std::vector<std::vector<UnitaryOperator>>& targets, int n);
Strategy max_entangled_strategy(const std::vector<std::vector<UnitaryOperator>>& targets,
                                const StateVector& reference);

/// Outputs alpha, beta, gamma, delta (for (0,0), (0,1), (1,0), (1,1)) applied
/// on Alice to the singlet. The resource only implements one rotation at
/// (1,1); the rest is input-local.
Strategy singlet_family_strategy(const UnitaryOperator& alpha, const UnitaryOperator& beta,
                                 const UnitaryOperator& gamma, const UnitaryOperator& delta);

/// Eight-outcome strategy with unitaries 1, Z^{1/2}, Z, Z^{3/2}, X, Z^{1/2}X,
/// Z X, Z^{3/2}X. Alice applies U_a, Bob U_b*.
Strategy eight_output_strategy();
const std::array<UnitaryOperator, 8>& eight_output_unitaries();
/// Pairing b -> a realising (R x 1)|Phi+> from U_a x U_b*, found by
/// exhaustive backtracking; throws ValidationError if none exists.
std::vector<int> find_pairing(const std::array<UnitaryOperator, 8>& unitaries, const UnitaryOperator& relabel);
/// Whether the pairing realises the relabelling on every branch.
bool pairing_realises(const std::array<UnitaryOperator, 8>& unitaries, const std::vector<int>& pairing,
                      const UnitaryOperator& relabel, double tol = kTolNum);

/// Phase couplings for distinct Schmidt probabilities. Phases whose
/// interaction parts are all multiples of 1/N (N <= 64, N^{levels-1} <= 4096)
/// use a finite cyclic coupling; anything else uses a continuous phase
/// coupling.
Strategy nonmax_pure_strategy(const std::vector<double>& probabilities, const LevelPhases& phases,
                              const std::vector<UnitaryOperator>& local_alice,
                              const std::vector<UnitaryOperator>& local_bob);

/// Any non-signalling family of bipartite pure states with equal local dimensions.
Strategy general_pure_strategy(const CQBox& targets);

}  // namespace cqbox
