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
#include <string>
#include <vector>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/synthesis/strategy.hpp"

namespace cqbox {

/// Phases (radians) on |100>, |010> and |001> for each binary input triple,
/// stored at index 4x + 2y + z.
struct PhaseAssignment {
  std::array<double, 8> alpha{};
  std::array<double, 8> beta{};
  std::array<double, 8> gamma{};

  using Fn = std::function<double(int x, int y, int z)>;
  static PhaseAssignment from_functions(const Fn& alpha, const Fn& beta, const Fn& gamma);
  static constexpr int index(int x, int y, int z) { return 4 * x + 2 * y + z; }
};

/// (e^{i alpha}|100> + e^{i beta}|010> + e^{i gamma}|001>) / sqrt(3) per input.
CQBox w_phase_box(const PhaseAssignment& p);

struct LocalPhaseExtraction {
  bool local = false;
  /// Single-argument phases; meaningful only when local is true.
  std::array<double, 2> alpha{};
  std::array<double, 2> beta{};
  std::array<double, 2> gamma{};
  /// Per-input global phase, index 4x + 2y + z.
  std::array<double, 8> global{};
  /// Largest mismatch (mod 2 pi) of the reconstruction.
  double residual = 0.0;
};

/// Whether p equals alpha(x), beta(y), gamma(z) up to a per-input global
/// phase, all modulo 2 pi within tol.
LocalPhaseExtraction is_local_equivalent(const PhaseAssignment& p, double tol = kTolNum);

struct WPhaseTheoremReport {
  int grid = 0;
  std::size_t local_count = 0;
  /// Local members failing either check.
  std::size_t local_failures = 0;
  double worst_local_violation = 0.0;
  std::size_t perturbed_count = 0;
  /// Perturbed members that pass, or fail by less than the required margin.
  std::size_t perturbed_failures = 0;
  double smallest_perturbed_violation = 0.0;
  /// Members where no-signalling and local equivalence disagree.
  std::size_t disagreements = 0;
  bool pass = false;
};

/// Local assignments with every single-argument phase on the grid
/// {2 pi j / grid}, and each of them perturbed by delta * m(x, y, z) on one
/// ket, for every nonzero grid delta and every non-constant multilinear
/// monomial m that is not the ket's own local variable. Local members must
/// pass both checks; perturbed ones must signal by at least min_violation.
/// Work is split over threads; the report does not depend on the count.
WPhaseTheoremReport w_phase_theorem_check(int grid = 4, double tol = kTolNum, double min_violation = 1e-3,
                                          int threads = 1);

/// (|000> + e^{i theta x y z}|111>) / sqrt(2).
CQBox ghz_phase_box(double theta);

/// Strategy for any number of parties: a C-C box, a shared state and one
/// outcome map per party.
struct MultipartyStrategy {
  CCBox box;
  StateVector shared;
  std::vector<LocalMap> maps;
};

CQBox simulate(const MultipartyStrategy& strategy);

/// Uniform outcomes with (a - b - c) mod n = x y z on a shared GHZ state;
/// Alice rotates |1> by e^{i 2 pi a m / n}, Bob and Charlie by
/// e^{-i 2 pi b m / n} and e^{-i 2 pi c m / n}. Realises ghz_phase_box(2 pi m / n).
MultipartyStrategy ghz_phase_strategy(int m, int n);

}  // namespace cqbox
