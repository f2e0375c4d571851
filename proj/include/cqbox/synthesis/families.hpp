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

#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/core/random.hpp"
#include "cqbox/synthesis/mixed.hpp"

namespace cqbox {

/// Random non-signalling family of bipartite pure states with Schmidt
/// coefficients coeff: psi(x, y) = (A_x x B_y)(G_xy x 1)|base>, where every
/// G_xy is Haar-random inside the given blocks of equal coefficients and base
/// is a Haar-rotated Schmidt state.
CQBox structured_pure_family(const std::vector<double>& coeff, const std::vector<std::vector<int>>& blocks,
                             Rng& rng, int x_count = 2, int y_count = 2);

/// Haar-random unitaries indexed [x][y].
std::vector<std::vector<UnitaryOperator>> random_local_targets(int dim, int x_count, int y_count, Rng& rng);

/// Bell canonical forms with Haar-random frames and uniformly random weights,
/// one per input pair of a binary-input two-qubit box.
std::vector<BellCanonicalForm> random_disordered_forms(Rng& rng);

/// Two-qubit box whose output at input i is forms[i].reconstruct().
CQBox disordered_box(const std::vector<BellCanonicalForm>& forms);

}  // namespace cqbox
