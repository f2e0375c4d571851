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

#include "cqbox/core/state.hpp"

namespace cqbox::detail {

void check_amplitudes(Complex alpha, Complex beta);
/// alpha|00> + beta|11> on two qubits A, B.
StateVector two_level_state(Complex alpha, Complex beta);
/// sum_i sqrt(p_i)|ii>.
StateVector schmidt_state(const std::vector<double>& probabilities);
/// Non-empty rectangular table of unitaries of the given dimension.
void check_grid(const std::vector<std::vector<UnitaryOperator>>& table, int dim);
/// Unitary factor U V^dagger of the SVD of m.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

}  // namespace cqbox::detail
