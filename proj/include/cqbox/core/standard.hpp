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
#include <span>
#include <vector>

#include "cqbox/core/state.hpp"

namespace cqbox {

/// Computational basis state |d_0 d_1 ...>.
StateVector basis_state(const PartyStructure& structure, std::span<const int> digits);
StateVector basis_state(const PartyStructure& structure, std::initializer_list<int> digits);

/// The two-qubit Bell states in the order
/// (|00>+|11>), (|01>+|10>), (|00>-|11>), (|01>-|10>), each over sqrt(2).
StateVector bell_state(int index);
/// sum_i |i>|i> / sqrt(n).
StateVector phi_plus(int n);
/// (|100> + |010> + |001>) / sqrt(3).
StateVector w_state();
/// (|000> + |111>) / sqrt(2).
StateVector ghz_state();

/// Unitary B_i with bell_state(i) = (B_i x 1) bell_state(0).
UnitaryOperator bell_frame(int index);

UnitaryOperator pauli_x();
UnitaryOperator pauli_y();
UnitaryOperator pauli_z();
/// diag(1, e^{i pi t}); t = 1 is sigma_z.
UnitaryOperator pauli_z_power(double t);
/// diag(e^{i angles_k}).
UnitaryOperator phase_diag(std::span<const double> angles);
UnitaryOperator phase_diag(std::initializer_list<double> angles);
/// exp(-i angle/2 n.sigma): Bloch-sphere rotation by angle about axis n.
/// Throws ParameterError unless |axis| = 1 within kTolNum.
UnitaryOperator su2(const std::array<double, 3>& axis, double angle);

/// ||(U x U*) |Phi^{n+}> - |Phi^{n+}>||, which vanishes for every unitary U.
double check_uu_star_invariance(const UnitaryOperator& u, int n);
/// ||(U x V) |Phi^{n+}> - |Phi^{n+}>|| for an arbitrary local pair.
double local_pair_residual(const UnitaryOperator& u, const UnitaryOperator& v);

}  // namespace cqbox
