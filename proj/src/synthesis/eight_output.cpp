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
#include <cmath>
#include <functional>

#include "cqbox/core/error.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"

namespace cqbox {
namespace {

// |<Phi+| (R^dagger U_a U_b^dagger x 1) |Phi+>|^2.
double branch_fidelity(const UnitaryOperator& ua, const UnitaryOperator& ub, const UnitaryOperator& relabel) {
  const Complex overlap = (relabel.matrix().adjoint() * ua.matrix() * ub.matrix().adjoint()).trace() / 2.0;
  return std::norm(overlap);
}

constexpr double kPairTol = 1e-12;

}  // namespace

const std::array<UnitaryOperator, 8>& eight_output_unitaries() {
  static const std::array<UnitaryOperator, 8> table = [] {
    const UnitaryOperator x = pauli_x();
    return std::array<UnitaryOperator, 8>{
        UnitaryOperator::identity(2), pauli_z_power(0.5),     pauli_z_power(1.0),     pauli_z_power(1.5),
        x,                            pauli_z_power(0.5) * x, pauli_z_power(1.0) * x, pauli_z_power(1.5) * x};
  }();
  return table;
}

bool pairing_realises(const std::array<UnitaryOperator, 8>& unitaries, const std::vector<int>& pairing,
                      const UnitaryOperator& relabel, double tol) {
  if (pairing.size() != unitaries.size()) return false;
  std::vector<bool> used(unitaries.size(), false);
  for (std::size_t b = 0; b < pairing.size(); ++b) {
    const int a = pairing[b];
    if (a < 0 || a >= static_cast<int>(unitaries.size()) || used[a]) return false;
    used[a] = true;
    if (branch_fidelity(unitaries[a], unitaries[b], relabel) < 1.0 - tol) return false;
  }
  return true;
}

std::vector<int> find_pairing(const std::array<UnitaryOperator, 8>& unitaries, const UnitaryOperator& relabel) {
  const std::size_t k = unitaries.size();
  std::vector<std::vector<int>> candidates(k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      if (branch_fidelity(unitaries[a], unitaries[b], relabel) >= 1.0 - kPairTol) {
        candidates[b].push_back(static_cast<int>(a));
      }
    }
  }
  std::vector<int> pairing(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t b) {
    if (b == k) return true;
    for (int a : candidates[b]) {
      if (used[a]) continue;
      used[a] = true;
      pairing[b] = a;
      if (assign(b + 1)) return true;
      used[a] = false;
    }
    return false;
  };
  if (!assign(0)) throw ValidationError("no bijective pairing realises the requested relabelling");
  return pairing;
}

Strategy eight_output_strategy() {
  const auto& u = eight_output_unitaries();
  const std::vector<int> identity = {0, 1, 2, 3, 4, 5, 6, 7};
  // b -> a; both halves are shifted cyclically by one.
  const std::vector<int> half_turn = {1, 2, 3, 0, 5, 6, 7, 4};
  if (!pairing_realises(u, half_turn, pauli_z_power(0.5))) {
    throw ValidationError("sqrt(sigma_z) pairing does not realise its target");
  }
  const std::vector<int> flip = find_pairing(u, pauli_x());
  std::vector<std::vector<std::vector<int>>> pairing = {{identity, identity, identity}, {identity, half_turn, flip}};
  return Strategy(
      "eight-output", CouplingBox(std::vector<double>(8, 1.0 / 8), std::move(pairing)), bell_state(0),
      [](int, int a) { return eight_output_unitaries()[a]; },
      [](int, int b) { return eight_output_unitaries()[b].conjugate(); });
}

}  // namespace cqbox
