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

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"
#include "synthesis/internal.hpp"

namespace cqbox {

namespace detail {

void check_amplitudes(Complex alpha, Complex beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kTolNorm) {
    throw ParameterError("amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

StateVector two_level_state(Complex alpha, Complex beta) {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = alpha;
  v(3) = beta;
  return StateVector(v, PartyStructure::bipartite(2, 2));
}

StateVector schmidt_state(const std::vector<double>& probabilities) {
  const int n = static_cast<int>(probabilities.size());
  ComplexVector v = ComplexVector::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = std::sqrt(probabilities[i]);
  return StateVector(v, PartyStructure::bipartite(n, n));
}

void check_grid(const std::vector<std::vector<UnitaryOperator>>& table, int dim) {
  if (table.empty() || table[0].empty()) throw DimensionError("target table is empty");
  for (const auto& row : table) {
    if (row.size() != table[0].size()) throw DimensionError("target table is ragged");
    for (const auto& u : row) {
      if (u.dim() != dim) throw DimensionError("target unitary dimension does not match");
    }
  }
}

}  // namespace detail

CQBox bit_flip_target() {
  return CQBox::from_pure(PartyStructure::bipartite(2, 2), {2, 2},
                          [](std::span<const int> in) { return bell_state(in[0] * in[1] == 1 ? 1 : 0); });
}

CQBox phase_target(double theta, Complex alpha, Complex beta) {
  detail::check_amplitudes(alpha, beta);
  return CQBox::from_pure(PartyStructure::bipartite(2, 2), {2, 2}, [&](std::span<const int> in) {
    return detail::two_level_state(alpha, beta * std::polar(1.0, kTwoPi * theta * in[0] * in[1]));
  });
}

CQBox local_unitary_target(const std::vector<std::vector<UnitaryOperator>>& targets, const StateVector& reference) {
  const auto& s = reference.structure();
  if (s.size() != 2) throw DimensionError("reference state must be bipartite");
  const auto labels = s.labels();
  detail::check_grid(targets, s.dim_of(labels[0]));
  const int xs = static_cast<int>(targets.size());
  const int ys = static_cast<int>(targets[0].size());
  return CQBox::from_pure(s, {xs, ys}, [&](std::span<const int> in) {
    return apply_local(reference, labels[0], targets[in[0]][in[1]]);
  });
}

CQBox eight_output_target() {
  const UnitaryOperator id = UnitaryOperator::identity(2);
  return local_unitary_target({{id, id, id}, {id, pauli_z_power(0.5), pauli_x()}}, bell_state(0));
}

CQBox nonmax_target(const std::vector<double>& probabilities, const LevelPhases& phases,
                    const std::vector<UnitaryOperator>& local_alice, const std::vector<UnitaryOperator>& local_bob) {
  const StateVector base = detail::schmidt_state(probabilities);
  const int n = static_cast<int>(probabilities.size());
  const int xs = static_cast<int>(local_alice.size());
  const int ys = static_cast<int>(local_bob.size());
  return CQBox::from_pure(base.structure(), {xs, ys}, [&](std::span<const int> in) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) angles[i] = kTwoPi * phases(in[0], in[1], i);
    StateVector out = apply_local(base, "A", phase_diag(angles));
    out = apply_local(out, "A", local_alice.at(in[0]));
    return apply_local(out, "B", local_bob.at(in[1]));
  });
}

}  // namespace cqbox
