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
#include "cqbox/core/standard.hpp"

#include <cmath>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"

namespace cqbox {

StateVector basis_state(const PartyStructure& structure, std::span<const int> digits) {
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(structure.total_dim()));
  amps(static_cast<Eigen::Index>(structure.flat_index(digits))) = 1.0;
  return StateVector(std::move(amps), structure);
}

StateVector basis_state(const PartyStructure& structure, std::initializer_list<int> digits) {
  return basis_state(structure, std::span<const int>(digits.begin(), digits.size()));
}

StateVector bell_state(int index) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector amps = ComplexVector::Zero(4);
  switch (index) {
    case 0: amps << h, 0, 0, h; break;
    case 1: amps << 0, h, h, 0; break;
    case 2: amps << h, 0, 0, -h; break;
    case 3: amps << 0, h, -h, 0; break;
    default: throw ParameterError("Bell state index must be in 0..3");
  }
  return StateVector(std::move(amps), PartyStructure::bipartite(2, 2));
}

StateVector phi_plus(int n) {
  if (n < 1) {
    throw ParameterError("phi_plus dimension must be >= 1");
  }
  ComplexVector amps = ComplexVector::Zero(n * n);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) amps(i * n + i) = c;
  return StateVector(std::move(amps), PartyStructure::bipartite(n, n));
}

StateVector w_state() {
  ComplexVector amps = ComplexVector::Zero(8);
  const double c = 1.0 / std::sqrt(3.0);
  amps(4) = c;  // |100>
  amps(2) = c;  // |010>
  amps(1) = c;  // |001>
  return StateVector(std::move(amps), PartyStructure::qubits(3));
}

StateVector ghz_state() {
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = amps(7) = 1.0 / std::sqrt(2.0);
  return StateVector(std::move(amps), PartyStructure::qubits(3));
}

UnitaryOperator bell_frame(int index) {
  switch (index) {
    case 0: return UnitaryOperator::identity(2);
    case 1: return pauli_x();
    case 2: return pauli_z();
    case 3: return pauli_z() * pauli_x();
    default: throw ParameterError("Bell state index must be in 0..3");
  }
}

UnitaryOperator pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return UnitaryOperator::assume_valid(std::move(m));
}

UnitaryOperator pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return UnitaryOperator::assume_valid(std::move(m));
}

UnitaryOperator pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return UnitaryOperator::assume_valid(std::move(m));
}

UnitaryOperator pauli_z_power(double t) {
  const double angles[] = {0.0, kPi * t};
  return phase_diag(angles);
}

UnitaryOperator phase_diag(std::span<const double> angles) {
  if (angles.empty()) {
    throw DimensionError("phase_diag needs at least one angle");
  }
  const auto n = static_cast<Eigen::Index>(angles.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = std::polar(1.0, angles[static_cast<std::size_t>(i)]);
  }
  return UnitaryOperator::assume_valid(std::move(m));
}

UnitaryOperator phase_diag(std::initializer_list<double> angles) {
  return phase_diag(std::span<const double>(angles.begin(), angles.size()));
}

UnitaryOperator su2(const std::array<double, 3>& axis, double angle) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(norm - 1.0) > kTolNum) {
    throw ParameterError("rotation axis is not a unit vector");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i(0.0, 1.0);
  const ComplexMatrix n_sigma = axis[0] * pauli_x().matrix() + axis[1] * pauli_y().matrix() +
                                axis[2] * pauli_z().matrix();
  return UnitaryOperator::assume_valid(c * ComplexMatrix::Identity(2, 2) - i * s * n_sigma);
}

double check_uu_star_invariance(const UnitaryOperator& u, int n) {
  if (u.dim() != n) {
    throw DimensionError("unitary dimension does not match n");
  }
  return local_pair_residual(u, u.conjugate());
}

double local_pair_residual(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("local pair must act on equal dimensions");
  }
  const StateVector phi = phi_plus(u.dim());
  const StateVector out = apply_local(apply_local(phi, "A", u), "B", v);
  return (out.amplitudes() - phi.amplitudes()).norm();
}

}  // namespace cqbox
