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

#include <optional>
#include <span>
#include <variant>

#include "cqbox/core/party_structure.hpp"
#include "cqbox/core/types.hpp"

namespace cqbox {

/// Normalized pure state over a party structure.
class StateVector {
 public:
  /// Throws DimensionError on a length mismatch and ValidationError when the
  /// squared norm differs from 1 by more than norm_tol.
  StateVector(ComplexVector amplitudes, PartyStructure structure, double norm_tol = kTolNorm);

  /// Normalizes the given amplitudes; throws ValidationError for a zero vector.
  static StateVector normalized(ComplexVector amplitudes, PartyStructure structure);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const PartyStructure& structure() const { return structure_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// <this|other>.
  Complex inner(const StateVector& other) const;

 private:
  ComplexVector amplitudes_;
  PartyStructure structure_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a party structure.
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and positivity within tol.
  DensityMatrix(ComplexMatrix matrix, PartyStructure structure, double tol = kTolNum);

  /// Skips validation. Only for results of operations that preserve the
  /// invariants (partial traces, conjugation by unitaries, convex mixtures).
  static DensityMatrix assume_valid(ComplexMatrix matrix, PartyStructure structure);

  static DensityMatrix from_pure(const StateVector& psi);
  /// Convex combination; weights must be nonnegative and sum to 1 within tol.
  static DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> parts,
                               double tol = kTolNum);

  const ComplexMatrix& matrix() const { return matrix_; }
  const PartyStructure& structure() const { return structure_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  double purity() const;
  /// Dominant eigenvector when the state is pure within tol (Tr rho^2 >= 1 - tol).
  std::optional<StateVector> as_pure(double tol = kTolNum) const;

 private:
  DensityMatrix() = default;

  ComplexMatrix matrix_;
  PartyStructure structure_;
};

using QuantumState = std::variant<StateVector, DensityMatrix>;

DensityMatrix to_density(const QuantumState& state);
const PartyStructure& structure_of(const QuantumState& state);

/// Square matrix with U U^dagger = 1 within tolerance.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix matrix, double tol = kTolNum);

  static UnitaryOperator identity(int dim);
  /// Skips the unitarity check; for products and conjugates of unitaries.
  static UnitaryOperator assume_valid(ComplexMatrix matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(int row, int col) const { return matrix_(row, col); }

  UnitaryOperator adjoint() const;
  UnitaryOperator conjugate() const;
  UnitaryOperator transpose() const;
  bool is_identity() const;

  friend UnitaryOperator operator*(const UnitaryOperator& lhs, const UnitaryOperator& rhs);

 private:
  UnitaryOperator() = default;

  ComplexMatrix matrix_;
};

/// Maximum absolute entry of U - e^{i phi} V minimized over the global phase.
double distance_up_to_phase(const UnitaryOperator& u, const UnitaryOperator& v);

}  // namespace cqbox
