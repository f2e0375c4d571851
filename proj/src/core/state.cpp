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
#include "cqbox/core/state.hpp"

#include <cmath>
#include <sstream>

#include "cqbox/core/error.hpp"

namespace cqbox {

StateVector::StateVector(ComplexVector amplitudes, PartyStructure structure, double norm_tol)
    : amplitudes_(std::move(amplitudes)), structure_(std::move(structure)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != structure_.total_dim()) {
    std::ostringstream msg;
    msg << "state vector has " << amplitudes_.size() << " amplitudes but structure dimension is "
        << structure_.total_dim();
    throw DimensionError(msg.str());
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= norm_tol)) {
    std::ostringstream msg;
    msg << "state vector is not normalized (squared norm " << norm2 << ")";
    throw ValidationError(msg.str());
  }
}

StateVector StateVector::normalized(ComplexVector amplitudes, PartyStructure structure) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) {
    throw ValidationError("cannot normalize a zero vector");
  }
  amplitudes /= norm;
  return StateVector(std::move(amplitudes), std::move(structure));
}

Complex StateVector::inner(const StateVector& other) const {
  if (!(structure_ == other.structure_)) {
    throw DimensionError("inner product of states with different structures");
  }
  return amplitudes_.dot(other.amplitudes_);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, PartyStructure structure, double tol)
    : matrix_(std::move(matrix)), structure_(std::move(structure)) {
  const auto n = static_cast<std::size_t>(matrix_.rows());
  if (matrix_.rows() != matrix_.cols() || n != structure_.total_dim()) {
    throw DimensionError("density matrix shape does not match structure dimension");
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= tol)) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const double tr_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (!(tr_err <= tol)) {
    throw ValidationError("density matrix trace differs from 1");
  }
  const ComplexMatrix h = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw ValidationError("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::assume_valid(ComplexMatrix matrix, PartyStructure structure) {
  DensityMatrix rho;
  rho.matrix_ = std::move(matrix);
  rho.structure_ = std::move(structure);
  return rho;
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return assume_valid(psi.amplitudes() * psi.amplitudes().adjoint(), psi.structure());
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const DensityMatrix> parts, double tol) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw DimensionError("mixture needs one weight per component");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw ValidationError("mixture weight is negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol) {
    throw ValidationError("mixture weights do not sum to 1");
  }
  ComplexMatrix m = ComplexMatrix::Zero(parts[0].matrix_.rows(), parts[0].matrix_.cols());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].structure_ == parts[0].structure_)) {
      throw DimensionError("mixture components have different structures");
    }
    m += weights[i] * parts[i].matrix_;
  }
  return assume_valid(std::move(m), parts[0].structure_);
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.squaredNorm();
}

std::optional<StateVector> DensityMatrix::as_pure(double tol) const {
  if (purity() < 1.0 - tol) {
    return std::nullopt;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (matrix_ + matrix_.adjoint()));
  const Eigen::Index top = matrix_.rows() - 1;
  ComplexVector v = es.eigenvectors().col(top);
  // Fix the global phase so the largest-magnitude entry is real positive.
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  v *= std::conj(v(arg)) / std::abs(v(arg));
  return StateVector::normalized(std::move(v), structure_);
}

DensityMatrix to_density(const QuantumState& state) {
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    return DensityMatrix::from_pure(*psi);
  }
  return std::get<DensityMatrix>(state);
}

const PartyStructure& structure_of(const QuantumState& state) {
  return std::visit([](const auto& s) -> const PartyStructure& { return s.structure(); }, state);
}

UnitaryOperator::UnitaryOperator(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw DimensionError("unitary must be a nonempty square matrix");
  }
  const ComplexMatrix err = matrix_ * matrix_.adjoint() -
                            ComplexMatrix::Identity(matrix_.rows(), matrix_.cols());
  if (!(err.cwiseAbs().maxCoeff() <= tol)) {
    throw ValidationError("matrix is not unitary");
  }
}

UnitaryOperator UnitaryOperator::identity(int dim) {
  if (dim < 1) {
    throw DimensionError("identity dimension must be >= 1");
  }
  return assume_valid(ComplexMatrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::assume_valid(ComplexMatrix matrix) {
  UnitaryOperator u;
  u.matrix_ = std::move(matrix);
  return u;
}

UnitaryOperator UnitaryOperator::adjoint() const { return assume_valid(matrix_.adjoint()); }
UnitaryOperator UnitaryOperator::conjugate() const { return assume_valid(matrix_.conjugate()); }
UnitaryOperator UnitaryOperator::transpose() const { return assume_valid(matrix_.transpose()); }

bool UnitaryOperator::is_identity() const {
  return matrix_ == ComplexMatrix::Identity(matrix_.rows(), matrix_.cols());
}

UnitaryOperator operator*(const UnitaryOperator& lhs, const UnitaryOperator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionError("cannot multiply unitaries of different dimension");
  }
  return UnitaryOperator::assume_valid(lhs.matrix_ * rhs.matrix_);
}

double distance_up_to_phase(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("cannot compare unitaries of different dimension");
  }
  // The optimal phase aligns Tr(V^dagger U).
  const Complex overlap = (v.matrix().adjoint() * u.matrix()).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return (u.matrix() - phase * v.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace cqbox
