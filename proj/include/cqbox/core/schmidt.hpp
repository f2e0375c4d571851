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

namespace cqbox {

/// Maximal run of Schmidt coefficients equal within the grouping threshold.
struct SchmidtBlock {
  int begin = 0;
  int size = 0;
  double coefficient = 0.0;
};

/// psi = sum_k c_k |l_k>|r_k> with c nonincreasing, where |l_k> and |r_k> are
/// the k-th columns of left and right.
struct SchmidtForm {
  Eigen::VectorXd coefficients;
  UnitaryOperator left;
  UnitaryOperator right;
  std::vector<SchmidtBlock> blocks;
  PartyStructure structure;

  StateVector reconstruct() const;
  double reconstruction_error(const StateVector& psi) const;
};

inline constexpr double kSchmidtBlockTol = 1e-7;

/// Schmidt decomposition of a bipartite pure state via SVD of its amplitude
/// matrix. Throws DimensionError unless the state has exactly two parties.
SchmidtForm schmidt(const StateVector& psi, double block_tol = kSchmidtBlockTol);

/// Row-major amplitude matrix M with psi = sum_ij M_ij |i>|j>.
ComplexMatrix amplitude_matrix(const StateVector& psi);

}  // namespace cqbox
