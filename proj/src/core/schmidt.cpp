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
#include "cqbox/core/schmidt.hpp"

#include <algorithm>
#include <cmath>

#include "cqbox/core/error.hpp"

namespace cqbox {

ComplexMatrix amplitude_matrix(const StateVector& psi) {
  const PartyStructure& s = psi.structure();
  if (s.size() != 2) {
    throw DimensionError("amplitude matrix needs a bipartite state");
  }
  const int da = s[0].dim;
  const int db = s[1].dim;
  ComplexMatrix m(da, db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      m(i, j) = psi[static_cast<std::size_t>(i * db + j)];
    }
  }
  return m;
}

SchmidtForm schmidt(const StateVector& psi, double block_tol) {
  const ComplexMatrix m = amplitude_matrix(psi);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // M = U S V^dagger, so psi = sum_k s_k |U_k> |conj(V_k)>.
  SchmidtForm form{svd.singularValues(), UnitaryOperator::assume_valid(svd.matrixU()),
                   UnitaryOperator::assume_valid(svd.matrixV().conjugate()), {}, psi.structure()};
  const auto& c = form.coefficients;
  for (Eigen::Index k = 0; k < c.size();) {
    Eigen::Index end = k + 1;
    while (end < c.size() && std::abs(c(k) - c(end)) <= block_tol) ++end;
    form.blocks.push_back(SchmidtBlock{static_cast<int>(k), static_cast<int>(end - k), c(k)});
    k = end;
  }
  return form;
}

StateVector SchmidtForm::reconstruct() const {
  const int da = structure[0].dim;
  const int db = structure[1].dim;
  ComplexMatrix m = ComplexMatrix::Zero(da, db);
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    m += coefficients(k) * left.matrix().col(k) * right.matrix().col(k).transpose();
  }
  ComplexVector amps(da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) amps(i * db + j) = m(i, j);
  }
  return StateVector(std::move(amps), structure, 1e-6);
}

double SchmidtForm::reconstruction_error(const StateVector& psi) const {
  return (reconstruct().amplitudes() - psi.amplitudes()).norm();
}

}  // namespace cqbox
