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
#include "cqbox/synthesis/families.hpp"

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/schmidt.hpp"

namespace cqbox {

CQBox structured_pure_family(const std::vector<double>& coeff, const std::vector<std::vector<int>>& blocks,
                             Rng& rng, int x_count, int y_count) {
  const int n = static_cast<int>(coeff.size());
  if (n < 1 || x_count < 1 || y_count < 1) throw ParameterError("empty family");
  const PartyStructure s = PartyStructure::bipartite(n, n);
  ComplexVector v = ComplexVector::Zero(n * n);
  for (int k = 0; k < n; ++k) v(k * n + k) = coeff[k];
  const StateVector base =
      apply_local(apply_local(StateVector(v, s), "A", haar_unitary(n, rng)), "B", haar_unitary(n, rng));
  std::vector<UnitaryOperator> a, b;
  for (int x = 0; x < x_count; ++x) a.push_back(haar_unitary(n, rng));
  for (int y = 0; y < y_count; ++y) b.push_back(haar_unitary(n, rng));
  // Block unitaries act in the Schmidt frame of base.
  const SchmidtForm sf = schmidt(base);
  std::vector<StateVector> outs;
  for (int x = 0; x < x_count; ++x) {
    for (int y = 0; y < y_count; ++y) {
      ComplexMatrix g = ComplexMatrix::Zero(n, n);
      for (const auto& blk : blocks) {
        const auto sz = static_cast<int>(blk.size());
        const ComplexMatrix u = haar_unitary(sz, rng).matrix();
        for (int i = 0; i < sz; ++i) {
          for (int j = 0; j < sz; ++j) g(blk[i], blk[j]) = u(i, j);
        }
      }
      const UnitaryOperator lab(sf.left.matrix() * g * sf.left.matrix().adjoint());
      StateVector psi = apply_local(base, "A", lab);
      outs.push_back(apply_local(apply_local(psi, "A", a[x]), "B", b[y]));
    }
  }
  return CQBox(s, {x_count, y_count}, std::move(outs));
}

std::vector<std::vector<UnitaryOperator>> random_local_targets(int dim, int x_count, int y_count, Rng& rng) {
  std::vector<std::vector<UnitaryOperator>> t(static_cast<std::size_t>(x_count));
  for (auto& row : t) {
    for (int y = 0; y < y_count; ++y) row.push_back(haar_unitary(dim, rng));
  }
  return t;
}

std::vector<BellCanonicalForm> random_disordered_forms(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<BellCanonicalForm> forms;
  for (int i = 0; i < 4; ++i) {
    BellCanonicalForm f{haar_unitary(2, rng), haar_unitary(2, rng), {}};
    double total = 0.0;
    for (double& p : f.weights) total += p = u(rng);
    for (double& p : f.weights) p /= total;
    forms.push_back(f);
  }
  return forms;
}

CQBox disordered_box(const std::vector<BellCanonicalForm>& forms) {
  std::vector<DensityMatrix> outs;
  for (const auto& f : forms) outs.push_back(f.reconstruct());
  return CQBox(PartyStructure::bipartite(2, 2), {2, 2}, std::move(outs));
}

}  // namespace cqbox
