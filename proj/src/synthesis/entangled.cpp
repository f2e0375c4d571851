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
#include <numeric>

#include <Eigen/SVD>

#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/core/error.hpp"
#include "cqbox/core/schmidt.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"
#include "synthesis/internal.hpp"

namespace cqbox {

namespace detail {

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace detail

namespace {

// W with reference = (W x 1)|Phi+>; throws unless the reference is
// maximally entangled.
UnitaryOperator reference_frame(const StateVector& reference) {
  const auto& s = reference.structure();
  if (s.size() != 2) throw DimensionError("reference state must be bipartite");
  const auto labels = s.labels();
  const int n = s.dim_of(labels[0]);
  if (s.dim_of(labels[1]) != n) throw DimensionError("reference state must have equal local dimensions");
  const ComplexMatrix w = std::sqrt(static_cast<double>(n)) * amplitude_matrix(reference);
  if ((w * w.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > kTolNum) {
    throw ParameterError("reference state is not maximally entangled");
  }
  return UnitaryOperator::assume_valid(w);
}

}  // namespace

Strategy max_entangled_strategy(const std::vector<std::vector<UnitaryOperator>>& targets, int n) {
  return max_entangled_strategy(targets, phi_plus(n));
}

Strategy max_entangled_strategy(const std::vector<std::vector<UnitaryOperator>>& targets,
                                const StateVector& reference) {
  const UnitaryOperator w = reference_frame(reference);
  const int n = w.dim();
  detail::check_grid(targets, n);
  std::vector<std::vector<UnitaryOperator>> relabel;
  for (const auto& row : targets) {
    relabel.emplace_back();
    for (const auto& t : row) relabel.back().push_back(t * w);
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Strategy("max-entangled", HaarCoupling(n, std::move(relabel), {all}), reference, w.adjoint());
}

Strategy singlet_family_strategy(const UnitaryOperator& alpha, const UnitaryOperator& beta,
                                 const UnitaryOperator& gamma, const UnitaryOperator& delta) {
  for (const auto* u : {&alpha, &beta, &gamma, &delta}) {
    if (u->dim() != 2) throw DimensionError("singlet family unitaries act on a qubit");
  }
  const UnitaryOperator id = UnitaryOperator::identity(2);
  const UnitaryOperator core = gamma.adjoint() * delta * beta.adjoint() * alpha;
  Strategy s = max_entangled_strategy({{id, id}, {id, core}}, bell_state(3));
  return s.dressed({alpha, gamma}, {id, beta.adjoint() * alpha});
}

Strategy general_pure_strategy(const CQBox& targets) {
  const auto& s = targets.structure();
  if (s.size() != 2) throw DimensionError("general pure construction needs a bipartite box");
  const auto labels = s.labels();
  const int n = s.dim_of(labels[0]);
  if (s.dim_of(labels[1]) != n) throw DimensionError("general pure construction needs equal local dimensions");
  const int xs = targets.inputs().radices()[0];
  const int ys = targets.inputs().radices()[1];

  std::vector<StateVector> pure;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto psi = targets.pure_output(i);
    if (!psi) throw ValidationError("general pure construction needs pure outputs");
    pure.push_back(*psi);
  }
  if (!cq_no_signalling(targets).pass) {
    throw ValidationError("target family signals; it has no non-signalling implementation");
  }

  auto amp = [&](int x, int y) { return amplitude_matrix(pure[static_cast<std::size_t>(x * ys + y)]); };
  const ComplexMatrix m00 = amp(0, 0);
  // Input-local parts: psi(x,0) = (A_x x 1) psi(0,0), psi(0,y) = (1 x B_y) psi(0,0).
  std::vector<ComplexMatrix> a(xs), b(ys);
  for (int x = 0; x < xs; ++x) a[x] = detail::polar_unitary(amp(x, 0) * m00.adjoint());
  for (int y = 0; y < ys; ++y) b[y] = detail::polar_unitary(amp(0, y).transpose() * m00.conjugate());

  const SchmidtForm sf = schmidt(pure[0]);
  const ComplexMatrix& l = sf.left.matrix();
  const ComplexMatrix& r = sf.right.matrix();

  // Remaining relabelling in the Schmidt frame, projected onto the block group.
  std::vector<int> block_of(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> blocks;
  std::vector<bool> zero_block;
  for (const auto& blk : sf.blocks) {
    blocks.emplace_back();
    for (int k = blk.begin; k < blk.begin + blk.size; ++k) {
      block_of[k] = static_cast<int>(blocks.size() - 1);
      blocks.back().push_back(k);
    }
    zero_block.push_back(blk.coefficient <= kSchmidtBlockTol);
  }
  std::vector<std::vector<ComplexMatrix>> g(xs, std::vector<ComplexMatrix>(ys));
  for (int x = 0; x < xs; ++x) {
    for (int y = 0; y < ys; ++y) {
      const ComplexMatrix rest = a[x].adjoint() * amp(x, y) * b[y].conjugate();
      const ComplexMatrix w = l.adjoint() * detail::polar_unitary(rest * m00.adjoint()) * l;
      ComplexMatrix proj = ComplexMatrix::Zero(n, n);
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& lv = blocks[k];
        const auto sz = static_cast<Eigen::Index>(lv.size());
        ComplexMatrix sub(sz, sz);
        for (Eigen::Index i = 0; i < sz; ++i) {
          for (Eigen::Index j = 0; j < sz; ++j) sub(i, j) = w(lv[i], lv[j]);
        }
        sub = zero_block[k] ? ComplexMatrix::Identity(sz, sz) : detail::polar_unitary(sub);
        for (Eigen::Index i = 0; i < sz; ++i) {
          for (Eigen::Index j = 0; j < sz; ++j) proj(lv[i], lv[j]) = sub(i, j);
        }
      }
      g[x][y] = proj;
    }
  }

  std::vector<UnitaryOperator> dress_a, dress_b;
  for (int x = 0; x < xs; ++x) dress_a.push_back(UnitaryOperator::assume_valid(a[x] * l));
  for (int y = 0; y < ys; ++y) dress_b.push_back(UnitaryOperator::assume_valid(b[y] * r));

  if (blocks.size() == 1 && !zero_block[0]) {
    std::vector<std::vector<UnitaryOperator>> t(xs);
    for (int x = 0; x < xs; ++x) {
      for (int y = 0; y < ys; ++y) {
        t[x].push_back(UnitaryOperator::assume_valid(a[x] * l * g[x][y] * r.transpose() * b[y].transpose()));
      }
    }
    return max_entangled_strategy(t, n);
  }

  std::vector<double> probabilities(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) probabilities[k] = sf.coefficients(k) * sf.coefficients(k);

  const bool singletons = blocks.size() == static_cast<std::size_t>(n);
  if (singletons) {
    auto phase = [g](int x, int y, int k) { return std::arg(g[x][y](k, k)) / kTwoPi; };
    return nonmax_pure_strategy(probabilities, phase, dress_a, dress_b);
  }

  std::vector<std::vector<UnitaryOperator>> relabel(xs);
  for (int x = 0; x < xs; ++x) {
    for (int y = 0; y < ys; ++y) relabel[x].push_back(UnitaryOperator::assume_valid(g[x][y]));
  }
  Strategy core("general-pure", HaarCoupling(n, std::move(relabel), std::move(blocks)),
                detail::schmidt_state(probabilities), UnitaryOperator::identity(n));
  return core.dressed(dress_a, dress_b);
}

}  // namespace cqbox
