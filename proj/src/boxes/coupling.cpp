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
#include "cqbox/boxes/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cqbox/core/error.hpp"

namespace cqbox {

CouplingBox::CouplingBox(std::vector<double> marginal,
                         std::vector<std::vector<std::vector<int>>> pairing, double tol)
    : marginal_(std::move(marginal)), pairing_(std::move(pairing)) {
  const int k = static_cast<int>(marginal_.size());
  if (k == 0 || pairing_.empty() || pairing_[0].empty()) {
    throw DimensionError("coupling needs outcomes and inputs");
  }
  double sum = 0.0;
  for (double q : marginal_) {
    if (!(q >= 0.0)) throw ValidationError("negative marginal probability");
    sum += q;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ValidationError("coupling marginal does not sum to 1");
  }
  const std::size_t ys = pairing_[0].size();
  for (std::size_t x = 0; x < pairing_.size(); ++x) {
    if (pairing_[x].size() != ys) throw DimensionError("ragged pairing table");
    for (std::size_t y = 0; y < ys; ++y) {
      const auto& pi = pairing_[x][y];
      const std::string where = " for inputs (" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (static_cast<int>(pi.size()) != k) throw DimensionError("pairing has wrong length" + where);
      std::vector<bool> hit(static_cast<std::size_t>(k), false);
      for (int b = 0; b < k; ++b) {
        const int a = pi[static_cast<std::size_t>(b)];
        if (a < 0 || a >= k || hit[static_cast<std::size_t>(a)]) {
          throw ValidationError("pairing is not a bijection" + where);
        }
        hit[static_cast<std::size_t>(a)] = true;
        if (std::abs(marginal_[static_cast<std::size_t>(a)] - marginal_[static_cast<std::size_t>(b)]) > tol) {
          throw ValidationError("pairing does not preserve the marginal" + where);
        }
      }
    }
  }
}

CouplingBox CouplingBox::cyclic(int n, int x_count, int y_count,
                                const std::function<int(int, int)>& shift) {
  if (n < 1) throw ParameterError("coupling needs at least one outcome");
  std::vector<std::vector<std::vector<int>>> pairing(
      static_cast<std::size_t>(x_count), std::vector<std::vector<int>>(static_cast<std::size_t>(y_count)));
  for (int x = 0; x < x_count; ++x) {
    for (int y = 0; y < y_count; ++y) {
      const int s = ((shift(x, y) % n) + n) % n;
      auto& pi = pairing[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      for (int b = 0; b < n; ++b) pi.push_back((b + s) % n);
    }
  }
  return CouplingBox(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n), std::move(pairing));
}

CCBox coupling_to_ccbox(const CouplingBox& box) {
  const int k = box.outcomes();
  return CCBox::from_function({box.x_count(), box.y_count()}, {k, k},
                              [&](std::span<const int> ab, std::span<const int> xy) {
                                return box.pair(xy[0], xy[1], ab[1]) == ab[0]
                                           ? box.marginal()[static_cast<std::size_t>(ab[1])]
                                           : 0.0;
                              });
}

HaarCoupling::HaarCoupling(int dim, std::vector<std::vector<UnitaryOperator>> relabel,
                           std::vector<std::vector<int>> blocks, double tol)
    : dim_(dim), relabel_(std::move(relabel)), blocks_(std::move(blocks)) {
  if (dim_ < 1 || relabel_.empty() || relabel_[0].empty()) {
    throw DimensionError("Haar coupling needs a dimension and inputs");
  }
  std::vector<int> owner(static_cast<std::size_t>(dim_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw ValidationError("empty block in Haar coupling");
    for (int level : blocks_[b]) {
      if (level < 0 || level >= dim_ || owner[static_cast<std::size_t>(level)] != -1) {
        throw ValidationError("blocks must partition the levels");
      }
      owner[static_cast<std::size_t>(level)] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw ValidationError("blocks must partition the levels");
  }
  for (const auto& row : relabel_) {
    if (row.size() != relabel_[0].size()) throw DimensionError("ragged relabel table");
    for (const auto& u : row) {
      if (u.dim() != dim_) throw DimensionError("relabel unitary has wrong dimension");
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
          if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)] &&
              std::abs(u(i, j)) > tol) {
            throw ValidationError("relabel unitary mixes different blocks");
          }
        }
      }
    }
  }
}

HaarCoupling::Sample HaarCoupling::sample(int x, int y, Rng& rng) const {
  ComplexMatrix v = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& block : blocks_) {
    const int d = static_cast<int>(block.size());
    const UnitaryOperator local = haar_unitary(d, rng);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        v(block[static_cast<std::size_t>(i)], block[static_cast<std::size_t>(j)]) = local(i, j);
      }
    }
  }
  UnitaryOperator bob = UnitaryOperator::assume_valid(std::move(v));
  UnitaryOperator alice = relabel_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)) *
                          bob.conjugate();
  return Sample{std::move(alice), std::move(bob)};
}

HaarCoupling haar_coupling(int n, int x_count, int y_count,
                           const std::function<UnitaryOperator(int, int)>& relabel) {
  std::vector<std::vector<UnitaryOperator>> table(static_cast<std::size_t>(x_count));
  for (int x = 0; x < x_count; ++x) {
    for (int y = 0; y < y_count; ++y) table[static_cast<std::size_t>(x)].push_back(relabel(x, y));
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return HaarCoupling(n, std::move(table), {all});
}

}  // namespace cqbox
