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

#include <functional>
#include <vector>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/core/random.hpp"
#include "cqbox/core/state.hpp"

namespace cqbox {

/// Bipartite C-C box in coupling form: Bob's output b is drawn from the
/// shared marginal q and Alice's output is a = pi_{x,y}(b).
class CouplingBox {
 public:
  /// \p pairing is indexed [x][y][b] -> a. Every pi_{x,y} must be a bijection
  /// that preserves q, so both parties see the marginal q under every input.
  CouplingBox(std::vector<double> marginal, std::vector<std::vector<std::vector<int>>> pairing,
              double tol = kTolNum);

  /// Uniform marginal over n outcomes with pi_{x,y}(b) = (b + shift(x, y)) mod n.
  static CouplingBox cyclic(int n, int x_count, int y_count, const std::function<int(int, int)>& shift);

  int outcomes() const { return static_cast<int>(marginal_.size()); }
  int x_count() const { return static_cast<int>(pairing_.size()); }
  int y_count() const { return static_cast<int>(pairing_[0].size()); }
  const std::vector<double>& marginal() const { return marginal_; }
  int pair(int x, int y, int b) const { return pairing_[x][y][b]; }
  const std::vector<std::vector<std::vector<int>>>& pairing() const { return pairing_; }

 private:
  std::vector<double> marginal_;
  std::vector<std::vector<std::vector<int>>> pairing_;
};

/// p(a, b | x, y) = q(b) [a = pi_{x,y}(b)].
CCBox coupling_to_ccbox(const CouplingBox& box);

/// Sampler-backed coupling whose outputs are unitaries. Bob receives V, Haar
/// distributed on the block-diagonal group U(d_1) x U(d_2) x ..., and Alice
/// receives relabel(x, y) V*. Every relabel must lie in the same block group,
/// which keeps both marginals Haar for every input pair.
class HaarCoupling {
 public:
  struct Sample {
    UnitaryOperator alice;
    UnitaryOperator bob;
  };

  /// \p blocks partitions 0..dim-1 into the level sets of each block.
  HaarCoupling(int dim, std::vector<std::vector<UnitaryOperator>> relabel,
               std::vector<std::vector<int>> blocks, double tol = kTolNum);

  int dim() const { return dim_; }
  int x_count() const { return static_cast<int>(relabel_.size()); }
  int y_count() const { return static_cast<int>(relabel_[0].size()); }
  const UnitaryOperator& relabel(int x, int y) const { return relabel_[x][y]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  Sample sample(int x, int y, Rng& rng) const;

 private:
  int dim_;
  std::vector<std::vector<UnitaryOperator>> relabel_;
  std::vector<std::vector<int>> blocks_;
};

/// Single-block Haar coupling on U(n).
HaarCoupling haar_coupling(int n, int x_count, int y_count,
                           const std::function<UnitaryOperator(int, int)>& relabel);

}  // namespace cqbox
