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
#include <string>
#include <variant>
#include <vector>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/coupling.hpp"
#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/core/random.hpp"

namespace cqbox {

/// Unitary chosen by one party from its input and its resource outcome.
using LocalMap = std::function<UnitaryOperator(int input, int outcome)>;

/// A C-C resource, a pre-shared bipartite state and the local operations the
/// two parties apply. For finite resources Alice applies
/// dressing_alice[x] * alice(x, a) and Bob dressing_bob[y] * bob(y, b). For a
/// Haar coupling the sampled pair (S_A, S_B) is used instead, as
/// dressing_alice[x] * S_A * frame_alice and dressing_bob[y] * S_B.
class Strategy {
 public:
  using Resource = std::variant<CCBox, CouplingBox, HaarCoupling>;

  Strategy(std::string name, CCBox box, QuantumState shared, LocalMap alice, LocalMap bob);
  Strategy(std::string name, CouplingBox box, QuantumState shared, LocalMap alice, LocalMap bob);
  Strategy(std::string name, HaarCoupling coupling, QuantumState shared,
           UnitaryOperator frame_alice);

  /// Copy with input-local unitaries applied after the resource-conditioned
  /// ones; they compose on the left of any dressing already present.
  Strategy dressed(const std::vector<UnitaryOperator>& alice, const std::vector<UnitaryOperator>& bob) const;

  const std::string& name() const { return name_; }
  const Resource& resource() const { return resource_; }
  const QuantumState& shared() const { return shared_; }
  int x_count() const { return x_count_; }
  int y_count() const { return y_count_; }
  bool is_sampled() const { return std::holds_alternative<HaarCoupling>(resource_); }

  UnitaryOperator alice_op(int x, int a) const;
  UnitaryOperator bob_op(int y, int b) const;
  /// Both operations for one draw of a Haar coupling.
  std::pair<UnitaryOperator, UnitaryOperator> sampled_ops(int x, int y, Rng& rng) const;

  const std::vector<UnitaryOperator>& dressing_alice() const { return dressing_alice_; }
  const std::vector<UnitaryOperator>& dressing_bob() const { return dressing_bob_; }

  /// No-signalling of the resource. Finite boxes are checked on their
  /// marginals; a Haar coupling is checked structurally, since each party's
  /// marginal is Haar on the block group exactly when every relabelling lies
  /// in that group.
  NoSignallingReport resource_no_signalling(double tol = kTolNum) const;

 private:
  void init_inputs();

  std::string name_;
  Resource resource_;
  QuantumState shared_;
  LocalMap alice_;
  LocalMap bob_;
  UnitaryOperator frame_alice_;
  std::vector<UnitaryOperator> dressing_alice_;
  std::vector<UnitaryOperator> dressing_bob_;
  int x_count_ = 0;
  int y_count_ = 0;
};

struct SimulationOptions {
  /// Draws per input pair for Haar-coupled strategies.
  std::size_t samples = 1000;
  RandomSeed seed{};
};

struct SimulationResult {
  /// Exact mixture for finite resources, empirical mixture for sampled ones.
  CQBox box;
  bool sampled = false;
  std::size_t samples = 0;
  /// Smallest fidelity between any branch (outcome pair or sample) and the
  /// first branch of the same input; 1 means every branch is the same state.
  double min_branch_fidelity = 1.0;
};

/// rho^{x,y} = sum_{a,b} p(a,b|x,y) (U^{x,a} x V^{y,b}) shared (.)^dagger.
/// Input pair i of a sampled strategy draws from stream i of the seed.
SimulationResult simulate(const Strategy& strategy, const SimulationOptions& options = {});

}  // namespace cqbox
