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
#include <optional>
#include <span>
#include <vector>

#include "cqbox/core/mixed_radix.hpp"
#include "cqbox/core/state.hpp"

namespace cqbox {

/// Classical-input/quantum-output box: one input alphabet per party and an
/// output state on the common party structure for every input tuple.
class CQBox {
 public:
  CQBox(PartyStructure structure, std::vector<int> input_sizes, std::vector<DensityMatrix> outputs);
  /// Pure-output box; the vectors are kept alongside their density matrices.
  CQBox(PartyStructure structure, std::vector<int> input_sizes, std::vector<StateVector> outputs);

  using PureFn = std::function<StateVector(std::span<const int> inputs)>;
  using MixedFn = std::function<DensityMatrix(std::span<const int> inputs)>;
  static CQBox from_pure(PartyStructure structure, std::vector<int> input_sizes, const PureFn& fn);
  static CQBox from_mixed(PartyStructure structure, std::vector<int> input_sizes, const MixedFn& fn);

  const PartyStructure& structure() const { return structure_; }
  const MixedRadix& inputs() const { return inputs_; }
  std::size_t size() const { return outputs_.size(); }

  const DensityMatrix& output(std::size_t input_index) const { return outputs_.at(input_index); }
  const DensityMatrix& output(std::span<const int> inputs) const { return outputs_.at(inputs_.index(inputs)); }
  const DensityMatrix& output(std::initializer_list<int> inputs) const {
    return output(std::span<const int>(inputs.begin(), inputs.size()));
  }

  bool is_pure() const { return !pure_.empty(); }
  /// Stored vector for pure boxes, otherwise the dominant eigenvector when the
  /// output is pure within tol.
  std::optional<StateVector> pure_output(std::size_t input_index, double tol = kTolNum) const;

 private:
  PartyStructure structure_;
  MixedRadix inputs_;
  std::vector<DensityMatrix> outputs_;
  std::vector<StateVector> pure_;
};

/// Max over input tuples of the trace distance between outputs.
double cq_box_distance(const CQBox& p, const CQBox& q);

}  // namespace cqbox
