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
#include "cqbox/boxes/cq_box.hpp"

#include <algorithm>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"

namespace cqbox {
namespace {

void check_shape(const PartyStructure& s, const MixedRadix& inputs, std::size_t count) {
  if (inputs.positions() != s.size()) {
    throw DimensionError("C-Q box needs one input alphabet per party");
  }
  if (count != inputs.size()) {
    throw DimensionError("C-Q box needs one output per input tuple");
  }
}

}  // namespace

CQBox::CQBox(PartyStructure structure, std::vector<int> input_sizes, std::vector<DensityMatrix> outputs)
    : structure_(std::move(structure)), inputs_(std::move(input_sizes)), outputs_(std::move(outputs)) {
  check_shape(structure_, inputs_, outputs_.size());
  for (const auto& rho : outputs_) {
    if (!(rho.structure() == structure_)) {
      throw DimensionError("C-Q box output has a different party structure");
    }
  }
}

CQBox::CQBox(PartyStructure structure, std::vector<int> input_sizes, std::vector<StateVector> outputs)
    : structure_(std::move(structure)), inputs_(std::move(input_sizes)), pure_(std::move(outputs)) {
  check_shape(structure_, inputs_, pure_.size());
  outputs_.reserve(pure_.size());
  for (const auto& psi : pure_) {
    if (!(psi.structure() == structure_)) {
      throw DimensionError("C-Q box output has a different party structure");
    }
    outputs_.push_back(DensityMatrix::from_pure(psi));
  }
}

CQBox CQBox::from_pure(PartyStructure structure, std::vector<int> input_sizes, const PureFn& fn) {
  const MixedRadix radix(input_sizes);
  std::vector<StateVector> outs;
  for (std::size_t i = 0; i < radix.size(); ++i) outs.push_back(fn(radix.digits(i)));
  return CQBox(std::move(structure), std::move(input_sizes), std::move(outs));
}

CQBox CQBox::from_mixed(PartyStructure structure, std::vector<int> input_sizes, const MixedFn& fn) {
  const MixedRadix radix(input_sizes);
  std::vector<DensityMatrix> outs;
  for (std::size_t i = 0; i < radix.size(); ++i) outs.push_back(fn(radix.digits(i)));
  return CQBox(std::move(structure), std::move(input_sizes), std::move(outs));
}

std::optional<StateVector> CQBox::pure_output(std::size_t input_index, double tol) const {
  if (!pure_.empty()) return pure_.at(input_index);
  return outputs_.at(input_index).as_pure(tol);
}

double cq_box_distance(const CQBox& p, const CQBox& q) {
  if (!(p.structure() == q.structure()) || !(p.inputs() == q.inputs())) {
    throw DimensionError("C-Q boxes have different structures or alphabets");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = 0.0;
    if (p.is_pure() && q.is_pure()) {
      d = trace_distance(*p.pure_output(i), *q.pure_output(i));
    } else {
      d = trace_distance(p.output(i), q.output(i));
    }
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace cqbox
