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
#include <span>
#include <vector>

#include "cqbox/core/mixed_radix.hpp"
#include "cqbox/core/types.hpp"

namespace cqbox {

/// Classical-input/classical-output box p(outputs | inputs) for any number of
/// parties. Party i has input alphabet 0..input_sizes[i]-1 and output
/// alphabet 0..output_sizes[i]-1.
class CCBox {
 public:
  /// \p table holds, for every input tuple in flat order, a probability
  /// distribution over output tuples in flat order.
  CCBox(std::vector<int> input_sizes, std::vector<int> output_sizes, std::vector<double> table,
        double tol = kTolNum);

  using ProbabilityFn = std::function<double(std::span<const int> outputs, std::span<const int> inputs)>;
  static CCBox from_function(std::vector<int> input_sizes, std::vector<int> output_sizes,
                             const ProbabilityFn& p, double tol = kTolNum);

  std::size_t parties() const { return inputs_.positions(); }
  const MixedRadix& inputs() const { return inputs_; }
  const MixedRadix& outputs() const { return outputs_; }
  const std::vector<double>& table() const { return table_; }

  std::span<const double> distribution(std::size_t input_index) const;
  double prob(std::span<const int> outputs, std::span<const int> inputs) const;
  /// Bipartite shorthand p(a, b | x, y).
  double prob(int a, int b, int x, int y) const;

  /// Distribution of the outputs of \p parties (flat over their output
  /// alphabets, in ascending party order) for one input tuple.
  std::vector<double> marginal(std::span<const std::size_t> parties, std::size_t input_index) const;

 private:
  MixedRadix inputs_;
  MixedRadix outputs_;
  std::vector<double> table_;
};

/// (a - b) mod 2 = x.y with uniform weight.
CCBox pr_box();
/// (a - b) mod n = x.y over binary inputs, outputs in 0..n-1, weight 1/n.
CCBox mod_box(int n);

/// Max over input tuples of the total-variation distance between two boxes
/// with identical alphabets.
double cc_box_distance(const CCBox& p, const CCBox& q);

}  // namespace cqbox
