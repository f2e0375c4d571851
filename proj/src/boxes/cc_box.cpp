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
#include "cqbox/boxes/cc_box.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqbox/core/error.hpp"

namespace cqbox {

CCBox::CCBox(std::vector<int> input_sizes, std::vector<int> output_sizes, std::vector<double> table,
             double tol)
    : inputs_(std::move(input_sizes)), outputs_(std::move(output_sizes)), table_(std::move(table)) {
  if (inputs_.positions() != outputs_.positions() || inputs_.positions() == 0) {
    throw DimensionError("box needs one input and one output alphabet per party");
  }
  if (table_.size() != inputs_.size() * outputs_.size()) {
    throw DimensionError("probability table has " + std::to_string(table_.size()) +
                         " entries, expected " + std::to_string(inputs_.size() * outputs_.size()));
  }
  for (std::size_t in = 0; in < inputs_.size(); ++in) {
    double sum = 0.0;
    for (double p : distribution(in)) {
      if (!(p >= 0.0)) {
        throw ValidationError("negative probability in box table");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw ValidationError("distribution for input " + std::to_string(in) + " sums to " +
                            std::to_string(sum));
    }
  }
}

CCBox CCBox::from_function(std::vector<int> input_sizes, std::vector<int> output_sizes,
                           const ProbabilityFn& p, double tol) {
  const MixedRadix in(input_sizes);
  const MixedRadix out(output_sizes);
  std::vector<double> table;
  table.reserve(in.size() * out.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto xs = in.digits(i);
    for (std::size_t o = 0; o < out.size(); ++o) {
      const auto as = out.digits(o);
      table.push_back(p(as, xs));
    }
  }
  return CCBox(std::move(input_sizes), std::move(output_sizes), std::move(table), tol);
}

std::span<const double> CCBox::distribution(std::size_t input_index) const {
  return std::span<const double>(table_).subspan(input_index * outputs_.size(), outputs_.size());
}

double CCBox::prob(std::span<const int> outputs, std::span<const int> inputs) const {
  return table_[inputs_.index(inputs) * outputs_.size() + outputs_.index(outputs)];
}

double CCBox::prob(int a, int b, int x, int y) const {
  const int outs[] = {a, b};
  const int ins[] = {x, y};
  return prob(outs, ins);
}

std::vector<double> CCBox::marginal(std::span<const std::size_t> parties,
                                    std::size_t input_index) const {
  std::vector<int> radices;
  for (std::size_t p : parties) radices.push_back(outputs_.radices().at(p));
  const MixedRadix sub(radices);
  std::vector<double> out(sub.size(), 0.0);
  const auto dist = distribution(input_index);
  std::vector<int> picked(parties.size());
  for (std::size_t o = 0; o < outputs_.size(); ++o) {
    const auto digits = outputs_.digits(o);
    for (std::size_t k = 0; k < parties.size(); ++k) picked[k] = digits[parties[k]];
    out[sub.index(picked)] += dist[o];
  }
  return out;
}

CCBox mod_box(int n) {
  if (n < 2) {
    throw ParameterError("mod box needs n >= 2 outputs");
  }
  return CCBox::from_function({2, 2}, {n, n}, [n](std::span<const int> ab, std::span<const int> xy) {
    const int diff = ((ab[0] - ab[1]) % n + n) % n;
    return diff == xy[0] * xy[1] ? 1.0 / n : 0.0;
  });
}

CCBox pr_box() { return mod_box(2); }

double cc_box_distance(const CCBox& p, const CCBox& q) {
  if (!(p.inputs() == q.inputs()) || !(p.outputs() == q.outputs())) {
    throw DimensionError("boxes have different alphabets");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < p.inputs().size(); ++i) {
    const auto a = p.distribution(i);
    const auto b = q.distribution(i);
    double tv = 0.0;
    for (std::size_t o = 0; o < a.size(); ++o) tv += std::abs(a[o] - b[o]);
    worst = std::max(worst, 0.5 * tv);
  }
  return worst;
}

}  // namespace cqbox
