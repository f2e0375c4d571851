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
#include "cqbox/boxes/no_signalling.hpp"

#include <cmath>
#include <functional>

#include "cqbox/core/operations.hpp"

namespace cqbox {
namespace {

// Drives the subgroup enumeration shared by the classical and quantum
// checks. \p distance_fn(subgroup, input_a, input_b) compares the subgroup's
// marginals for two full input tuples.
template <typename MarginalFn, typename DistanceFn>
NoSignallingReport check_subgroups(const MixedRadix& inputs, const std::vector<std::string>& labels,
                                   double tol, MarginalFn marginal_fn, DistanceFn distance_fn) {
  NoSignallingReport report;
  report.tolerance = tol;
  const std::size_t k = inputs.positions();
  const std::size_t masks = std::size_t{1} << k;
  for (std::size_t mask = 1; mask + 1 < masks; ++mask) {
    std::vector<std::size_t> members;
    std::vector<std::size_t> others;
    for (std::size_t p = 0; p < k; ++p) ((mask >> p) & 1u ? members : others).push_back(p);

    std::vector<int> in_radix;
    std::vector<int> out_radix;
    for (std::size_t p : members) in_radix.push_back(inputs.radices()[p]);
    for (std::size_t p : others) out_radix.push_back(inputs.radices()[p]);
    const MixedRadix fixed(in_radix);
    const MixedRadix varied(out_radix);

    SignallingWitness worst;
    std::vector<int> full(k);
    for (std::size_t f = 0; f < fixed.size(); ++f) {
      const auto fixed_digits = fixed.digits(f);
      using Marginal = decltype(marginal_fn(members, std::size_t{0}));
      std::vector<Marginal> marginals;
      for (std::size_t v = 0; v < varied.size(); ++v) {
        const auto varied_digits = varied.digits(v);
        for (std::size_t i = 0; i < members.size(); ++i) full[members[i]] = fixed_digits[i];
        for (std::size_t i = 0; i < others.size(); ++i) full[others[i]] = varied_digits[i];
        marginals.push_back(marginal_fn(members, inputs.index(full)));
      }
      for (std::size_t i = 0; i < marginals.size(); ++i) {
        for (std::size_t j = i + 1; j < marginals.size(); ++j) {
          const double d = distance_fn(marginals[i], marginals[j]);
          if (d > worst.distance) {
            worst.distance = d;
            worst.fixed_inputs = fixed_digits;
            worst.varied_from = varied.digits(i);
            worst.varied_to = varied.digits(j);
          }
        }
      }
    }
    if (worst.distance > report.worst_violation) report.worst_violation = worst.distance;
    if (worst.distance > tol) {
      for (std::size_t p : members) worst.subgroup.push_back(labels[p]);
      report.witnesses.push_back(std::move(worst));
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

std::vector<std::string> lettered_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(1, static_cast<char>('A' + i));
  return out;
}

}  // namespace

NoSignallingReport cc_no_signalling(const CCBox& box, double tol) {
  return check_subgroups(
      box.inputs(), lettered_labels(box.parties()), tol,
      [&](const std::vector<std::size_t>& members, std::size_t input_index) {
        return box.marginal(members, input_index);
      },
      [](const std::vector<double>& p, const std::vector<double>& q) {
        double tv = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
        return 0.5 * tv;
      });
}

NoSignallingReport cq_no_signalling(const CQBox& box, double tol) {
  const auto labels = box.structure().labels();
  return check_subgroups(
      box.inputs(), labels, tol,
      [&](const std::vector<std::size_t>& members, std::size_t input_index) {
        std::vector<std::string> keep;
        for (std::size_t p : members) keep.push_back(labels[p]);
        return partial_trace(box.output(input_index), keep);
      },
      [](const DensityMatrix& p, const DensityMatrix& q) { return trace_distance(p, q); });
}

}  // namespace cqbox
