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
#include "cqbox/boxes/measurement.hpp"

#include <algorithm>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"

namespace cqbox {

MeasurementBases computational_bases(const CQBox& box) {
  MeasurementBases out;
  const auto& s = box.structure();
  for (std::size_t p = 0; p < s.size(); ++p) {
    out.emplace_back(static_cast<std::size_t>(box.inputs().radices()[p]),
                     UnitaryOperator::identity(s.dim_of(s.labels()[p])));
  }
  return out;
}

CCBox induced_ccbox(const CQBox& box, const MeasurementBases& bases) {
  const auto& s = box.structure();
  const auto labels = s.labels();
  if (bases.size() != s.size()) throw DimensionError("one set of measurement bases per party is required");
  std::vector<int> output_sizes;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const int d = s.dim_of(labels[p]);
    if (static_cast<int>(bases[p].size()) != box.inputs().radices()[p]) {
      throw DimensionError("one measurement basis per input is required for party " + labels[p]);
    }
    for (const auto& u : bases[p]) {
      if (u.dim() != d) throw DimensionError("measurement basis dimension does not match party " + labels[p]);
    }
    output_sizes.push_back(d);
  }

  std::vector<double> table;
  table.reserve(box.size() * s.total_dim());
  for (std::size_t i = 0; i < box.size(); ++i) {
    const auto inputs = box.inputs().digits(i);
    DensityMatrix rho = box.output(i);
    for (std::size_t p = 0; p < s.size(); ++p) {
      rho = apply_local(rho, labels[p], bases[p][inputs[p]].adjoint());
    }
    // Round-off can leave tiny negative diagonal entries.
    for (Eigen::Index k = 0; k < rho.matrix().rows(); ++k) {
      table.push_back(std::max(0.0, rho.matrix()(k, k).real()));
    }
  }
  return CCBox(box.inputs().radices(), std::move(output_sizes), std::move(table));
}

double chsh_value(const CCBox& box) {
  if (box.parties() != 2 || box.inputs().radices() != std::vector<int>{2, 2} ||
      box.outputs().radices() != std::vector<int>{2, 2}) {
    throw DimensionError("CHSH needs a bipartite box with binary inputs and outputs");
  }
  auto correlator = [&](int x, int y) {
    double e = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) e += ((a + b) % 2 == 0 ? 1.0 : -1.0) * box.prob(a, b, x, y);
    }
    return e;
  };
  return correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
}

}  // namespace cqbox
