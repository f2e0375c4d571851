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

#include <string>
#include <vector>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/cq_box.hpp"

namespace cqbox {

/// One observed dependence of a subgroup's marginal on outside inputs.
struct SignallingWitness {
  std::vector<std::string> subgroup;
  /// Inputs of the subgroup members, in subgroup order.
  std::vector<int> fixed_inputs;
  /// Two settings of the complementary inputs whose marginals differ.
  std::vector<int> varied_from;
  std::vector<int> varied_to;
  /// Trace distance (states) or total variation (distributions).
  double distance = 0.0;
};

struct NoSignallingReport {
  bool pass = true;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  /// Worst witness of every subgroup whose violation exceeds the tolerance.
  std::vector<SignallingWitness> witnesses;
};

/// Checks every proper nonempty subgroup of parties: for each fixing of the
/// subgroup's inputs, its output marginal must not depend on the other
/// parties' inputs. Party labels default to A, B, C, ...
NoSignallingReport cc_no_signalling(const CCBox& box, double tol = kTolNum);
/// Same condition on reduced density matrices, measured in trace distance.
NoSignallingReport cq_no_signalling(const CQBox& box, double tol = kTolNum);

}  // namespace cqbox
