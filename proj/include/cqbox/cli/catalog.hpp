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

#include <optional>
#include <string>
#include <vector>

#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/cli/document.hpp"
#include "cqbox/core/random.hpp"

namespace cqbox::cli {

/// Parameters shared by the named constructions; unset values take each
/// construction's default.
struct SynthParams {
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> dim;
  std::optional<int> levels;
  std::optional<double> alpha;
  std::optional<double> theta;
  /// Target family for general-pure and mixed-disordered; generated from the
  /// seed when absent.
  std::optional<CQBox> family;
  std::size_t samples = 100;
  RandomSeed seed{1};
  double tol = kTolNum;
};

struct SynthOutcome {
  std::string construction;
  Json parameters;
  CQBox target;
  CQBox simulated;
  Json metrics;
  Json certificate;
  bool pass = false;
};

const std::vector<std::string>& construction_names();

/// Builds the named strategy, simulates it and compares with the analytic
/// target. Throws ParameterError for unknown names or invalid parameters.
SynthOutcome synthesize(const std::string& name, const SynthParams& params);

}  // namespace cqbox::cli
