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

#include <vector>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/cq_box.hpp"

namespace cqbox {

/// Projective measurement bases: bases[party][input] is a unitary whose
/// columns are the basis vectors, outcome k being column k.
using MeasurementBases = std::vector<std::vector<UnitaryOperator>>;

/// Computational basis for every party and every input.
MeasurementBases computational_bases(const CQBox& box);

/// Born-rule C-C box obtained when each party measures its share of the
/// output in the basis selected by its own input.
CCBox induced_ccbox(const CQBox& box, const MeasurementBases& bases);

/// E(0,0) + E(0,1) + E(1,0) - E(1,1) with correlators built from (-1)^(a+b).
double chsh_value(const CCBox& box);

}  // namespace cqbox
