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

#include <cstdint>
#include <random>

#include "cqbox/core/state.hpp"

namespace cqbox {

struct RandomSeed {
  std::uint64_t value = 0;
};

using Rng = std::mt19937_64;

/// Independent generator for sub-stream \p stream of a seed.
Rng make_rng(RandomSeed seed, std::uint64_t stream = 0);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the columns
/// rephased so that R has a positive real diagonal.
UnitaryOperator haar_unitary(int n, Rng& rng);
UnitaryOperator haar_unitary(int n, RandomSeed seed);

/// Uniformly random pure state (first column of a Haar unitary).
StateVector random_state(const PartyStructure& structure, Rng& rng);

}  // namespace cqbox
