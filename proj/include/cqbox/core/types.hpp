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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace cqbox {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Global numeric tolerances. Dimensions stay small (<= a few dozen), so a
// single absolute tolerance is adequate everywhere.
inline constexpr double kTolNum = 1e-9;
inline constexpr double kTolNorm = 1e-9;

// Cap on the total Hilbert-space dimension produced by tensor().
inline constexpr std::size_t kDefaultMaxTotalDim = 4096;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace cqbox
