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

#include <array>
#include <vector>

#include <Eigen/Core>

#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/synthesis/strategy.hpp"

namespace cqbox {

/// rho = (U x V)(sum_i p_i |Phi_i><Phi_i|)(U x V)^dagger with the Bell
/// states in bell_state order.
struct BellCanonicalForm {
  UnitaryOperator alice;
  UnitaryOperator bob;
  std::array<double, 4> weights{};

  DensityMatrix reconstruct() const;
  /// (U x V)|Phi_i>.
  StateVector component(int index) const;
};

/// T_ij = Tr(rho sigma_i x sigma_j) for i, j in {x, y, z}.
Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho);
/// Rotation R with U sigma_j U^dagger = sum_i R_ij sigma_i.
Eigen::Matrix3d rotation_of(const UnitaryOperator& u);
/// SU(2) element whose rotation is r (r must be proper orthogonal).
UnitaryOperator lift_rotation(const Eigen::Matrix3d& r);

/// Canonical form of a two-qubit state with maximally mixed marginals.
/// Throws ValidationError if either marginal differs from I/2 by more than tol.
BellCanonicalForm bell_canonical_form(const DensityMatrix& rho, double tol = kTolNum);

struct MixtureInterval {
  double weight = 0.0;
  /// Selected component for every input.
  std::vector<int> choice;
};

struct MixtureSchedule {
  std::vector<MixtureInterval> intervals;

  /// Total interval weight assigned to each component of one input.
  std::vector<double> aggregate(std::size_t input, std::size_t components) const;
};

/// Common refinement of several discrete distributions laid out on [0, 1]:
/// the cut points are the union of all cumulative sums, and each interval
/// selects, for every input, the component its midpoint falls in.
MixtureSchedule mixture_align(const std::vector<std::vector<double>>& families);

/// Mixture of pure-output strategies, one per schedule interval.
struct MixedStrategy {
  MixtureSchedule schedule;
  std::vector<BellCanonicalForm> forms;
  std::vector<Strategy> strategies;

  /// The pure C-Q box realised on interval k.
  CQBox column(std::size_t k, const PartyStructure& structure, std::vector<int> input_sizes) const;
};

/// Any box of two-qubit states whose marginals are all maximally mixed.
MixedStrategy mixed_disordered_strategy(const CQBox& box, double tol = kTolNum);

/// Interval k draws from a seed derived from (seed, k).
SimulationResult simulate(const MixedStrategy& strategy, const SimulationOptions& options = {});

}  // namespace cqbox
