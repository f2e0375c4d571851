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

#include <span>
#include <string>
#include <string_view>

#include "cqbox/core/state.hpp"

namespace cqbox {

// Kronecker products. Throws DimensionError if the composite dimension would
// exceed max_total_dim and LabelError on clashing party labels.
StateVector tensor(std::span<const StateVector> states, std::size_t max_total_dim = kDefaultMaxTotalDim);
DensityMatrix tensor(std::span<const DensityMatrix> states,
                     std::size_t max_total_dim = kDefaultMaxTotalDim);
/// Mixed-kind lists are rejected with ValidationError.
QuantumState tensor(std::span<const QuantumState> states,
                    std::size_t max_total_dim = kDefaultMaxTotalDim);
StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the parties in \p keep (kept in canonical order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep);
DensityMatrix partial_trace(const StateVector& psi, std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep);
DensityMatrix partial_trace(const StateVector& psi, std::initializer_list<std::string> keep);

/// Applies u to one party, identity elsewhere.
StateVector apply_local(const StateVector& psi, std::string_view party, const UnitaryOperator& u);
DensityMatrix apply_local(const DensityMatrix& rho, std::string_view party, const UnitaryOperator& u);
QuantumState apply_local(const QuantumState& state, std::string_view party, const UnitaryOperator& u);

// Uhlmann fidelity (squared convention, F(psi, phi) = |<psi|phi>|^2) and trace
// distance. Both operands must share the same party structure.
double fidelity(const StateVector& p, const StateVector& q);
double fidelity(const StateVector& p, const DensityMatrix& q);
double fidelity(const DensityMatrix& p, const StateVector& q);
double fidelity(const DensityMatrix& p, const DensityMatrix& q);
double fidelity(const QuantumState& p, const QuantumState& q);

double trace_distance(const StateVector& p, const StateVector& q);
double trace_distance(const DensityMatrix& p, const DensityMatrix& q);
double trace_distance(const QuantumState& p, const QuantumState& q);

}  // namespace cqbox
