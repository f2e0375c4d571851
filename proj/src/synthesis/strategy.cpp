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
#include "cqbox/synthesis/strategy.hpp"

#include <algorithm>
#include <cmath>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"

namespace cqbox {
namespace {

const PartyStructure& bipartite_structure(const QuantumState& shared) {
  const PartyStructure& s = structure_of(shared);
  if (s.size() != 2) throw DimensionError("strategies share a bipartite state");
  return s;
}

// Alice's input-marginal spread across y (and Bob's across x) for a pairing.
NoSignallingReport coupling_report(const CouplingBox& c, double tol) {
  NoSignallingReport report;
  report.tolerance = tol;
  const int k = c.outcomes();
  for (int x = 0; x < c.x_count(); ++x) {
    std::vector<std::vector<double>> marginals;
    for (int y = 0; y < c.y_count(); ++y) {
      std::vector<double> m(static_cast<std::size_t>(k), 0.0);
      for (int b = 0; b < k; ++b) m[c.pair(x, y, b)] += c.marginal()[b];
      marginals.push_back(std::move(m));
    }
    for (std::size_t i = 1; i < marginals.size(); ++i) {
      double tv = 0.0;
      for (int a = 0; a < k; ++a) tv += std::abs(marginals[i][a] - marginals[0][a]);
      report.worst_violation = std::max(report.worst_violation, tv / 2);
    }
  }
  // Bob's outcome is drawn from the shared marginal under every input.
  report.pass = report.worst_violation <= tol;
  return report;
}

NoSignallingReport haar_report(const HaarCoupling& hc, double tol) {
  NoSignallingReport report;
  report.tolerance = tol;
  std::vector<int> block_of(static_cast<std::size_t>(hc.dim()));
  for (std::size_t k = 0; k < hc.blocks().size(); ++k) {
    for (int level : hc.blocks()[k]) block_of[level] = static_cast<int>(k);
  }
  for (int x = 0; x < hc.x_count(); ++x) {
    for (int y = 0; y < hc.y_count(); ++y) {
      const ComplexMatrix& r = hc.relabel(x, y).matrix();
      for (int i = 0; i < hc.dim(); ++i) {
        for (int j = 0; j < hc.dim(); ++j) {
          if (block_of[i] != block_of[j]) {
            report.worst_violation = std::max(report.worst_violation, std::abs(r(i, j)));
          }
        }
      }
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

}  // namespace

Strategy::Strategy(std::string name, CCBox box, QuantumState shared, LocalMap alice, LocalMap bob)
    : name_(std::move(name)),
      resource_(std::move(box)),
      shared_(std::move(shared)),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      frame_alice_(UnitaryOperator::identity(1)) {
  const auto& cc = std::get<CCBox>(resource_);
  if (cc.parties() != 2) throw DimensionError("strategies use a bipartite C-C box");
  init_inputs();
}

Strategy::Strategy(std::string name, CouplingBox box, QuantumState shared, LocalMap alice, LocalMap bob)
    : name_(std::move(name)),
      resource_(std::move(box)),
      shared_(std::move(shared)),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      frame_alice_(UnitaryOperator::identity(1)) {
  init_inputs();
}

Strategy::Strategy(std::string name, HaarCoupling coupling, QuantumState shared, UnitaryOperator frame_alice)
    : name_(std::move(name)),
      resource_(std::move(coupling)),
      shared_(std::move(shared)),
      frame_alice_(std::move(frame_alice)) {
  init_inputs();
  const auto& hc = std::get<HaarCoupling>(resource_);
  const auto& s = bipartite_structure(shared_);
  const auto labels = s.labels();
  if (hc.dim() != s.dim_of(labels[0]) || hc.dim() != s.dim_of(labels[1]) || frame_alice_.dim() != hc.dim()) {
    throw DimensionError("Haar coupling dimension does not match the shared state");
  }
}

void Strategy::init_inputs() {
  const auto& s = bipartite_structure(shared_);
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CCBox>) {
          x_count_ = r.inputs().radices()[0];
          y_count_ = r.inputs().radices()[1];
        } else {
          x_count_ = r.x_count();
          y_count_ = r.y_count();
        }
      },
      resource_);
  const auto labels = s.labels();
  dressing_alice_.assign(static_cast<std::size_t>(x_count_), UnitaryOperator::identity(s.dim_of(labels[0])));
  dressing_bob_.assign(static_cast<std::size_t>(y_count_), UnitaryOperator::identity(s.dim_of(labels[1])));
}

Strategy Strategy::dressed(const std::vector<UnitaryOperator>& alice, const std::vector<UnitaryOperator>& bob) const {
  if (alice.size() != dressing_alice_.size() || bob.size() != dressing_bob_.size()) {
    throw DimensionError("one dressing unitary per input is required");
  }
  Strategy out = *this;
  for (std::size_t x = 0; x < alice.size(); ++x) {
    if (alice[x].dim() != dressing_alice_[x].dim()) throw DimensionError("dressing dimension mismatch");
    out.dressing_alice_[x] = alice[x] * dressing_alice_[x];
  }
  for (std::size_t y = 0; y < bob.size(); ++y) {
    if (bob[y].dim() != dressing_bob_[y].dim()) throw DimensionError("dressing dimension mismatch");
    out.dressing_bob_[y] = bob[y] * dressing_bob_[y];
  }
  return out;
}

UnitaryOperator Strategy::alice_op(int x, int a) const {
  if (is_sampled()) throw ValidationError("sampled strategies have no finite outcome map");
  return dressing_alice_.at(x) * alice_(x, a);
}

UnitaryOperator Strategy::bob_op(int y, int b) const {
  if (is_sampled()) throw ValidationError("sampled strategies have no finite outcome map");
  return dressing_bob_.at(y) * bob_(y, b);
}

std::pair<UnitaryOperator, UnitaryOperator> Strategy::sampled_ops(int x, int y, Rng& rng) const {
  const auto& hc = std::get<HaarCoupling>(resource_);
  auto s = hc.sample(x, y, rng);
  return {dressing_alice_.at(x) * s.alice * frame_alice_, dressing_bob_.at(y) * s.bob};
}

NoSignallingReport Strategy::resource_no_signalling(double tol) const {
  return std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CCBox>) {
          return cc_no_signalling(r, tol);
        } else if constexpr (std::is_same_v<T, CouplingBox>) {
          return coupling_report(r, tol);
        } else {
          return haar_report(r, tol);
        }
      },
      resource_);
}

namespace {

// Accumulates the branches of one input pair.
class BranchMixer {
 public:
  BranchMixer(const QuantumState& shared, std::string alice, std::string bob)
      : shared_(shared), alice_(std::move(alice)), bob_(std::move(bob)) {
    const auto n = static_cast<Eigen::Index>(structure_of(shared).total_dim());
    sum_ = ComplexMatrix::Zero(n, n);
  }

  void add(double weight, const UnitaryOperator& ua, const UnitaryOperator& ub) {
    if (ua.dim() != structure_of(shared_).dim_of(alice_) || ub.dim() != structure_of(shared_).dim_of(bob_)) {
      throw DimensionError("local unitary dimension does not match the shared state");
    }
    const QuantumState out = apply_local(apply_local(shared_, alice_, ua), bob_, ub);
    if (const auto* psi = std::get_if<StateVector>(&out)) {
      sum_.noalias() += weight * psi->amplitudes() * psi->amplitudes().adjoint();
    } else {
      sum_ += weight * std::get<DensityMatrix>(out).matrix();
    }
    if (!first_) {
      first_ = out;
    } else {
      min_fidelity_ = std::min(min_fidelity_, fidelity(*first_, out));
    }
  }

  DensityMatrix result() const {
    const ComplexMatrix h = 0.5 * (sum_ + sum_.adjoint());
    return DensityMatrix(h, structure_of(shared_));
  }
  double min_fidelity() const { return min_fidelity_; }

 private:
  const QuantumState& shared_;
  std::string alice_;
  std::string bob_;
  ComplexMatrix sum_;
  std::optional<QuantumState> first_;
  double min_fidelity_ = 1.0;
};

}  // namespace

SimulationResult simulate(const Strategy& strategy, const SimulationOptions& options) {
  const PartyStructure& s = bipartite_structure(strategy.shared());
  const auto labels = s.labels();
  std::vector<DensityMatrix> outputs;
  double min_fid = 1.0;
  const int xs = strategy.x_count();
  const int ys = strategy.y_count();
  if (strategy.is_sampled() && options.samples == 0) throw ParameterError("sample budget must be positive");

  for (int x = 0; x < xs; ++x) {
    for (int y = 0; y < ys; ++y) {
      BranchMixer mix(strategy.shared(), labels[0], labels[1]);
      std::visit(
          [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, CCBox>) {
              const int na = r.outputs().radices()[0];
              const int nb = r.outputs().radices()[1];
              for (int a = 0; a < na; ++a) {
                for (int b = 0; b < nb; ++b) {
                  const double p = r.prob(a, b, x, y);
                  if (p > 0.0) mix.add(p, strategy.alice_op(x, a), strategy.bob_op(y, b));
                }
              }
            } else if constexpr (std::is_same_v<T, CouplingBox>) {
              for (int b = 0; b < r.outcomes(); ++b) {
                const double p = r.marginal()[b];
                if (p > 0.0) mix.add(p, strategy.alice_op(x, r.pair(x, y, b)), strategy.bob_op(y, b));
              }
            } else {
              Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(x * ys + y));
              const double w = 1.0 / static_cast<double>(options.samples);
              for (std::size_t t = 0; t < options.samples; ++t) {
                auto [ua, ub] = strategy.sampled_ops(x, y, rng);
                mix.add(w, ua, ub);
              }
            }
          },
          strategy.resource());
      outputs.push_back(mix.result());
      min_fid = std::min(min_fid, mix.min_fidelity());
    }
  }
  SimulationResult result{CQBox(s, {xs, ys}, std::move(outputs)), strategy.is_sampled(),
                          strategy.is_sampled() ? options.samples : 0, min_fid};
  return result;
}

}  // namespace cqbox
