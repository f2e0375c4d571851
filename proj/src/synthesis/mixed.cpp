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
#include "cqbox/synthesis/mixed.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"

namespace cqbox {
namespace {

constexpr double kDiagonalTol = 1e-12;
constexpr double kMergeTol = 1e-14;
constexpr double kNegligibleWeight = 1e-15;

std::array<ComplexMatrix, 3> paulis() {
  return {pauli_x().matrix(), pauli_y().matrix(), pauli_z().matrix()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

DensityMatrix BellCanonicalForm::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(4);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < 4; ++i) {
    const ComplexVector v = component(i).amplitudes();
    sum += weights[i] * v * v.adjoint();
  }
  return DensityMatrix::assume_valid(0.5 * (sum + sum.adjoint()), PartyStructure::bipartite(2, 2));
}

StateVector BellCanonicalForm::component(int index) const {
  return apply_local(apply_local(bell_state(index), "A", alice), "B", bob);
}

Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho) {
  const auto s = paulis();
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t(i, j) = (rho.matrix() * kron(s[i], s[j])).trace().real();
  }
  return t;
}

Eigen::Matrix3d rotation_of(const UnitaryOperator& u) {
  if (u.dim() != 2) throw DimensionError("rotation_of needs a qubit unitary");
  const auto s = paulis();
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (s[i] * u.matrix() * s[j] * u.matrix().adjoint()).trace().real();
    }
  }
  return r;
}

UnitaryOperator lift_rotation(const Eigen::Matrix3d& r) {
  const Eigen::Quaterniond q(r);
  const auto s = paulis();
  const ComplexMatrix u = q.w() * ComplexMatrix::Identity(2, 2) -
                          Complex(0.0, 1.0) * (q.x() * s[0] + q.y() * s[1] + q.z() * s[2]);
  return UnitaryOperator(u);
}

BellCanonicalForm bell_canonical_form(const DensityMatrix& rho, double tol) {
  const PartyStructure& s = rho.structure();
  if (s.size() != 2 || s.total_dim() != 4) throw DimensionError("Bell canonical form needs two qubits");
  const auto labels = s.labels();
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  for (const auto& label : labels) {
    if ((partial_trace(rho, {label}).matrix() - half).cwiseAbs().maxCoeff() > tol) {
      throw ValidationError("marginal of party " + label + " is not maximally mixed");
    }
  }

  const Eigen::Matrix3d t = correlation_matrix(rho);
  Eigen::Matrix3d off = t;
  off.diagonal().setZero();
  UnitaryOperator ua = UnitaryOperator::identity(2);
  UnitaryOperator ub = UnitaryOperator::identity(2);
  if (off.cwiseAbs().maxCoeff() > kDiagonalTol) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d p = svd.matrixU();
    Eigen::Matrix3d q = svd.matrixV();
    // Move reflections into the sign of the smallest singular value.
    if (p.determinant() < 0) p.col(2) *= -1.0;
    if (q.determinant() < 0) q.col(2) *= -1.0;
    ua = lift_rotation(p);
    ub = lift_rotation(q);
  }

  const ComplexMatrix local = kron(ua.matrix(), ub.matrix());
  const ComplexMatrix diag = local.adjoint() * rho.matrix() * local;
  BellCanonicalForm form{ua, ub, {}};
  for (int i = 0; i < 4; ++i) {
    const ComplexVector v = bell_state(i).amplitudes();
    form.weights[i] = std::max(0.0, (v.adjoint() * diag * v)(0, 0).real());
  }
  return form;
}

std::vector<double> MixtureSchedule::aggregate(std::size_t input, std::size_t components) const {
  std::vector<double> out(components, 0.0);
  for (const auto& iv : intervals) out.at(static_cast<std::size_t>(iv.choice.at(input))) += iv.weight;
  return out;
}

MixtureSchedule mixture_align(const std::vector<std::vector<double>>& families) {
  if (families.empty()) throw ParameterError("mixture alignment needs at least one family");
  std::vector<std::vector<double>> cumulative;
  std::vector<double> cuts = {0.0, 1.0};
  for (const auto& family : families) {
    if (family.empty()) throw ParameterError("mixture family is empty");
    std::vector<double> cum;
    double run = 0.0;
    for (double p : family) {
      if (p < 0.0) throw ParameterError("mixture probabilities must be nonnegative");
      run += p;
      cum.push_back(run);
    }
    if (std::abs(run - 1.0) > kTolNum) throw ParameterError("mixture probabilities must sum to 1");
    cum.back() = 1.0;
    cuts.insert(cuts.end(), cum.begin(), cum.end() - 1);
    cumulative.push_back(std::move(cum));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> points = {0.0};
  for (double c : cuts) {
    if (c > points.back() + kMergeTol) points.push_back(c);
  }
  points.back() = 1.0;

  MixtureSchedule schedule;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double mid = 0.5 * (points[k] + points[k + 1]);
    MixtureInterval iv{points[k + 1] - points[k], {}};
    for (const auto& cum : cumulative) {
      const auto it = std::upper_bound(cum.begin(), cum.end(), mid);
      iv.choice.push_back(static_cast<int>(std::min<std::ptrdiff_t>(it - cum.begin(), cum.size() - 1)));
    }
    schedule.intervals.push_back(std::move(iv));
  }
  return schedule;
}

CQBox MixedStrategy::column(std::size_t k, const PartyStructure& structure, std::vector<int> input_sizes) const {
  const auto& iv = schedule.intervals.at(k);
  std::vector<StateVector> outs;
  for (std::size_t i = 0; i < forms.size(); ++i) outs.push_back(forms[i].component(iv.choice[i]));
  return CQBox(structure, std::move(input_sizes), std::move(outs));
}

MixedStrategy mixed_disordered_strategy(const CQBox& box, double tol) {
  if (box.inputs().positions() != 2) throw DimensionError("mixed construction needs a bipartite box");
  const int xs = box.inputs().radices()[0];
  const int ys = box.inputs().radices()[1];
  MixedStrategy out;
  std::vector<std::vector<double>> families;
  for (std::size_t i = 0; i < box.size(); ++i) {
    BellCanonicalForm form = bell_canonical_form(box.output(i), tol);
    double total = 0.0;
    for (double& w : form.weights) {
      if (w < kNegligibleWeight) w = 0.0;
      total += w;
    }
    for (double& w : form.weights) w /= total;
    families.emplace_back(form.weights.begin(), form.weights.end());
    out.forms.push_back(std::move(form));
  }
  out.schedule = mixture_align(families);
  for (const auto& iv : out.schedule.intervals) {
    std::vector<std::vector<UnitaryOperator>> targets(xs);
    for (int x = 0; x < xs; ++x) {
      for (int y = 0; y < ys; ++y) {
        const auto& f = out.forms[static_cast<std::size_t>(x * ys + y)];
        const int c = iv.choice[static_cast<std::size_t>(x * ys + y)];
        targets[x].push_back(f.alice * bell_frame(c) * f.bob.transpose());
      }
    }
    out.strategies.push_back(max_entangled_strategy(targets, 2));
  }
  return out;
}

SimulationResult simulate(const MixedStrategy& strategy, const SimulationOptions& options) {
  std::optional<CQBox> first;
  std::vector<ComplexMatrix> sums;
  SimulationResult result{CQBox(PartyStructure::bipartite(2, 2), {1, 1},
                                std::vector<StateVector>{bell_state(0)}),
                          false, 0, 1.0};
  for (std::size_t k = 0; k < strategy.strategies.size(); ++k) {
    SimulationOptions opt = options;
    opt.seed = RandomSeed{options.seed.value + 0x9E3779B97F4A7C15ULL * (k + 1)};
    SimulationResult part = simulate(strategy.strategies[k], opt);
    const double w = strategy.schedule.intervals[k].weight;
    if (sums.empty()) sums.assign(part.box.size(), ComplexMatrix::Zero(4, 4));
    for (std::size_t i = 0; i < part.box.size(); ++i) sums[i] += w * part.box.output(i).matrix();
    result.sampled = result.sampled || part.sampled;
    result.samples = part.samples;
    result.min_branch_fidelity = std::min(result.min_branch_fidelity, part.min_branch_fidelity);
    if (!first) first = part.box;
  }
  if (!first) throw ValidationError("mixed strategy has no intervals");
  std::vector<DensityMatrix> outs;
  for (const auto& m : sums) outs.emplace_back(0.5 * (m + m.adjoint()), first->structure());
  result.box = CQBox(first->structure(), first->inputs().radices(), std::move(outs));
  return result;
}

}  // namespace cqbox
