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
#include "cqbox/core/operations.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cqbox/core/error.hpp"

namespace cqbox {
namespace {

void require_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw DimensionError("composite dimension " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(cap));
  }
}

void require_same_structure(const PartyStructure& a, const PartyStructure& b) {
  if (!(a == b)) {
    throw DimensionError("states have different party structures");
  }
}

// Composite structure with an early cap check so that oversized products fail
// before any allocation.
PartyStructure composite_structure(std::span<const PartyStructure> parts, std::size_t cap) {
  if (parts.empty()) {
    throw DimensionError("tensor of an empty list");
  }
  PartyStructure out = parts[0];
  require_cap(out.total_dim(), cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].total_dim() != 0 && out.total_dim() > cap / parts[i].total_dim()) {
      throw DimensionError("composite dimension exceeds cap " + std::to_string(cap));
    }
    out = out.concat(parts[i]);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

struct LocalLayout {
  Eigen::Index left = 1;
  Eigen::Index dim = 1;
  Eigen::Index right = 1;
};

LocalLayout layout_for(const PartyStructure& s, std::string_view party, int u_dim) {
  const std::size_t pos = s.index_of(party);
  if (s[pos].dim != u_dim) {
    throw DimensionError("unitary of dimension " + std::to_string(u_dim) +
                         " applied to party '" + std::string(party) + "' of dimension " +
                         std::to_string(s[pos].dim));
  }
  LocalLayout l;
  l.dim = s[pos].dim;
  for (std::size_t i = 0; i < pos; ++i) l.left *= s[i].dim;
  for (std::size_t i = pos + 1; i < s.size(); ++i) l.right *= s[i].dim;
  return l;
}

// Applies (1 x U x 1) to every column of m in place.
void apply_to_columns(ComplexMatrix& m, const LocalLayout& l, const ComplexMatrix& u) {
  ComplexVector slice(l.dim);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index a = 0; a < l.left; ++a) {
      for (Eigen::Index r = 0; r < l.right; ++r) {
        const Eigen::Index base = a * l.dim * l.right + r;
        for (Eigen::Index k = 0; k < l.dim; ++k) slice(k) = m(base + k * l.right, c);
        const ComplexVector out = u * slice;
        for (Eigen::Index k = 0; k < l.dim; ++k) m(base + k * l.right, c) = out(k);
      }
    }
  }
}

constexpr double kRootFloor = 1e-14;
constexpr double kPurityTol = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  // Round-off eigenvalues (~1e-17) would otherwise contribute ~1e-9 after the root.
  const Eigen::VectorXd roots =
      es.eigenvalues().unaryExpr([](double v) { return v > kRootFloor ? std::sqrt(v) : 0.0; });
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

StateVector tensor(std::span<const StateVector> states, std::size_t max_total_dim) {
  std::vector<PartyStructure> parts;
  for (const auto& s : states) parts.push_back(s.structure());
  PartyStructure structure = composite_structure(parts, max_total_dim);
  ComplexVector amps = states[0].amplitudes();
  for (std::size_t i = 1; i < states.size(); ++i) {
    const ComplexVector& b = states[i].amplitudes();
    ComplexVector next(amps.size() * b.size());
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
      next.segment(k * b.size(), b.size()) = amps(k) * b;
    }
    amps = std::move(next);
  }
  return StateVector(std::move(amps), std::move(structure));
}

DensityMatrix tensor(std::span<const DensityMatrix> states, std::size_t max_total_dim) {
  std::vector<PartyStructure> parts;
  for (const auto& s : states) parts.push_back(s.structure());
  PartyStructure structure = composite_structure(parts, max_total_dim);
  ComplexMatrix m = states[0].matrix();
  for (std::size_t i = 1; i < states.size(); ++i) {
    m = kron(m, states[i].matrix());
  }
  return DensityMatrix::assume_valid(std::move(m), std::move(structure));
}

QuantumState tensor(std::span<const QuantumState> states, std::size_t max_total_dim) {
  if (states.empty()) {
    throw DimensionError("tensor of an empty list");
  }
  const bool pure = std::holds_alternative<StateVector>(states[0]);
  for (const auto& s : states) {
    if (std::holds_alternative<StateVector>(s) != pure) {
      throw ValidationError("tensor of mixed kinds (state vectors and density matrices)");
    }
  }
  if (pure) {
    std::vector<StateVector> vs;
    for (const auto& s : states) vs.push_back(std::get<StateVector>(s));
    return tensor(std::span<const StateVector>(vs), max_total_dim);
  }
  std::vector<DensityMatrix> ds;
  for (const auto& s : states) ds.push_back(std::get<DensityMatrix>(s));
  return tensor(std::span<const DensityMatrix>(ds), max_total_dim);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const StateVector parts[] = {a, b};
  return tensor(std::span<const StateVector>(parts));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const DensityMatrix parts[] = {a, b};
  return tensor(std::span<const DensityMatrix>(parts));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep) {
  if (keep.empty()) {
    throw LabelError("partial trace must keep at least one party");
  }
  const PartyStructure& s = rho.structure();
  PartyStructure kept = s.restrict_to(keep);
  std::vector<bool> is_kept(s.size(), false);
  for (const auto& l : keep) is_kept[s.index_of(l)] = true;

  // Split every flat index into (kept part, traced part).
  const std::size_t n = s.total_dim();
  const std::size_t dk = kept.total_dim();
  const std::size_t dt = n / dk;
  std::vector<std::vector<Eigen::Index>> by_traced(dt, std::vector<Eigen::Index>(dk));
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto digits = s.digits(idx);
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
      const auto d = static_cast<std::size_t>(s[p].dim);
      if (is_kept[p]) {
        k = k * d + static_cast<std::size_t>(digits[p]);
      } else {
        t = t * d + static_cast<std::size_t>(digits[p]);
      }
    }
    by_traced[t][k] = static_cast<Eigen::Index>(idx);
  }
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const ComplexMatrix& m = rho.matrix();
  for (const auto& rows : by_traced) {
    for (std::size_t i = 0; i < dk; ++i) {
      for (std::size_t j = 0; j < dk; ++j) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += m(rows[i], rows[j]);
      }
    }
  }
  return DensityMatrix::assume_valid(std::move(out), std::move(kept));
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const std::string> keep) {
  return partial_trace(DensityMatrix::from_pure(psi), keep);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::string> keep) {
  return partial_trace(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

DensityMatrix partial_trace(const StateVector& psi, std::initializer_list<std::string> keep) {
  return partial_trace(psi, std::span<const std::string>(keep.begin(), keep.size()));
}

StateVector apply_local(const StateVector& psi, std::string_view party, const UnitaryOperator& u) {
  const LocalLayout l = layout_for(psi.structure(), party, u.dim());
  if (u.is_identity()) {
    return psi;
  }
  ComplexMatrix m = psi.amplitudes();
  apply_to_columns(m, l, u.matrix());
  return StateVector(m.col(0), psi.structure());
}

DensityMatrix apply_local(const DensityMatrix& rho, std::string_view party, const UnitaryOperator& u) {
  const LocalLayout l = layout_for(rho.structure(), party, u.dim());
  if (u.is_identity()) {
    return rho;
  }
  ComplexMatrix m = rho.matrix();
  apply_to_columns(m, l, u.matrix());
  ComplexMatrix t = m.adjoint();
  apply_to_columns(t, l, u.matrix());
  return DensityMatrix::assume_valid(t.adjoint(), rho.structure());
}

QuantumState apply_local(const QuantumState& state, std::string_view party, const UnitaryOperator& u) {
  return std::visit([&](const auto& s) -> QuantumState { return apply_local(s, party, u); }, state);
}

double fidelity(const StateVector& p, const StateVector& q) {
  require_same_structure(p.structure(), q.structure());
  return clamp01(std::norm(p.inner(q)));
}

double fidelity(const StateVector& p, const DensityMatrix& q) {
  require_same_structure(p.structure(), q.structure());
  const Complex v = p.amplitudes().dot(q.matrix() * p.amplitudes());
  return clamp01(v.real());
}

double fidelity(const DensityMatrix& p, const StateVector& q) { return fidelity(q, p); }

double fidelity(const DensityMatrix& p, const DensityMatrix& q) {
  require_same_structure(p.structure(), q.structure());
  if (auto psi = p.as_pure(kPurityTol)) return fidelity(*psi, q);
  if (auto phi = q.as_pure(kPurityTol)) return fidelity(*phi, p);
  const ComplexMatrix sp = psd_sqrt(p.matrix());
  const ComplexMatrix inner = sp * q.matrix() * sp;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (inner + inner.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  const double root_sum =
      es.eigenvalues().unaryExpr([](double v) { return v > kRootFloor ? std::sqrt(v) : 0.0; }).sum();
  return clamp01(root_sum * root_sum);
}

double fidelity(const QuantumState& p, const QuantumState& q) {
  return std::visit([](const auto& a, const auto& b) { return fidelity(a, b); }, p, q);
}

double trace_distance(const StateVector& p, const StateVector& q) {
  require_same_structure(p.structure(), q.structure());
  // 1 - |<p|q>|^2 via the Lagrange identity, which stays exact for equal
  // inputs instead of cancelling to ~1e-16 and blowing up under the root.
  const ComplexVector& a = p.amplitudes();
  const ComplexVector& b = q.amplitudes();
  double gap = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = i + 1; j < a.size(); ++j) {
      gap += std::norm(a(i) * b(j) - a(j) * b(i));
    }
  }
  return clamp01(std::sqrt(gap));
}

double trace_distance(const DensityMatrix& p, const DensityMatrix& q) {
  require_same_structure(p.structure(), q.structure());
  const ComplexMatrix diff = p.matrix() - q.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (diff + diff.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  return clamp01(0.5 * es.eigenvalues().cwiseAbs().sum());
}

double trace_distance(const QuantumState& p, const QuantumState& q) {
  if (std::holds_alternative<StateVector>(p) && std::holds_alternative<StateVector>(q)) {
    return trace_distance(std::get<StateVector>(p), std::get<StateVector>(q));
  }
  return trace_distance(to_density(p), to_density(q));
}

}  // namespace cqbox
