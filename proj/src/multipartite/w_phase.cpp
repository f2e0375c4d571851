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
#include "cqbox/multipartite/w_phase.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/standard.hpp"

namespace cqbox {
namespace {

// Representative of an angle in (-pi, pi].
double centered(double angle) {
  double r = std::remainder(angle, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace

PhaseAssignment PhaseAssignment::from_functions(const Fn& alpha, const Fn& beta, const Fn& gamma) {
  PhaseAssignment p;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        const int i = index(x, y, z);
        p.alpha[i] = alpha(x, y, z);
        p.beta[i] = beta(x, y, z);
        p.gamma[i] = gamma(x, y, z);
      }
    }
  }
  return p;
}

CQBox w_phase_box(const PhaseAssignment& p) {
  const PartyStructure s = PartyStructure::qubits(3);
  const double amp = 1.0 / std::sqrt(3.0);
  std::vector<StateVector> outs;
  for (int i = 0; i < 8; ++i) {
    ComplexVector v = ComplexVector::Zero(8);
    v(4) = std::polar(amp, p.alpha[i]);
    v(2) = std::polar(amp, p.beta[i]);
    v(1) = std::polar(amp, p.gamma[i]);
    outs.emplace_back(v, s);
  }
  return CQBox(s, {2, 2, 2}, std::move(outs));
}

LocalPhaseExtraction is_local_equivalent(const PhaseAssignment& p, double tol) {
  // Differences to gamma are blind to the global phase; a local assignment
  // has u = f(x) - h(z) and v = g(y) - h(z), which pins f, g, h once h(0) = 0.
  std::array<double, 8> u{}, v{};
  for (int i = 0; i < 8; ++i) {
    u[i] = p.alpha[i] - p.gamma[i];
    v[i] = p.beta[i] - p.gamma[i];
  }
  using P = PhaseAssignment;
  LocalPhaseExtraction out;
  for (int b = 0; b < 2; ++b) {
    out.alpha[b] = u[P::index(b, 0, 0)];
    out.gamma[b] = u[P::index(0, 0, 0)] - u[P::index(0, 0, b)];
    out.beta[b] = v[P::index(0, b, 0)];
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        const int i = P::index(x, y, z);
        out.residual = std::max(out.residual, std::abs(centered(u[i] - out.alpha[x] + out.gamma[z])));
        out.residual = std::max(out.residual, std::abs(centered(v[i] - out.beta[y] + out.gamma[z])));
        out.global[i] = p.gamma[i] - out.gamma[z];
      }
    }
  }
  out.local = out.residual <= tol;
  return out;
}

namespace {

// Checks the local base with single-argument phases fa, fb, fc and all its
// single-monomial perturbations, accumulating into rep.
void check_base(const std::array<double, 2>& fa, const std::array<double, 2>& fb, const std::array<double, 2>& fc,
                int grid, double tol, double min_violation, WPhaseTheoremReport& rep) {
  // Non-constant multilinear monomials in (x, y, z), as bit masks.
  static constexpr std::array<int, 7> monomials = {4, 2, 1, 6, 5, 3, 7};
  // Ket j's own local variable (alpha: x, beta: y, gamma: z).
  static constexpr std::array<int, 3> own = {4, 2, 1};
  auto monomial = [](int mask, int x, int y, int z) {
    return ((mask & 4) ? x : 1) * ((mask & 2) ? y : 1) * ((mask & 1) ? z : 1);
  };
  const double step = kTwoPi / grid;

  const PhaseAssignment base = PhaseAssignment::from_functions(
      [&](int x, int, int) { return fa[x]; }, [&](int, int y, int) { return fb[y]; },
      [&](int, int, int z) { return fc[z]; });
  ++rep.local_count;
  const auto ns = cq_no_signalling(w_phase_box(base), tol);
  const bool local = is_local_equivalent(base, tol).local;
  rep.worst_local_violation = std::max(rep.worst_local_violation, ns.worst_violation);
  if (!ns.pass || !local) ++rep.local_failures;
  if (ns.pass != local) ++rep.disagreements;

  for (int ket = 0; ket < 3; ++ket) {
    for (int mask : monomials) {
      if (mask == own[ket]) continue;
      for (int d = 1; d < grid; ++d) {
        PhaseAssignment p = base;
        auto& target = ket == 0 ? p.alpha : (ket == 1 ? p.beta : p.gamma);
        for (int i = 0; i < 8; ++i) target[i] += step * d * monomial(mask, i >> 2, (i >> 1) & 1, i & 1);
        ++rep.perturbed_count;
        const auto pns = cq_no_signalling(w_phase_box(p), tol);
        const bool plocal = is_local_equivalent(p, tol).local;
        rep.smallest_perturbed_violation = std::min(rep.smallest_perturbed_violation, pns.worst_violation);
        if (pns.pass || pns.worst_violation < min_violation) ++rep.perturbed_failures;
        if (pns.pass != plocal) ++rep.disagreements;
      }
    }
  }
}

}  // namespace

WPhaseTheoremReport w_phase_theorem_check(int grid, double tol, double min_violation, int threads) {
  if (grid < 1) throw ParameterError("grid must have at least one value");
  const double step = kTwoPi / grid;
  const std::size_t per = static_cast<std::size_t>(grid) * grid;
  const std::size_t total = per * per * per;
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));

  std::vector<WPhaseTheoremReport> parts(workers);
  auto run = [&](std::size_t first) {
    WPhaseTheoremReport& part = parts[first];
    part.smallest_perturbed_violation = 2.0;
    for (std::size_t b = first; b < total; b += workers) {
      const std::size_t ia = b / (per * per), ib = (b / per) % per, ic = b % per;
      auto pick = [&](std::size_t j) {
        return std::array<double, 2>{step * static_cast<double>(j % grid), step * static_cast<double>(j / grid)};
      };
      check_base(pick(ia), pick(ib), pick(ic), grid, tol, min_violation, part);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& t : pool) t.join();
  }

  WPhaseTheoremReport rep;
  rep.grid = grid;
  rep.smallest_perturbed_violation = 2.0;
  for (const auto& part : parts) {
    rep.local_count += part.local_count;
    rep.local_failures += part.local_failures;
    rep.worst_local_violation = std::max(rep.worst_local_violation, part.worst_local_violation);
    rep.perturbed_count += part.perturbed_count;
    rep.perturbed_failures += part.perturbed_failures;
    rep.smallest_perturbed_violation = std::min(rep.smallest_perturbed_violation, part.smallest_perturbed_violation);
    rep.disagreements += part.disagreements;
  }
  if (rep.perturbed_count == 0) rep.smallest_perturbed_violation = 0.0;
  rep.pass = rep.local_failures == 0 && rep.perturbed_failures == 0 && rep.disagreements == 0;
  return rep;
}

CQBox ghz_phase_box(double theta) {
  const PartyStructure s = PartyStructure::qubits(3);
  return CQBox::from_pure(s, {2, 2, 2}, [&](std::span<const int> in) {
    ComplexVector v = ComplexVector::Zero(8);
    v(0) = 1.0 / std::sqrt(2.0);
    v(7) = std::polar(1.0 / std::sqrt(2.0), theta * in[0] * in[1] * in[2]);
    return StateVector(v, s);
  });
}

CQBox simulate(const MultipartyStrategy& strategy) {
  const PartyStructure& s = strategy.shared.structure();
  const auto labels = s.labels();
  if (strategy.box.parties() != s.size() || strategy.maps.size() != s.size()) {
    throw DimensionError("one C-C box axis and one outcome map per party are required");
  }
  const auto n = static_cast<Eigen::Index>(s.total_dim());
  std::vector<DensityMatrix> outs;
  for (std::size_t i = 0; i < strategy.box.inputs().size(); ++i) {
    const auto inputs = strategy.box.inputs().digits(i);
    const auto dist = strategy.box.distribution(i);
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (std::size_t o = 0; o < dist.size(); ++o) {
      if (dist[o] <= 0.0) continue;
      const auto outcomes = strategy.box.outputs().digits(o);
      StateVector psi = strategy.shared;
      for (std::size_t p = 0; p < labels.size(); ++p) {
        psi = apply_local(psi, labels[p], strategy.maps[p](inputs[p], outcomes[p]));
      }
      rho.noalias() += dist[o] * psi.amplitudes() * psi.amplitudes().adjoint();
    }
    outs.emplace_back(0.5 * (rho + rho.adjoint()), s);
  }
  return CQBox(s, strategy.box.inputs().radices(), std::move(outs));
}

MultipartyStrategy ghz_phase_strategy(int m, int n) {
  if (n < 2) throw ParameterError("GHZ phase strategies need n >= 2 outcomes");
  const double w = 1.0 / (static_cast<double>(n) * n);
  CCBox box = CCBox::from_function({2, 2, 2}, {n, n, n}, [n, w](std::span<const int> o, std::span<const int> in) {
    const int d = ((o[0] - o[1] - o[2]) % n + 2 * n) % n;
    return d == in[0] * in[1] * in[2] ? w : 0.0;
  });
  auto rotation = [m, n](int sign) {
    return [m, n, sign](int, int outcome) {
      const long long k = ((static_cast<long long>(sign) * outcome * m) % n + n) % n;
      return phase_diag({0.0, kTwoPi * static_cast<double>(k) / n});
    };
  };
  return MultipartyStrategy{std::move(box), ghz_state(), {rotation(1), rotation(-1), rotation(-1)}};
}

}  // namespace cqbox
