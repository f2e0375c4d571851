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
#include <cmath>

#include "cqbox/core/error.hpp"
#include "cqbox/core/mixed_radix.hpp"
#include "cqbox/core/schmidt.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/synthesis/constructions.hpp"
#include "synthesis/internal.hpp"

namespace cqbox {
namespace {

constexpr int kMaxPhaseDenominator = 64;
constexpr std::size_t kMaxPhaseOutcomes = 4096;
constexpr double kPhaseGridTol = 1e-9;

// Phase e^{i 2 pi k / n} on |1>, with k reduced first so the angle is exact
// for every multiple of the period.
UnitaryOperator level_one_phase(long long k, int n) {
  const long long r = ((k % n) + n) % n;
  return phase_diag({0.0, kTwoPi * static_cast<double>(r) / n});
}

double wrap_turns(double t) { return t - std::floor(t); }

}  // namespace

Strategy bit_flip_strategy() {
  auto flip = [](int, int outcome) { return outcome == 1 ? pauli_x() : UnitaryOperator::identity(2); };
  return Strategy("bit-flip", pr_box(), bell_state(0), flip, flip);
}

Strategy sign_flip_strategy(Complex alpha, Complex beta) {
  detail::check_amplitudes(alpha, beta);
  return Strategy(
      "sign-flip", pr_box(), detail::two_level_state(alpha, beta),
      [](int, int a) { return pauli_z_power(a); }, [](int, int b) { return pauli_z_power(-b); });
}

Strategy rational_phase_strategy(int m, int n, Complex alpha, Complex beta) {
  if (n < 2) throw ParameterError("phase strategies need n >= 2 outcomes");
  detail::check_amplitudes(alpha, beta);
  return Strategy(
      "phase", CouplingBox::cyclic(n, 2, 2, [](int x, int y) { return x * y; }),
      detail::two_level_state(alpha, beta),
      [m, n](int, int a) { return level_one_phase(static_cast<long long>(a) * m, n); },
      [m, n](int, int b) { return level_one_phase(-static_cast<long long>(b) * m, n); });
}

ApproximatePhase irrational_phase_strategy(double theta, int n, Complex alpha, Complex beta) {
  if (n < 2) throw ParameterError("phase strategies need n >= 2 outcomes");
  const auto m = static_cast<int>(std::lround(theta * n));
  const double delta = kTwoPi * std::abs(theta - static_cast<double>(m) / n);
  const double s = std::sin(delta / 2);
  return ApproximatePhase{rational_phase_strategy(m, n, alpha, beta), m, n,
                          4.0 * std::norm(alpha) * std::norm(beta) * s * s};
}

Strategy nonmax_pure_strategy(const std::vector<double>& probabilities, const LevelPhases& phases,
                              const std::vector<UnitaryOperator>& local_alice,
                              const std::vector<UnitaryOperator>& local_bob) {
  const int n = static_cast<int>(probabilities.size());
  if (n < 1) throw ParameterError("at least one Schmidt level is required");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (probabilities[i] < 0.0) throw ParameterError("Schmidt probabilities must be nonnegative");
    total += probabilities[i];
    if (i > 0 && std::sqrt(probabilities[i - 1]) - std::sqrt(probabilities[i]) <= kSchmidtBlockTol) {
      throw ParameterError("Schmidt probabilities must be strictly decreasing; use general_pure_strategy");
    }
  }
  if (std::abs(total - 1.0) > kTolNorm) throw ParameterError("Schmidt probabilities must sum to 1");
  const int xs = static_cast<int>(local_alice.size());
  const int ys = static_cast<int>(local_bob.size());
  if (xs < 1 || ys < 1) throw DimensionError("at least one input per party is required");
  for (const auto& u : local_alice) {
    if (u.dim() != n) throw DimensionError("local unitary dimension does not match");
  }
  for (const auto& u : local_bob) {
    if (u.dim() != n) throw DimensionError("local unitary dimension does not match");
  }

  // Phases relative to level 0 split into an Alice part f(x), a Bob part
  // g(y) and an interaction part h(x, y) that vanishes when x or y is 0.
  const int levels = n - 1;
  auto rel = [&](int x, int y, int i) { return phases(x, y, i + 1) - phases(x, y, 0); };
  std::vector<std::vector<std::vector<double>>> h(xs, std::vector<std::vector<double>>(ys, std::vector<double>(levels)));
  std::vector<UnitaryOperator> dress_a;
  std::vector<UnitaryOperator> dress_b;
  for (int x = 0; x < xs; ++x) {
    std::vector<double> f(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < levels; ++i) f[i + 1] = kTwoPi * wrap_turns(rel(x, 0, i) - rel(0, 0, i));
    dress_a.push_back(local_alice[x] * phase_diag(f));
  }
  for (int y = 0; y < ys; ++y) {
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < levels; ++i) g[i + 1] = kTwoPi * wrap_turns(rel(0, y, i));
    dress_b.push_back(local_bob[y] * phase_diag(g));
  }
  for (int x = 0; x < xs; ++x) {
    for (int y = 0; y < ys; ++y) {
      for (int i = 0; i < levels; ++i) {
        h[x][y][i] = wrap_turns(rel(x, y, i) - rel(x, 0, i) - rel(0, y, i) + rel(0, 0, i));
      }
    }
  }

  // Smallest common denominator of the interaction phases, if any is small.
  int period = 0;
  for (int d = 1; d <= kMaxPhaseDenominator && period == 0; ++d) {
    bool fits = true;
    for (const auto& row : h) {
      for (const auto& cell : row) {
        for (double t : cell) {
          const double scaled = t * d;
          if (std::abs(scaled - std::round(scaled)) > kPhaseGridTol) fits = false;
        }
      }
    }
    if (fits) period = d;
  }
  std::size_t outcomes = 1;
  if (period > 0) {
    for (int i = 0; i < levels && outcomes <= kMaxPhaseOutcomes; ++i) outcomes *= static_cast<std::size_t>(period);
  }
  const StateVector shared = detail::schmidt_state(probabilities);

  if (period > 0 && outcomes <= kMaxPhaseOutcomes) {
    const MixedRadix digits(std::vector<int>(static_cast<std::size_t>(levels), period));
    std::vector<std::vector<std::vector<int>>> pairing(xs, std::vector<std::vector<int>>(ys));
    for (int x = 0; x < xs; ++x) {
      for (int y = 0; y < ys; ++y) {
        std::vector<int> shift(static_cast<std::size_t>(levels));
        for (int i = 0; i < levels; ++i) shift[i] = static_cast<int>(std::lround(h[x][y][i] * period)) % period;
        auto& p = pairing[x][y];
        p.resize(outcomes);
        for (std::size_t b = 0; b < outcomes; ++b) {
          auto d = digits.digits(b);
          for (int i = 0; i < levels; ++i) d[i] = (d[i] + shift[i]) % period;
          p[b] = static_cast<int>(digits.index(d));
        }
      }
    }
    auto level_phases = [digits, period, n](int outcome, int sign) {
      std::vector<double> angles(static_cast<std::size_t>(n), 0.0);
      const auto d = digits.digits(static_cast<std::size_t>(outcome));
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int k = ((sign * d[i]) % period + period) % period;
        angles[i + 1] = kTwoPi * k / period;
      }
      return phase_diag(angles);
    };
    Strategy core("nonmax-pure",
                  CouplingBox(std::vector<double>(outcomes, 1.0 / static_cast<double>(outcomes)), std::move(pairing)),
                  shared, [level_phases](int, int a) { return level_phases(a, 1); },
                  [level_phases](int, int b) { return level_phases(b, -1); });
    return core.dressed(dress_a, dress_b);
  }

  // Continuous phase coupling: independent uniform phases per level.
  std::vector<std::vector<UnitaryOperator>> relabel(xs);
  for (int x = 0; x < xs; ++x) {
    for (int y = 0; y < ys; ++y) {
      std::vector<double> angles(static_cast<std::size_t>(n), 0.0);
      for (int i = 0; i < levels; ++i) angles[i + 1] = kTwoPi * h[x][y][i];
      relabel[x].push_back(phase_diag(angles));
    }
  }
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  Strategy core("nonmax-pure", HaarCoupling(n, std::move(relabel), std::move(blocks)), shared,
                UnitaryOperator::identity(n));
  return core.dressed(dress_a, dress_b);
}

}  // namespace cqbox
