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
#include <gtest/gtest.h>

#include <cmath>

#include "cqbox/boxes/cc_box.hpp"
#include "cqbox/boxes/coupling.hpp"
#include "cqbox/boxes/cq_box.hpp"
#include "cqbox/boxes/measurement.hpp"
#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/random.hpp"
#include "cqbox/core/standard.hpp"
#include "test_support.hpp"

using namespace cqbox;
using cqbox::testing::random_density;

namespace {

// Bell pair for x.y = 0, bit-flipped pair for x.y = 1.
CQBox flip_box() {
  return CQBox::from_pure(PartyStructure::bipartite(2, 2), {2, 2}, [](std::span<const int> in) {
    return in[0] * in[1] == 1 ? bell_state(1) : bell_state(0);
  });
}

CQBox constant_box(const StateVector& psi) {
  return CQBox::from_pure(psi.structure(), {2, 2}, [&](std::span<const int>) { return psi; });
}

// Oracle: half the sum of absolute eigenvalues of the difference.
double trace_distance_oracle(const ComplexMatrix& p, const ComplexMatrix& q) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p - q);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Oracle: marginal sums of a bipartite table done by hand.
double worst_bipartite_signalling(const CCBox& box) {
  const int na = box.outputs().radices()[0];
  const int nb = box.outputs().radices()[1];
  double worst = 0.0;
  for (int x = 0; x < 2; ++x) {
    double tv = 0.0;
    for (int a = 0; a < na; ++a) {
      double m0 = 0.0, m1 = 0.0;
      for (int b = 0; b < nb; ++b) {
        m0 += box.prob(a, b, x, 0);
        m1 += box.prob(a, b, x, 1);
      }
      tv += std::abs(m0 - m1);
    }
    worst = std::max(worst, tv / 2);
  }
  for (int y = 0; y < 2; ++y) {
    double tv = 0.0;
    for (int b = 0; b < nb; ++b) {
      double m0 = 0.0, m1 = 0.0;
      for (int a = 0; a < na; ++a) {
        m0 += box.prob(a, b, 0, y);
        m1 += box.prob(a, b, 1, y);
      }
      tv += std::abs(m0 - m1);
    }
    worst = std::max(worst, tv / 2);
  }
  return worst;
}

}  // namespace

TEST(PrBox, table_entries) {
  const CCBox pr = pr_box();
  EXPECT_EQ(pr.prob(0, 0, 1, 1), 0.0);
  EXPECT_EQ(pr.prob(1, 0, 1, 1), 0.5);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      EXPECT_DOUBLE_EQ(pr.prob(0, 0, x, y) + pr.prob(0, 1, x, y), 0.5);
    }
  }
}

TEST(ModBox, entries_and_reduction) {
  EXPECT_EQ(mod_box(2).table(), pr_box().table());
  const CCBox m4 = mod_box(4);
  EXPECT_DOUBLE_EQ(m4.prob(1, 0, 1, 1), 0.25);
  EXPECT_EQ(m4.prob(1, 1, 1, 1), 0.0);
  EXPECT_THROW(mod_box(1), ParameterError);
}

TEST(CCBox, rejects_invalid_tables) {
  EXPECT_THROW(CCBox({1, 1}, {2, 2}, {0.5, 0.5, 0.5, 0.5}), ValidationError);
  EXPECT_THROW(CCBox({1, 1}, {2, 2}, {1.5, -0.5, 0.0, 0.0}), ValidationError);
  EXPECT_THROW(CCBox({1, 1}, {2, 2}, {1.0}), DimensionError);
}

TEST(Coupling, identity_pairing_is_correlated_randomness) {
  const CouplingBox c({0.5, 0.5}, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}});
  const CCBox box = coupling_to_ccbox(c);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      EXPECT_EQ(box.prob(0, 0, x, y), 0.5);
      EXPECT_EQ(box.prob(1, 1, x, y), 0.5);
      EXPECT_EQ(box.prob(0, 1, x, y), 0.0);
    }
  }
}

TEST(Coupling, cyclic_pairing_gives_mod_box) {
  for (int n = 2; n <= 6; ++n) {
    const CouplingBox c = CouplingBox::cyclic(n, 2, 2, [](int x, int y) { return x * y; });
    EXPECT_LT(cc_box_distance(coupling_to_ccbox(c), mod_box(n)), 1e-15) << n;
  }
}

TEST(Coupling, rejects_non_bijection) {
  EXPECT_THROW(CouplingBox({0.5, 0.5}, {{{0, 0}}}), ValidationError);
  // Bijective but maps weight 0.7 onto weight 0.3.
  EXPECT_THROW(CouplingBox({0.7, 0.3}, {{{1, 0}}}), ValidationError);
}

TEST(Coupling, marginals_are_exactly_q) {
  const CouplingBox c({0.2, 0.3, 0.2, 0.3}, {{{0, 1, 2, 3}, {2, 1, 0, 3}}, {{2, 3, 0, 1}, {0, 3, 2, 1}}});
  const CCBox box = coupling_to_ccbox(c);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int k = 0; k < 4; ++k) {
        double pa = 0.0, pb = 0.0;
        for (int j = 0; j < 4; ++j) {
          pa += box.prob(k, j, x, y);
          pb += box.prob(j, k, x, y);
        }
        EXPECT_EQ(pa, c.marginal()[k]);
        EXPECT_EQ(pb, c.marginal()[k]);
      }
    }
  }
}

TEST(HaarCoupling, identity_relabel_gives_conjugate_pairs) {
  const HaarCoupling hc = haar_coupling(2, 2, 2, [](int, int) { return UnitaryOperator::identity(2); });
  Rng rng = make_rng(RandomSeed{7}, 0);
  for (int t = 0; t < 200; ++t) {
    const auto s = hc.sample(t % 2, (t / 2) % 2, rng);
    EXPECT_EQ(s.alice.matrix(), s.bob.matrix().conjugate());
  }
}

TEST(HaarCoupling, rejects_relabel_outside_blocks) {
  std::vector<std::vector<UnitaryOperator>> relabel = {{UnitaryOperator(pauli_x())}};
  EXPECT_THROW(HaarCoupling(2, relabel, {{0}, {1}}), ValidationError);
  EXPECT_THROW(HaarCoupling(2, relabel, {{0}}), ValidationError);
  EXPECT_NO_THROW(HaarCoupling(2, relabel, {{0, 1}}));
}

TEST(HaarCoupling, preserves_bell_pair_per_sample) {
  const StateVector phi = bell_state(0);
  const UnitaryOperator alpha(pauli_z_power(0.5));
  const HaarCoupling hc =
      haar_coupling(2, 2, 2, [&](int x, int y) { return x * y == 1 ? alpha : UnitaryOperator::identity(2); });
  Rng rng = make_rng(RandomSeed{11}, 0);
  for (int t = 0; t < 50; ++t) {
    const auto s = hc.sample(1, 1, rng);
    const StateVector out = apply_local(apply_local(phi, "A", s.alice), "B", s.bob);
    EXPECT_NEAR(fidelity(out, apply_local(phi, "A", alpha)), 1.0, 1e-12);
  }
}

TEST(CCNoSignalling, examples) {
  const auto pr = cc_no_signalling(pr_box(), 1e-12);
  EXPECT_TRUE(pr.pass);
  EXPECT_EQ(pr.worst_violation, 0.0);

  // a = y, b = 0.
  const CCBox det = CCBox::from_function({2, 2}, {2, 2}, [](std::span<const int> o, std::span<const int> i) {
    return (o[0] == i[1] && o[1] == 0) ? 1.0 : 0.0;
  });
  const auto rep = cc_no_signalling(det);
  EXPECT_FALSE(rep.pass);
  EXPECT_DOUBLE_EQ(rep.worst_violation, 1.0);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].subgroup, (std::vector<std::string>{"A"}));
  EXPECT_DOUBLE_EQ(rep.worst_violation, worst_bipartite_signalling(det));

  const CCBox m4 = mod_box(4);
  EXPECT_TRUE(cc_no_signalling(m4).pass);
  EXPECT_EQ(worst_bipartite_signalling(m4), 0.0);
}

TEST(CCNoSignalling, random_tables_agree_with_oracle) {
  Rng rng = make_rng(RandomSeed{3}, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> table(4 * 9);
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int k = 0; k < 9; ++k) s += table[i * 9 + k] = u(rng);
      for (int k = 0; k < 9; ++k) table[i * 9 + k] /= s;
    }
    const CCBox box({2, 2}, {3, 3}, table);
    EXPECT_NEAR(cc_no_signalling(box).worst_violation, worst_bipartite_signalling(box), 1e-14);
  }
}

TEST(CQNoSignalling, examples) {
  const CQBox box = flip_box();
  const auto rep = cq_no_signalling(box);
  EXPECT_TRUE(rep.pass);
  for (std::size_t i = 0; i < box.size(); ++i) {
    const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
    EXPECT_LT((partial_trace(box.output(i), {"A"}).matrix() - half).norm(), 1e-15);
    EXPECT_LT((partial_trace(box.output(i), {"B"}).matrix() - half).norm(), 1e-15);
  }

  const CQBox product = CQBox::from_pure(PartyStructure::bipartite(2, 2), {2, 2}, [](std::span<const int> in) {
    const int bit = in[0] * in[1];
    return basis_state(PartyStructure::bipartite(2, 2), {bit, bit});
  });
  const auto bad = cq_no_signalling(product);
  EXPECT_FALSE(bad.pass);
  EXPECT_DOUBLE_EQ(bad.worst_violation, 1.0);
  ASSERT_EQ(bad.witnesses.size(), 2u);
  // Alice's marginal changes with y once x = 1.
  EXPECT_EQ(bad.witnesses[0].subgroup, (std::vector<std::string>{"A"}));
  EXPECT_EQ(bad.witnesses[0].fixed_inputs, (std::vector<int>{1}));
}

TEST(CQNoSignalling, invariant_under_fixed_local_unitary) {
  Rng rng = make_rng(RandomSeed{5}, 0);
  const CQBox box = flip_box();
  for (int t = 0; t < 20; ++t) {
    const UnitaryOperator u = haar_unitary(2, rng);
    const std::string party = t % 2 ? "A" : "B";
    const CQBox rotated = CQBox::from_pure(box.structure(), {2, 2}, [&](std::span<const int> in) {
      return apply_local(*box.pure_output(box.inputs().index(in)), party, u);
    });
    EXPECT_TRUE(cq_no_signalling(rotated).pass);
  }
}

TEST(CQNoSignalling, tripartite_subgroups) {
  // GHZ with a phase on |111> driven by x.y.z passes; a bit flip on C driven
  // by x alone is visible to subgroup C (and every group containing C
  // without A).
  const PartyStructure s = PartyStructure::qubits(3);
  const CQBox ghz = CQBox::from_pure(s, {2, 2, 2}, [&](std::span<const int> in) {
    const double th = kPi * in[0] * in[1] * in[2];
    ComplexVector v = ComplexVector::Zero(8);
    v(0) = 1.0 / std::sqrt(2.0);
    v(7) = std::polar(1.0 / std::sqrt(2.0), th);
    return StateVector(v, s);
  });
  EXPECT_TRUE(cq_no_signalling(ghz).pass);

  const CQBox flip = CQBox::from_pure(s, {2, 2, 2}, [&](std::span<const int> in) {
    return basis_state(s, {0, 0, in[0]});
  });
  const auto rep = cq_no_signalling(flip);
  EXPECT_FALSE(rep.pass);
  std::vector<std::vector<std::string>> groups;
  for (const auto& w : rep.witnesses) groups.push_back(w.subgroup);
  EXPECT_EQ(groups, (std::vector<std::vector<std::string>>{{"C"}, {"B", "C"}}));
}

TEST(Measurement, flip_box_induces_pr_box) {
  const CQBox box = flip_box();
  const CCBox induced = induced_ccbox(box, computational_bases(box));
  EXPECT_LT(cc_box_distance(induced, pr_box()), 1e-15);
  EXPECT_NEAR(chsh_value(induced), 4.0, 1e-15);
}

TEST(Measurement, chsh_of_pr_box_matches_correlator_oracle) {
  const CCBox pr = pr_box();
  double s = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double e = pr.prob(0, 0, x, y) + pr.prob(1, 1, x, y) - pr.prob(0, 1, x, y) - pr.prob(1, 0, x, y);
      s += (x * y == 1) ? -e : e;
    }
  }
  EXPECT_EQ(s, 4.0);
  EXPECT_EQ(chsh_value(pr), 4.0);
}

TEST(Measurement, product_states_respect_local_bound) {
  Rng rng = make_rng(RandomSeed{9}, 0);
  const PartyStructure qa({Party{"A", 2}});
  const PartyStructure qb({Party{"B", 2}});
  for (int t = 0; t < 100; ++t) {
    const StateVector psi = tensor(random_state(qa, rng), random_state(qb, rng));
    const CQBox box = constant_box(psi);
    MeasurementBases bases(2);
    for (int p = 0; p < 2; ++p) {
      for (int x = 0; x < 2; ++x) bases[p].push_back(haar_unitary(2, rng));
    }
    const CCBox induced = induced_ccbox(box, bases);
    EXPECT_LE(std::abs(chsh_value(induced)), 2.0 + kTolNum);
  }
}

TEST(Measurement, induced_box_of_no_signalling_box_is_no_signalling) {
  Rng rng = make_rng(RandomSeed{13}, 0);
  const CQBox box = flip_box();
  for (int t = 0; t < 30; ++t) {
    MeasurementBases bases(2);
    for (int p = 0; p < 2; ++p) {
      for (int x = 0; x < 2; ++x) bases[p].push_back(haar_unitary(2, rng));
    }
    EXPECT_TRUE(cc_no_signalling(induced_ccbox(box, bases), 1e-9).pass);
  }
}

TEST(Measurement, dimension_mismatch) {
  const CQBox box = flip_box();
  MeasurementBases bases = computational_bases(box);
  bases[1][0] = UnitaryOperator::identity(3);
  EXPECT_THROW(induced_ccbox(box, bases), DimensionError);
  EXPECT_THROW(chsh_value(mod_box(3)), DimensionError);
}

TEST(CQBoxDistance, examples) {
  const CQBox box = flip_box();
  EXPECT_EQ(cq_box_distance(box, box), 0.0);
  const CQBox constant = constant_box(bell_state(0));
  const double oracle =
      trace_distance_oracle(DensityMatrix::from_pure(bell_state(1)).matrix(),
                            DensityMatrix::from_pure(bell_state(0)).matrix());
  EXPECT_NEAR(cq_box_distance(box, constant), oracle, 1e-12);
  EXPECT_NEAR(oracle, 1.0, 1e-12);
}

TEST(CQBoxDistance, metric_properties) {
  Rng rng = make_rng(RandomSeed{17}, 0);
  const PartyStructure s = PartyStructure::bipartite(2, 2);
  auto random_box = [&] {
    std::vector<DensityMatrix> outs;
    for (int i = 0; i < 4; ++i) outs.push_back(random_density(s, 1 + i % 3, rng));
    return CQBox(s, {2, 2}, std::move(outs));
  };
  for (int t = 0; t < 30; ++t) {
    const CQBox p = random_box(), q = random_box(), r = random_box();
    const double pq = cq_box_distance(p, q);
    EXPECT_NEAR(pq, cq_box_distance(q, p), 1e-12);
    EXPECT_LE(cq_box_distance(p, r), pq + cq_box_distance(q, r) + 1e-12);
  }
}

TEST(CQBox, shape_errors) {
  const PartyStructure s = PartyStructure::bipartite(2, 2);
  EXPECT_THROW(CQBox(s, std::vector<int>{2, 2}, std::vector<StateVector>{bell_state(0)}), DimensionError);
  EXPECT_THROW(CQBox(s, std::vector<int>{4}, std::vector<StateVector>(4, bell_state(0))), DimensionError);
}
