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
#include "cqbox/cli/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/core/error.hpp"
#include "cqbox/core/operations.hpp"
#include "cqbox/core/standard.hpp"
#include "cqbox/multipartite/w_phase.hpp"
#include "cqbox/synthesis/constructions.hpp"
#include "cqbox/synthesis/families.hpp"
#include "cqbox/synthesis/mixed.hpp"

namespace cqbox::cli {
namespace {

Json report_json(const NoSignallingReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["worst_violation"] = r.worst_violation;
  Json w = Json::array();
  for (const auto& s : r.witnesses) {
    w.push_back({{"subgroup", s.subgroup},
                 {"fixed_inputs", s.fixed_inputs},
                 {"varied_from", s.varied_from},
                 {"varied_to", s.varied_to},
                 {"distance", s.distance}});
  }
  j["witnesses"] = std::move(w);
  return j;
}

double amplitude_alpha(const SynthParams& p) {
  const double a = p.alpha.value_or(0.8);
  if (!(a > 0.0 && a < 1.0)) throw ParameterError("--alpha must lie in (0, 1)");
  return a;
}

// Shared tail for every bipartite construction: simulate, compare, check.
SynthOutcome finish(const std::string& name, Json params, const Strategy& s, CQBox target, const SynthParams& p,
                    Json certificate = Json::object()) {
  const SimulationResult r = simulate(s, {p.samples, p.seed});
  const double distance = cq_box_distance(r.box, target);
  const auto resource = s.resource_no_signalling(p.tol);
  const auto box = cq_no_signalling(r.box, p.tol);
  SynthOutcome out{name, std::move(params), std::move(target), r.box, Json::object(), std::move(certificate), false};
  out.metrics["distance"] = distance;
  out.metrics["resource_no_signalling"] = report_json(resource);
  out.metrics["simulated_no_signalling"] = report_json(box);
  out.metrics["sampled"] = r.sampled;
  out.metrics["samples"] = r.samples;
  out.metrics["min_branch_fidelity"] = r.min_branch_fidelity;
  out.certificate["strategy"] = s.name();
  out.pass = distance <= p.tol && resource.pass && box.pass;
  return out;
}

SynthOutcome sign_flip(const SynthParams& p) {
  const double a = amplitude_alpha(p), b = std::sqrt(1.0 - a * a);
  return finish("sign-flip", {{"alpha", a}}, sign_flip_strategy(a, b), phase_target(0.5, a, b), p);
}

SynthOutcome phase(const SynthParams& p) {
  const int m = p.m.value_or(1), n = p.n.value_or(4);
  const double a = amplitude_alpha(p), b = std::sqrt(1.0 - a * a);
  const Strategy s = rational_phase_strategy(m, n, a, b);
  return finish("phase", {{"m", m}, {"n", n}, {"alpha", a}}, s,
                phase_target(static_cast<double>(m) / n, a, b), p, {{"resource", "cyclic coupling"}, {"outcomes", n}});
}

SynthOutcome irrational(const SynthParams& p) {
  const double theta = p.theta.value_or(1.0 / std::sqrt(2.0));
  const int n = p.n.value_or(100);
  const double a = amplitude_alpha(p), b = std::sqrt(1.0 - a * a);
  const ApproximatePhase ap = irrational_phase_strategy(theta, n, a, b);
  SynthOutcome out = finish("irrational-phase", {{"theta", theta}, {"n", n}, {"alpha", a}}, ap.strategy,
                            phase_target(theta, a, b), p);
  double worst = 0.0;
  for (std::size_t i = 0; i < out.target.size(); ++i) {
    worst = std::max(worst, 1.0 - fidelity(out.simulated.output(i), out.target.output(i)));
  }
  out.metrics["worst_infidelity"] = worst;
  out.certificate["numerator"] = ap.numerator;
  out.certificate["denominator"] = ap.denominator;
  out.certificate["error_bound"] = ap.error_bound;
  out.pass = worst <= ap.error_bound + p.tol && out.metrics["resource_no_signalling"]["pass"].get<bool>() &&
             out.metrics["simulated_no_signalling"]["pass"].get<bool>();
  return out;
}

SynthOutcome max_entangled(const SynthParams& p) {
  const int dim = p.dim.value_or(2);
  if (dim < 2 || dim > 4) throw ParameterError("--dim must lie in 2..4");
  Rng rng = make_rng(p.seed, 0);
  const auto targets = random_local_targets(dim, 2, 2, rng);
  return finish("max-entangled", {{"dim", dim}}, max_entangled_strategy(targets, dim),
                local_unitary_target(targets, phi_plus(dim)), p);
}

SynthOutcome eight_output(const SynthParams& p) {
  const auto& us = eight_output_unitaries();
  Json cert;
  cert["pairing_1_1"] = find_pairing(us, pauli_z_power(0.5));
  cert["pairing_1_2"] = find_pairing(us, pauli_x());
  return finish("eight-output", Json::object(), eight_output_strategy(), eight_output_target(), p, std::move(cert));
}

SynthOutcome nonmax(const SynthParams& p) {
  const int levels = p.levels.value_or(2);
  std::vector<double> probs;
  if (levels == 2) {
    probs = {0.7, 0.3};
  } else if (levels == 3) {
    probs = {0.6, 0.3, 0.1};
  } else {
    throw ParameterError("--levels must be 2 or 3");
  }
  Rng rng = make_rng(p.seed, 0);
  std::vector<UnitaryOperator> a, b;
  for (int i = 0; i < 2; ++i) a.push_back(haar_unitary(levels, rng));
  for (int i = 0; i < 2; ++i) b.push_back(haar_unitary(levels, rng));
  // Eighth-turn phases keep the coupling finite and the simulation exact.
  std::uniform_int_distribution<int> eighth(0, 7);
  std::vector<double> table(static_cast<std::size_t>(4 * levels));
  for (double& v : table) v = eighth(rng) / 8.0;
  const auto phases = [table, levels](int x, int y, int i) {
    return table[static_cast<std::size_t>((2 * x + y) * levels + i)];
  };
  return finish("nonmax-pure", {{"levels", levels}, {"probabilities", probs}}, nonmax_pure_strategy(probs, phases, a, b),
                nonmax_target(probs, phases, a, b), p);
}

CQBox default_general_family(const SynthParams& p) {
  Rng rng = make_rng(p.seed, 0);
  const double c = std::sqrt(0.35), d = std::sqrt(0.15);
  return structured_pure_family({c, c, d, d}, {{0, 1}, {2, 3}}, rng, 2, 3);
}

SynthOutcome general_pure(const SynthParams& p) {
  CQBox family = p.family ? *p.family : default_general_family(p);
  const Strategy s = general_pure_strategy(family);
  return finish("general-pure", {{"family", p.family ? "file" : "seeded two-block family"}}, s, std::move(family), p);
}

SynthOutcome mixed(const SynthParams& p) {
  CQBox family = p.family ? *p.family : [&] {
    Rng rng = make_rng(p.seed, 0);
    return disordered_box(random_disordered_forms(rng));
  }();
  const MixedStrategy ms = mixed_disordered_strategy(family, p.tol);
  const SimulationResult r = simulate(ms, {p.samples, p.seed});
  const double distance = cq_box_distance(r.box, family);
  bool columns_pass = true;
  Json intervals = Json::array();
  for (std::size_t k = 0; k < ms.strategies.size(); ++k) {
    const auto col = cq_no_signalling(ms.column(k, family.structure(), family.inputs().radices()), p.tol);
    columns_pass = columns_pass && col.pass;
    intervals.push_back({{"weight", ms.schedule.intervals[k].weight},
                         {"choice", ms.schedule.intervals[k].choice},
                         {"column_no_signalling", col.pass}});
  }
  const auto box = cq_no_signalling(r.box, p.tol);
  SynthOutcome out{"mixed-disordered", {{"family", p.family ? "file" : "seeded disordered family"}}, family, r.box,
                   Json::object(), Json::object(), false};
  out.metrics["distance"] = distance;
  out.metrics["simulated_no_signalling"] = report_json(box);
  out.metrics["columns_no_signalling"] = columns_pass;
  out.metrics["samples"] = r.samples;
  out.certificate["intervals"] = std::move(intervals);
  out.pass = distance <= p.tol && box.pass && columns_pass;
  return out;
}

SynthOutcome ghz(const SynthParams& p) {
  const int m = p.m.value_or(1), n = p.n.value_or(2);
  const MultipartyStrategy s = ghz_phase_strategy(m, n);
  const CQBox target = ghz_phase_box(kTwoPi * m / n);
  const CQBox sim = simulate(s);
  const double distance = cq_box_distance(sim, target);
  const auto resource = cc_no_signalling(s.box, p.tol);
  const auto box = cq_no_signalling(sim, p.tol);
  SynthOutcome out{"ghz-phase", {{"m", m}, {"n", n}}, target, sim, Json::object(), Json::object(), false};
  out.metrics["distance"] = distance;
  out.metrics["resource_no_signalling"] = report_json(resource);
  out.metrics["simulated_no_signalling"] = report_json(box);
  out.certificate["resource"] = "three-party cyclic coupling";
  out.certificate["note"] = "construction specific to this library; no published protocol";
  out.pass = distance <= p.tol && resource.pass && box.pass;
  return out;
}

SynthOutcome bit_flip(const SynthParams& p) {
  return finish("bit-flip", Json::object(), bit_flip_strategy(), bit_flip_target(), p);
}

}  // namespace

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"bit-flip",      "sign-flip",   "phase",
                                                 "irrational-phase", "max-entangled", "eight-output",
                                                 "nonmax-pure",   "general-pure", "mixed-disordered",
                                                 "ghz-phase"};
  return names;
}

SynthOutcome synthesize(const std::string& name, const SynthParams& params) {
  if (name == "bit-flip") return bit_flip(params);
  if (name == "sign-flip") return sign_flip(params);
  if (name == "phase") return phase(params);
  if (name == "irrational-phase") return irrational(params);
  if (name == "max-entangled") return max_entangled(params);
  if (name == "eight-output") return eight_output(params);
  if (name == "nonmax-pure") return nonmax(params);
  if (name == "general-pure") return general_pure(params);
  if (name == "mixed-disordered") return mixed(params);
  if (name == "ghz-phase") return ghz(params);
  throw ParameterError("unknown construction '" + name + "'");
}

}  // namespace cqbox::cli
