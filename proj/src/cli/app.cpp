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
#include "cqbox/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"

#include "cqbox/bounds/phase_bounds.hpp"
#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/cli/catalog.hpp"
#include "cqbox/cli/document.hpp"
#include "cqbox/multipartite/w_phase.hpp"

namespace cqbox::cli {
namespace {

struct GlobalOptions {
  std::optional<double> tol;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;

  double tolerance() const { return tol.value_or(kTolNum); }
};

struct CommandResult {
  Json report;
  int code = kExitPass;
  /// Extra documents written next to the report when --out is given.
  std::vector<std::pair<std::string, std::string>> files;
};

Json witnesses_json(const NoSignallingReport& r) {
  Json w = Json::array();
  for (const auto& s : r.witnesses) {
    w.push_back({{"subgroup", s.subgroup},
                 {"fixed_inputs", s.fixed_inputs},
                 {"varied_from", s.varied_from},
                 {"varied_to", s.varied_to},
                 {"distance", s.distance}});
  }
  return w;
}

Json header(const std::string& command, const std::string& inputs_digest, const GlobalOptions& g, double tol) {
  Json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["seed"] = g.seed;
  j["tolerance"] = tol;
  return j;
}

void set_status(Json& report, bool pass, bool budget_exhausted = false) {
  report["pass"] = pass;
  report["status"] = budget_exhausted ? "budget-warning" : (pass ? "pass" : "fail");
}

int status_code(bool pass, bool budget_exhausted = false) {
  if (budget_exhausted) return kExitBudgetWarning;
  return pass ? kExitPass : kExitFail;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::string kind;
};

CommandResult run_verify(const VerifyArgs& a, const GlobalOptions& g) {
  const std::string text = read_file(a.path);
  const BoxDocument doc = parse_box_document(text);
  const std::string kind = doc.is_cq() ? "cq" : "cc";
  if (!a.kind.empty() && a.kind != kind) {
    throw DocumentError("field kind: document is '" + kind + "' but --kind " + a.kind + " was requested");
  }
  const double tol = g.tol.value_or(doc.metadata.tolerance);
  const NoSignallingReport r =
      doc.is_cq() ? cq_no_signalling(std::get<CQBox>(doc.box), tol) : cc_no_signalling(std::get<CCBox>(doc.box), tol);
  CommandResult res;
  res.report = header("verify", digest(text), g, tol);
  res.report["kind"] = kind;
  res.report["label"] = doc.metadata.label;
  set_status(res.report, r.pass);
  res.report["metrics"] = {{"worst_violation", r.worst_violation}, {"witnesses", witnesses_json(r)}};
  res.code = status_code(r.pass);
  return res;
}

// synth ----------------------------------------------------------------------

struct SynthArgs {
  std::string construction;
  std::optional<int> m, n, dim, levels;
  std::optional<double> alpha, theta;
  std::string box;
  std::size_t samples = 100;
};

CommandResult run_synth(const SynthArgs& a, const GlobalOptions& g) {
  SynthParams p;
  p.m = a.m;
  p.n = a.n;
  p.dim = a.dim;
  p.levels = a.levels;
  p.alpha = a.alpha;
  p.theta = a.theta;
  p.samples = a.samples;
  p.seed = RandomSeed{g.seed};
  p.tol = g.tolerance();
  std::string family_digest;
  if (!a.box.empty()) {
    const std::string text = read_file(a.box);
    BoxDocument doc = parse_box_document(text);
    if (!doc.is_cq()) throw DocumentError("field kind: --box needs a cq document");
    p.family = std::get<CQBox>(std::move(doc.box));
    family_digest = digest(text);
  }
  const SynthOutcome o = synthesize(a.construction, p);

  Json params = o.parameters;
  params["samples"] = a.samples;
  CommandResult res;
  res.report = header("synth", digest(a.construction + "\n" + params.dump() + "\n" + family_digest), g, p.tol);
  res.report["construction"] = o.construction;
  res.report["parameters"] = params;
  set_status(res.report, o.pass);
  res.report["metrics"] = o.metrics;
  res.report["certificate"] = o.certificate;
  res.code = status_code(o.pass);
  BoxMetadata meta{o.construction + " target", g.seed, p.tol};
  res.files.emplace_back("target.json", render(to_json(o.target, meta)));
  meta.label = o.construction + " simulated";
  res.files.emplace_back("simulated.json", render(to_json(o.simulated, meta)));
  return res;
}

// bound ----------------------------------------------------------------------

struct BoundArgs {
  int n = 0;
  std::optional<int> kmax;
  int budget = OptimizerBudget{}.max_iterations;
  int restarts = OptimizerBudget{}.restarts;
};

Json spec_json(const PhaseStrategySpec& s) {
  return {{"k", s.k},
          {"alice_phases", s.alice_phases},
          {"bob_phases", s.bob_phases},
          {"couplings", s.couplings},
          {"marginal", s.marginal}};
}

CommandResult run_bound(const BoundArgs& a, const GlobalOptions& g) {
  OptimizerBudget budget;
  if (a.n < 2 || a.n > 4) throw ParameterError("--n must lie in 2..4 (larger n exceeds the enumeration cap)");
  const int kmax = a.kmax.value_or(a.n);
  if (kmax < 1 || kmax > a.n) throw ParameterError("--kmax must lie in 1..n");
  if (a.budget < 1 || a.restarts < 1) throw ParameterError("--budget and --restarts must be positive");
  budget.max_iterations = a.budget;
  budget.restarts = a.restarts;
  budget.threads = std::max(1, g.threads);

  bool pass = true, exhausted = false;
  Json rows = Json::array();
  for (int k = 1; k <= kmax; ++k) {
    const BoundResult r = best_fidelity(a.n, k, budget, RandomSeed{g.seed});
    Json row;
    row["k"] = k;
    row["best_fidelity"] = r.best_fidelity;
    bool ok = false;
    if (k < a.n) {
      row["ceiling"] = 1.0 - bound_gap(a.n, k);
      ok = r.best_fidelity <= 1.0 - bound_gap(a.n, k);
    } else {
      row["floor"] = 1.0 - 1e-9;
      ok = r.best_fidelity >= 1.0 - 1e-9;
    }
    row["pass"] = ok;
    row["trace"] = {{"starts", r.trace.starts},
                    {"iterations", r.trace.iterations},
                    {"residual", r.trace.residual},
                    {"unconverged", r.trace.unconverged}};
    row["certificate"] = spec_json(r.certificate);
    pass = pass && ok;
    exhausted = exhausted || r.trace.unconverged > 0;
    rows.push_back(std::move(row));
  }
  const Json params = {{"n", a.n}, {"kmax", kmax}, {"budget", a.budget}, {"restarts", a.restarts}};
  CommandResult res;
  res.report = header("bound", digest(params.dump()), g, 1e-9);
  res.report["parameters"] = params;
  set_status(res.report, pass, exhausted);
  res.report["frontier"] = std::move(rows);
  res.code = status_code(pass, exhausted);
  return res;
}

// wphase ---------------------------------------------------------------------

struct WPhaseArgs {
  std::string mode = "theorem";
  std::string assignment;
  int grid = 4;
  double min_violation = 1e-3;
};

CommandResult run_wphase(const WPhaseArgs& a, const GlobalOptions& g) {
  const double tol = g.tolerance();
  CommandResult res;
  if (a.mode == "theorem") {
    if (!a.assignment.empty()) throw ParameterError("theorem mode takes no assignment");
    const auto rep = w_phase_theorem_check(a.grid, tol, a.min_violation, std::max(1, g.threads));
    const Json params = {{"mode", a.mode}, {"grid", a.grid}, {"min_violation", a.min_violation}};
    res.report = header("wphase", digest(params.dump()), g, tol);
    res.report["parameters"] = params;
    set_status(res.report, rep.pass);
    res.report["metrics"] = {{"local_count", rep.local_count},
                             {"local_failures", rep.local_failures},
                             {"worst_local_violation", rep.worst_local_violation},
                             {"perturbed_count", rep.perturbed_count},
                             {"perturbed_failures", rep.perturbed_failures},
                             {"smallest_perturbed_violation", rep.smallest_perturbed_violation},
                             {"disagreements", rep.disagreements}};
    res.code = status_code(rep.pass);
    return res;
  }
  if (a.mode != "single") throw ParameterError("--mode must be 'theorem' or 'single'");
  if (a.assignment.empty()) throw ParameterError("single mode needs an assignment file");
  const std::string text = read_file(a.assignment);
  const PhaseAssignment p = parse_phase_assignment(text);
  const auto ns = cq_no_signalling(w_phase_box(p), tol);
  const auto ex = is_local_equivalent(p, tol);
  res.report = header("wphase", digest(text), g, tol);
  res.report["parameters"] = {{"mode", a.mode}};
  set_status(res.report, ns.pass);
  Json local = {{"local", ex.local}, {"residual", ex.residual}};
  if (ex.local) {
    local["alpha"] = ex.alpha;
    local["beta"] = ex.beta;
    local["gamma"] = ex.gamma;
    local["global"] = ex.global;
  }
  res.report["metrics"] = {{"worst_violation", ns.worst_violation},
                           {"witnesses", witnesses_json(ns)},
                           {"local_equivalence", std::move(local)},
                           {"consistent", ns.pass == ex.local}};
  res.code = status_code(ns.pass);
  return res;
}

void emit(const CommandResult& res, const GlobalOptions& g, std::ostream& out) {
  const std::string report = render(res.report);
  out << report;
  if (g.out.empty()) return;
  const std::filesystem::path dir(g.out);
  std::filesystem::create_directories(dir);
  for (const auto& [name, contents] : res.files) write_file(dir / name, contents);
  write_file(dir / "report.json", report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify and synthesise classical-input quantum-output boxes", "cqbox"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--tol", g.tol, "Numerical tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed (default 1)");
  app.add_option("--threads", g.threads, "Worker threads for library-level loops")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Directory receiving report.json and any produced boxes");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a box document for no-signalling");
  verify->add_option("path", va.path, "Box document")->required();
  verify->add_option("--kind", va.kind, "Expected kind")->check(CLI::IsMember({"cc", "cq"}));

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Build, simulate and check a named construction");
  synth->add_option("construction,--construction", sa.construction, "Construction name")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  synth->add_option("--m", sa.m, "Phase numerator");
  synth->add_option("--n", sa.n, "Phase denominator / approximation order");
  synth->add_option("--dim", sa.dim, "Local dimension (max-entangled)");
  synth->add_option("--levels", sa.levels, "Schmidt levels (nonmax-pure)");
  synth->add_option("--alpha", sa.alpha, "Amplitude of |00>");
  synth->add_option("--theta", sa.theta, "Target phase in turns (irrational-phase)");
  synth->add_option("--box", sa.box, "Target family document (general-pure, mixed-disordered)");
  synth->add_option("--samples", sa.samples, "Draws per input for sampled resources");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Resource frontier for phase boxes");
  bound->add_option("--n", ba.n, "Phase denominator")->required();
  bound->add_option("--kmax", ba.kmax, "Largest coupling size (default n)");
  bound->add_option("--budget", ba.budget, "Iteration cap per optimiser start");
  bound->add_option("--restarts", ba.restarts, "Starts per support/pairing combination");

  WPhaseArgs wa;
  auto* wphase = app.add_subcommand("wphase", "W-phase admissibility checks");
  wphase->add_option("--mode", wa.mode, "theorem or single")->check(CLI::IsMember({"theorem", "single"}));
  wphase->add_option("assignment,--assignment", wa.assignment, "Phase assignment document (single mode)");
  wphase->add_option("--grid", wa.grid, "Grid values per full turn (theorem mode)");
  wphase->add_option("--min-violation", wa.min_violation, "Required violation of perturbed members");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    CommandResult res;
    if (*verify) {
      res = run_verify(va, g);
    } else if (*synth) {
      res = run_synth(sa, g);
    } else if (*bound) {
      res = run_bound(ba, g);
    } else {
      res = run_wphase(wa, g);
    }
    emit(res, g, out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "wall time: " << secs << " s\n";
    return res.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace cqbox::cli
