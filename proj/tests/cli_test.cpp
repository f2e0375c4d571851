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

#include <filesystem>
#include <sstream>

#include "cqbox/boxes/no_signalling.hpp"
#include "cqbox/cli/app.hpp"
#include "cqbox/cli/catalog.hpp"
#include "cqbox/cli/document.hpp"

using namespace cqbox;
using namespace cqbox::cli;

namespace {

const std::filesystem::path kFixtures = CQBOX_FIXTURE_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json report_of(const CliRun& r) { return Json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cqbox_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

double box_distance(const BoxDocument& a, const BoxDocument& b) {
  if (a.is_cq() != b.is_cq()) return 1.0;
  if (a.is_cq()) return cq_box_distance(std::get<CQBox>(a.box), std::get<CQBox>(b.box));
  return cc_box_distance(std::get<CCBox>(a.box), std::get<CCBox>(b.box));
}

}  // namespace

TEST(Documents, EveryFixtureRoundTrips) {
  int boxes = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("wphase-", 0) == 0) continue;
    const std::string text = read_file(entry.path());
    const BoxDocument doc = parse_box_document(text);
    const std::string again = render(to_json(doc));
    const BoxDocument back = parse_box_document(again);
    EXPECT_EQ(box_distance(doc, back), 0.0) << name;
    EXPECT_EQ(render(to_json(back)), again) << name;
    ++boxes;
  }
  EXPECT_GE(boxes, 13);
}

TEST(Documents, GeneratedFixturesAreByteStable) {
  for (const auto& name : construction_names()) {
    const std::string text = read_file(kFixtures / (name + ".json"));
    EXPECT_EQ(render(to_json(parse_box_document(text))), text) << name;
  }
}

TEST(Documents, SyntaxErrorsNameTheLine) {
  try {
    parse_box_document("{\n  \"format\": \"cqbox-box\",\n  \"version\": 1,\n  \"kind\": [\n");
    FAIL() << "expected a DocumentError";
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(Documents, StructuralErrorsNameTheField) {
  Json j = Json::parse(read_file(kFixtures / "pr-box-cc.json"));
  j["payload"]["table"][2][1] = "x";
  try {
    box_document_from_json(j);
    FAIL() << "expected a DocumentError";
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("payload.table[2][1]"), std::string::npos) << e.what();
  }
  j = Json::parse(read_file(kFixtures / "pr-box-cc.json"));
  j["payload"]["table"][0][0] = 0.9;
  EXPECT_THROW(box_document_from_json(j), DocumentError);
  j = Json::parse(read_file(kFixtures / "pr-box-cc.json"));
  j["version"] = 7;
  EXPECT_THROW(box_document_from_json(j), DocumentError);
}

TEST(Documents, PhaseAssignmentRoundTrip) {
  const PhaseAssignment p = parse_phase_assignment(read_file(kFixtures / "wphase-local.json"));
  const PhaseAssignment q = parse_phase_assignment(render(to_json(p)));
  EXPECT_EQ(p.alpha, q.alpha);
  EXPECT_EQ(p.beta, q.beta);
  EXPECT_EQ(p.gamma, q.gamma);
  EXPECT_THROW(parse_phase_assignment(R"({"format": "cqbox-wphase", "version": 1, "alpha": [0]})"), DocumentError);
}

TEST(Documents, DigestIsStable) {
  EXPECT_EQ(digest(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(digest("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Verify, ExitCodes) {
  EXPECT_EQ(run({"verify", (kFixtures / "bit-flip.json").string()}).code, kExitPass);
  EXPECT_EQ(run({"verify", (kFixtures / "pr-box-cc.json").string()}).code, kExitPass);
  const CliRun sig = run({"verify", (kFixtures / "signalling-cq.json").string()});
  EXPECT_EQ(sig.code, kExitFail);
  EXPECT_EQ(report_of(sig)["status"], "fail");
  EXPECT_EQ(run({"verify", (kFixtures / "signalling-cc.json").string()}).code, kExitFail);
  EXPECT_EQ(run({"verify", (kFixtures / "bit-flip.json").string(), "--kind", "cc"}).code, kExitInputError);
  EXPECT_EQ(run({"verify", (kFixtures / "no-such-file.json").string()}).code, kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
}

TEST(Verify, TruncatedFileIsAnInputError) {
  const auto dir = scratch("truncated");
  const std::string text = read_file(kFixtures / "phase.json");
  write_file(dir / "cut.json", text.substr(0, text.size() / 2));
  const CliRun r = run({"verify", (dir / "cut.json").string()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Synth, EveryConstructionMatchesItsGolden) {
  for (const auto& name : construction_names()) {
    const auto dir = scratch("golden_" + name);
    const CliRun r = run({"synth", name, "--seed", "1", "--out", dir.string()});
    ASSERT_EQ(r.code, kExitPass) << name << r.err;
    const BoxDocument golden = parse_box_document(read_file(kFixtures / (name + ".json")));
    const BoxDocument target = parse_box_document(read_file(dir / "target.json"));
    EXPECT_LE(box_distance(golden, target), 1e-12) << name;
    // Written boxes re-verify with the same tolerance.
    EXPECT_EQ(run({"verify", (dir / "target.json").string()}).code, kExitPass) << name;
    EXPECT_EQ(run({"verify", (dir / "simulated.json").string()}).code, kExitPass) << name;
    EXPECT_EQ(read_file(dir / "report.json"), r.out) << name;
  }
}

TEST(Synth, PhaseQuarterTurn) {
  const CliRun r = run({"synth", "phase", "--m", "1", "--n", "4"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_LE(report_of(r)["metrics"]["distance"].get<double>(), 1e-10);
}

TEST(Synth, EightOutputEchoesPairing) {
  const Json rep = report_of(run({"synth", "eight-output"}));
  EXPECT_EQ(rep["certificate"]["pairing_1_1"], Json::parse("[1,2,3,0,5,6,7,4]"));
  EXPECT_TRUE(rep["certificate"]["pairing_1_2"].is_array());
  EXPECT_EQ(rep["status"], "pass");
}

TEST(Synth, ParameterErrors) {
  EXPECT_EQ(run({"synth", "phase", "--n", "1"}).code, kExitInputError);
  EXPECT_EQ(run({"synth", "no-such-construction"}).code, kExitInputError);
  EXPECT_EQ(run({"synth", "sign-flip", "--alpha", "1.5"}).code, kExitInputError);
  EXPECT_EQ(run({"synth", "ghz-phase", "--n", "1"}).code, kExitInputError);
  EXPECT_EQ(run({"synth", "general-pure", "--box", (kFixtures / "signalling-cq.json").string()}).code,
            kExitInputError);
}

TEST(Synth, FamilyFromFile) {
  const CliRun r = run({"synth", "mixed-disordered", "--box", (kFixtures / "bit-flip.json").string()});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const CliRun g = run({"synth", "general-pure", "--box", (kFixtures / "general-pure.json").string()});
  EXPECT_EQ(g.code, kExitPass) << g.err;
}

TEST(Synth, FailingTolerance) {
  // The n = 3 approximation of an irrational phase cannot meet a tiny distance
  // tolerance, but its own error bound still holds.
  const CliRun r = run({"synth", "irrational-phase", "--n", "3"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_GT(report_of(r)["metrics"]["distance"].get<double>(), 1e-3);
}

TEST(Determinism, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"bound", "--n", "3", "--seed", "7"},
      {"synth", "max-entangled", "--dim", "3", "--seed", "11"},
      {"synth", "mixed-disordered", "--seed", "5"},
      {"verify", (kFixtures / "signalling-cq.json").string()},
      {"wphase", "--mode", "single", (kFixtures / "wphase-xz.json").string()},
  };
  for (const auto& c : commands) {
    const CliRun a = run(c);
    const CliRun b = run(c);
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out.find("wall"), std::string::npos);
    EXPECT_NE(a.err.find("wall time"), std::string::npos);
  }
  EXPECT_EQ(run({"bound", "--n", "3", "--seed", "7", "--threads", "3"}).out,
            run({"bound", "--n", "3", "--seed", "7"}).out);
  EXPECT_EQ(report_of(run({"bound", "--n", "2", "--seed", "7"}))["seed"], 7);
}

TEST(Bound, FrontierAndLimits) {
  const CliRun r = run({"bound", "--n", "2"});
  ASSERT_EQ(r.code, kExitPass);
  const Json rep = report_of(r);
  ASSERT_EQ(rep["frontier"].size(), 2u);
  EXPECT_GE(rep["frontier"][1]["best_fidelity"].get<double>(), 1.0 - 1e-9);
  EXPECT_EQ(run({"bound", "--n", "5"}).code, kExitInputError);
  EXPECT_EQ(run({"bound", "--n", "3", "--kmax", "4"}).code, kExitInputError);
  const CliRun starved = run({"bound", "--n", "2", "--budget", "2"});
  EXPECT_EQ(starved.code, kExitBudgetWarning);
  EXPECT_EQ(report_of(starved)["status"], "budget-warning");
  EXPECT_EQ(report_of(run({"bound", "--n", "4", "--kmax", "2"}))["frontier"].size(), 2u);
}

TEST(WPhase, SingleAssignments) {
  const CliRun local = run({"wphase", "--mode", "single", (kFixtures / "wphase-local.json").string()});
  EXPECT_EQ(local.code, kExitPass);
  const Json lrep = report_of(local);
  EXPECT_TRUE(lrep["metrics"]["local_equivalence"]["local"].get<bool>());
  EXPECT_NEAR(lrep["metrics"]["local_equivalence"]["gamma"][1].get<double>(), 2.1, 1e-12);

  const CliRun xz = run({"wphase", "--mode", "single", (kFixtures / "wphase-xz.json").string()});
  EXPECT_EQ(xz.code, kExitFail);
  bool bc = false;
  const Json xrep = report_of(xz);
  for (const auto& w : xrep["metrics"]["witnesses"]) bc = bc || w["subgroup"] == Json::parse(R"(["B","C"])");
  EXPECT_TRUE(bc);
  EXPECT_TRUE(xrep["metrics"]["consistent"].get<bool>());

  EXPECT_EQ(run({"wphase", "--mode", "single"}).code, kExitInputError);
  EXPECT_EQ(run({"wphase", "--mode", "single", (kFixtures / "pr-box-cc.json").string()}).code, kExitInputError);
  EXPECT_EQ(run({"wphase", "--mode", "sideways"}).code, kExitInputError);
}

TEST(WPhase, TheoremModeOnCoarseGrid) {
  const CliRun r = run({"wphase", "--grid", "2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(report_of(r)["metrics"]["local_count"], 64);
}

TEST(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("synth"), std::string::npos);
}
