// Copyright 2026 The xacml-logic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xacml/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace xacml {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, CombinerResolver resolve = standard_impl) {
  args.insert(args.begin(), "xacml-logic");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, resolve);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) {
  return std::string(XACML_SAMPLES_DIR) + "/" + name;
}

TEST(CliEvalTest, PatientRequests) {
  const CliRun r1 = run({"eval", "--policy", sample("patient.pol"), "--request",
                      sample("request1.req")});
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, "Permit\n");
  EXPECT_TRUE(r1.err.empty());

  const CliRun r2 = run({"eval", "--policy", sample("patient.pol"), "--request",
                      sample("request2.req")});
  EXPECT_EQ(r2.code, 1);
  EXPECT_EQ(r2.out, "Deny\n");
}

TEST(CliEvalTest, MissingFileIsDataError) {
  const CliRun r = run({"eval", "--policy", sample("patient.pol"), "--request",
                     sample("missing.req")});
  EXPECT_EQ(r.code, 65);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("missing.req"), std::string::npos);
}

TEST(CliEvalTest, ParseErrorIsDataError) {
  const auto path = std::filesystem::temp_directory_path() / "xacml_cli_bad.pol";
  std::ofstream(path) << "policy P { target: null; combiner: d-o; rules: [] }\n";
  const CliRun r = run({"eval", "--policy", path.string(), "--request",
                     sample("request1.req")});
  EXPECT_EQ(r.code, 65);
  EXPECT_NE(r.err.find("1:1"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliEvalTest, ExitCodesForOtherDecisions) {
  EXPECT_EQ(exit_code_for(Decision6::kNotApplicable), 2);
  EXPECT_EQ(exit_code_for(Decision6::kIndetP), 3);
  EXPECT_EQ(exit_code_for(Decision6::kIndetD), 3);
  EXPECT_EQ(exit_code_for(Decision6::kIndetDP), 3);

  const auto dir = std::filesystem::temp_directory_path();
  std::ofstream(dir / "xacml_cli_err.req")
      << "{ subject(doctor), error:action(read), resource(patient_record) }\n";
  const CliRun r = run({"eval", "--policy", sample("patient.pol"), "--request",
                     (dir / "xacml_cli_err.req").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "Indeterminate{P}\n");
  std::ofstream(dir / "xacml_cli_na.req") << "{ subject(visitor) }\n";
  EXPECT_EQ(run({"eval", "--policy", sample("patient.pol"), "--request",
                 (dir / "xacml_cli_na.req").string()})
                .code,
            2);
  std::filesystem::remove(dir / "xacml_cli_err.req");
  std::filesystem::remove(dir / "xacml_cli_na.req");
}

TEST(CliEvalTest, TraceAndStructuredOutput) {
  const CliRun text = run({"eval", "--policy", sample("patient.pol"), "--request",
                        sample("request2.req"), "--trace"});
  EXPECT_EQ(text.out.rfind("Deny\n/ policyset PS_patient", 0), 0u);

  const CliRun js = run({"eval", "--policy", sample("patient.pol"), "--request",
                      sample("request2.req"), "--trace", "--format", "structured"});
  EXPECT_EQ(js.code, 1);
  std::istringstream in(js.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "{\"decision\":\"Deny\"}");
  std::size_t records = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::ordered_json::parse(line);
    EXPECT_EQ(j.begin().key(), "path");
    ++records;
  }
  EXPECT_EQ(records, 8u);
}

TEST(CliEquivalenceTest, AllAtFive) {
  const CliRun r = run({"check-equivalence", "--algorithm", "all", "--max-len", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "p-o: 9331 sequences, max length 5, 0 counterexamples\n"
            "d-o: 9331 sequences, max length 5, 0 counterexamples\n"
            "f-a: 9331 sequences, max length 5, 0 counterexamples\n"
            "o-1-a: 9331 sequences, max length 5, 0 counterexamples\n");
  EXPECT_EQ(run({"check-equivalence"}).out, r.out);
}

TEST(CliEquivalenceTest, EmptyOnly) {
  const CliRun r = run({"check-equivalence", "--algorithm", "p-o", "--max-len", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p-o: 1 sequences, max length 0, 0 counterexamples\n");
}

TEST(CliEquivalenceTest, StructuredReport) {
  const CliRun r = run({"check-equivalence", "--algorithm", "o-1-a", "--max-len", "2",
                     "--format", "structured"});
  EXPECT_EQ(r.out,
            "{\"algorithm\":\"o-1-a\",\"max_len\":2,\"sequences\":43,"
            "\"counterexamples\":0,\"first_counterexample\":null}\n");
}

Decision6 constant_deny(std::span<const Decision6>) { return Decision6::kDeny; }

CombinerImpl mutated(CombinerId id) {
  CombinerImpl impl = standard_impl(id);
  if (id == CombinerId::kDenyOverrides) impl.v6 = constant_deny;
  return impl;
}

TEST(CliEquivalenceTest, MutatedBuildFails) {
  const CliRun r = run({"check-equivalence", "--algorithm", "all", "--max-len", "1"},
                    mutated);
  EXPECT_EQ(r.code, 70);
  EXPECT_NE(r.out.find("d-o: 7 sequences, max length 1, 6 counterexamples\n"
                       "  first counterexample: <> v6=Deny delta(v6)=[1,0] pair=[0,0]"),
            std::string::npos);
}

TEST(CliEquivalenceTest, UnknownAlgorithmIsUsageError) {
  EXPECT_EQ(run({"check-equivalence", "--algorithm", "x-y"}).code, 64);
  EXPECT_EQ(run({"check-equivalence", "--algorithm", "all-permit"}).code, 64);
  EXPECT_EQ(run({"check-equivalence", "--max-len", "-1"}).code, 64);
}

TEST(CliCompareTest, IndetPermitAgainstDeny) {
  const CliRun r = run({"compare", "Indeterminate{P}", "Deny"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "p-o(Indeterminate{P}, Deny)\n"
            "Belnap = ff  (diverges from V6)\n"
            "D-algebra = {p,d}  (diverges from V6)\n"
            "V6 = Indeterminate{DP}\n"
            "pair = [1/2,1/2]\n");
}

TEST(CliCompareTest, AgreementAndStructured) {
  const CliRun r = run({"compare", "Permit", "NotApplicable", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["belnap"], "tt");
  EXPECT_EQ(j["dalg"], "{p}");
  EXPECT_EQ(j["v6"], "Permit");
  EXPECT_EQ(j["pair"], "[0,1]");
  EXPECT_TRUE(j["diverging"].empty());
}

TEST(CliCompareTest, UnknownDecision) {
  const CliRun r = run({"compare", "Bogus", "Deny"});
  EXPECT_EQ(r.code, 64);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"compare", "Deny"}).code, 64);
}

TEST(CliLatticeTest, StdoutAndFile) {
  const CliRun r = run({"lattice", "--name", "pair9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph \"pair9\" {", 0), 0u);

  const auto path = std::filesystem::temp_directory_path() / "xacml_po.dot";
  std::filesystem::remove(path);
  const CliRun f = run({"lattice", "--name", "po", "--out", path.string()});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::ostringstream body;
  body << in.rdbuf();
  EXPECT_EQ(body.str().rfind("digraph \"po\"", 0), 0u);
  std::filesystem::remove(path);
}

TEST(CliLatticeTest, UnknownName) {
  const CliRun r = run({"lattice", "--name", "nope", "--out", "-"});
  EXPECT_EQ(r.code, 64);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliUsageTest, BadInvocations) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"eval", "--policy", sample("patient.pol")}).code, 64);
  EXPECT_EQ(run({"eval", "--policy", "a", "--request", "b", "--format", "xml"}).code, 64);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("check-equivalence"), std::string::npos);
}

}  // namespace
}  // namespace xacml
