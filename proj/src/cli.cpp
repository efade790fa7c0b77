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

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xacml/alt_logics.hpp"
#include "xacml/textio.hpp"

namespace xacml {

namespace {

using Json = nlohmann::ordered_json;

// Raised for bad input files; maps to kExitData.
struct DataError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sequence_string(const std::vector<Decision6>& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(s[i]);
  }
  return out + ">";
}

struct EvalOptions {
  std::string policy;
  std::string request;
  bool trace = false;
  std::string format = "text";
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  PolicyNode root = [&] {
    const std::string text = read_file(o.policy);
    try {
      return parse_policy(text);
    } catch (const ParseError& e) {
      throw DataError{o.policy + ":" + e.what()};
    }
  }();
  Request q = [&] {
    const std::string text = read_file(o.request);
    try {
      return parse_request(text);
    } catch (const ParseError& e) {
      throw DataError{o.request + ":" + e.what()};
    }
  }();
  const EvalResult r = evaluate(root, q, o.trace);
  if (o.format == "structured") {
    Json j;
    j["decision"] = to_string(r.decision);
    out << j.dump() << "\n";
    if (r.trace) out << format_trace_structured(*r.trace);
  } else {
    out << to_string(r.decision) << "\n";
    if (r.trace) out << format_trace_text(*r.trace);
  }
  return exit_code_for(r.decision);
}

struct EquivalenceOptions {
  std::string algorithm = "all";
  std::size_t max_len = 5;
  std::string format = "text";
};

int cmd_check_equivalence(const EquivalenceOptions& o, std::ostream& out,
                          std::ostream& err, CombinerResolver resolve) {
  std::vector<CombinerId> ids;
  if (o.algorithm == "all") {
    ids = {CombinerId::kPermitOverrides, CombinerId::kDenyOverrides,
           CombinerId::kFirstApplicable, CombinerId::kOnlyOneApplicable};
  } else {
    auto id = parse_combiner_token(o.algorithm);
    if (!id || *id == CombinerId::kAllPermit) {
      err << "check-equivalence: unsupported algorithm '" << o.algorithm
          << "' (expected p-o, d-o, f-a, o-1-a or all)\n";
      return kExitUsage;
    }
    ids = {*id};
  }

  bool all_hold = true;
  for (CombinerId id : ids) {
    const EquivalenceReport r = check_equivalence(id, o.max_len, resolve(id));
    all_hold = all_hold && r.holds();
    if (o.format == "structured") {
      Json j;
      j["algorithm"] = to_token(id);
      j["max_len"] = r.max_length;
      j["sequences"] = r.sequences_checked;
      j["counterexamples"] = r.counterexamples.size();
      if (r.holds()) {
        j["first_counterexample"] = nullptr;
      } else {
        const Counterexample& c = r.counterexamples.front();
        Json cj;
        auto input = Json::array();
        for (Decision6 d : c.input) input.push_back(to_string(d));
        cj["input"] = std::move(input);
        cj["v6"] = to_string(c.v6_result);
        cj["delta_v6"] = to_string(delta(c.v6_result));
        cj["pair"] = to_string(c.pair_result);
        j["first_counterexample"] = std::move(cj);
      }
      out << j.dump() << "\n";
    } else {
      out << to_token(id) << ": " << r.sequences_checked
          << " sequences, max length " << r.max_length << ", "
          << r.counterexamples.size() << " counterexamples\n";
      if (!r.holds()) {
        const Counterexample& c = r.counterexamples.front();
        out << "  first counterexample: " << sequence_string(c.input)
            << " v6=" << to_string(c.v6_result)
            << " delta(v6)=" << to_string(delta(c.v6_result))
            << " pair=" << to_string(c.pair_result) << "\n";
      }
    }
  }
  return all_hold ? 0 : kExitCheckFailed;
}

struct CompareOptions {
  std::vector<std::string> inputs;
  std::string format = "text";
};

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  std::array<Decision6, 2> in{};
  for (std::size_t i = 0; i < 2; ++i) {
    auto d = parse_decision6(o.inputs[i]);
    if (!d) {
      err << "compare: unknown decision '" << o.inputs[i] << "'\n";
      return kExitUsage;
    }
    in[i] = *d;
  }
  const ComparisonRow row = compare_logics(in[0], in[1]);
  if (o.format == "structured") {
    Json j;
    j["algorithm"] = "p-o";
    j["inputs"] = {to_string(row.lhs), to_string(row.rhs)};
    j["belnap"] = to_string(row.belnap);
    j["dalg"] = to_string(row.dalg);
    j["v6"] = to_string(row.v6);
    j["pair"] = to_string(row.pair);
    auto diverging = Json::array();
    if (row.belnap_diverges) diverging.push_back("belnap");
    if (row.dalg_diverges) diverging.push_back("dalg");
    if (row.pair_diverges) diverging.push_back("pair");
    j["diverging"] = std::move(diverging);
    out << j.dump() << "\n";
    return 0;
  }
  auto flag = [](bool diverges) {
    return diverges ? "  (diverges from V6)" : "";
  };
  out << "p-o(" << to_string(row.lhs) << ", " << to_string(row.rhs) << ")\n";
  out << "Belnap = " << to_string(row.belnap) << flag(row.belnap_diverges)
      << "\n";
  out << "D-algebra = " << to_string(row.dalg) << flag(row.dalg_diverges)
      << "\n";
  out << "V6 = " << to_string(row.v6) << "\n";
  out << "pair = " << to_string(row.pair) << flag(row.pair_diverges) << "\n";
  return 0;
}

struct LatticeOptions {
  std::string name;
  std::string out = "-";
};

int cmd_lattice(const LatticeOptions& o, std::ostream& out, std::ostream& err) {
  std::string dot;
  try {
    dot = emit_lattice_dot(o.name);
  } catch (const UnknownLattice& e) {
    err << "lattice: " << e.what() << "; known:";
    for (std::string_view n : lattice_names()) err << " " << n;
    err << "\n";
    return kExitUsage;
  }
  if (o.out == "-") {
    out << dot;
    return 0;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << dot) || !file.flush())
    throw DataError{"cannot write '" + o.out + "'"};
  return 0;
}

}  // namespace

int exit_code_for(Decision6 d) {
  switch (d) {
    case Decision6::kPermit:
      return kExitPermit;
    case Decision6::kDeny:
      return kExitDeny;
    case Decision6::kNotApplicable:
      return kExitNotApplicable;
    case Decision6::kIndetD:
    case Decision6::kIndetP:
    case Decision6::kIndetDP:
      return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, CombinerResolver resolve) {
  CLI::App app{"XACML 3.0 policy decision engine", "xacml-logic"};
  app.require_subcommand(1);

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate a policy against a request");
  eval->add_option("--policy", eval_opts.policy, "Policy file (.pol)")->required();
  eval->add_option("--request", eval_opts.request, "Request file (.req)")->required();
  eval->add_flag("--trace", eval_opts.trace, "Print the evaluation trace");
  eval->add_option("--format", eval_opts.format)
      ->check(CLI::IsMember({"text", "structured"}));

  EquivalenceOptions eq_opts;
  auto* eq = app.add_subcommand(
      "check-equivalence", "Compare the V6 and pair encodings exhaustively");
  eq->add_option("--algorithm", eq_opts.algorithm,
                 "p-o, d-o, f-a, o-1-a or all");
  eq->add_option("--max-len", eq_opts.max_len, "Longest sequence to check")
      ->check(CLI::Range(0, 9));
  eq->add_option("--format", eq_opts.format)
      ->check(CLI::IsMember({"text", "structured"}));

  CompareOptions cmp_opts;
  auto* cmp = app.add_subcommand(
      "compare", "Permit-overrides on two decisions in all four logics");
  cmp->add_option("inputs", cmp_opts.inputs, "Two decision names")
      ->required()
      ->expected(2);
  cmp->add_option("--format", cmp_opts.format)
      ->check(CLI::IsMember({"text", "structured"}));

  LatticeOptions lat_opts;
  auto* lat = app.add_subcommand("lattice", "Write a lattice as DOT");
  lat->add_option("--name", lat_opts.name, "Lattice id")->required();
  lat->add_option("--out", lat_opts.out, "Output path, - for stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("xacml-logic");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_opts, out);
    if (*eq) return cmd_check_equivalence(eq_opts, out, err, resolve);
    if (*cmp) return cmd_compare(cmp_opts, out, err);
    if (*lat) return cmd_lattice(lat_opts, out, err);
  } catch (const DataError& e) {
    err << e.message << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace xacml
