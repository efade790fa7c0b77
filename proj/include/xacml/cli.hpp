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

#ifndef XACML_CLI_HPP_
#define XACML_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "xacml/combiner.hpp"
#include "xacml/decision.hpp"

namespace xacml {

// Process exit statuses.
inline constexpr int kExitPermit = 0;
inline constexpr int kExitDeny = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitIndeterminate = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitCheckFailed = 70;

int exit_code_for(Decision6 d);

using CombinerResolver = CombinerImpl (*)(CombinerId);

// `args` includes the program name. Results go to `out`, diagnostics to
// `err`. check-equivalence takes its implementations from `resolve`, which
// lets tests substitute a broken combiner.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, CombinerResolver resolve = standard_impl);

}  // namespace xacml

#endif  // XACML_CLI_HPP_
