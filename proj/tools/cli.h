/* Copyright 2026 The Lambek Brackets Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// The `lambek` command-line front end, as a library so tests can drive it
// with in-memory streams.
//
//   lambek check     SEQUENT [--calculus lbstar|lbstar1|lbstar1p]
//   lambek prove     SEQUENT [--calculus ...] [--format text|json]
//   lambek translate SEQUENT
//   lambek grammar   FILE WORD --mode s|t [--budget N]
//   lambek selftest  --max-size N
//
// Exit status: 0 derivable/accepted/passed, 1 underivable/rejected/failed,
// 2 usage or input error. Results go to `out`, diagnostics to `err`.

#ifndef LAMBEK_TOOLS_CLI_H_
#define LAMBEK_TOOLS_CLI_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lambek/calculus.h"
#include "lambek/text_io.h"

namespace lambek::cli {

enum ExitStatus : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
};

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Derivation <-> {"rule": ..., "conclusion": ..., "premises": [...]}.
// Conclusions use pN names so the dump parses back without a symbol table.
std::string DerivationToJson(const Derivation& d, int indent = 2);
// Throws Error on schema violations and SyntaxError on bad conclusions.
Derivation DerivationFromJson(const std::string& json_text);

// Indented rule tree, one node per line: "RULE: CONCLUSION".
std::string FormatDerivationTree(const Derivation& d,
                                 const SymbolTable* symbols = nullptr);

struct SelfTestOptions {
  int max_size = 5;
  // Fault injection: rules removed from Lb*1' in every suite.
  RuleMask disabled_primed_rules;
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return failures == 0; }
};

// Unit elimination agreement, Lb*1 vs Lb*1' agreement, conservativity and a
// cut admissibility spot check over the exhaustive enumeration up to
// max_size.
std::vector<SuiteResult> RunSelfTest(const SelfTestOptions& options);

// Runs the suites and prints one line per suite; kOk iff all passed.
int SelfTestCommand(const SelfTestOptions& options, std::ostream& out);

}  // namespace lambek::cli

#endif  // LAMBEK_TOOLS_CLI_H_
