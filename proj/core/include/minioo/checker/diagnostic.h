// Copyright 2026 The MiniOO Authors.
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

#ifndef MINIOO_CHECKER_DIAGNOSTIC_H_
#define MINIOO_CHECKER_DIAGNOSTIC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minioo/frontend/ast.h"

namespace minioo {

enum class RuleId {
  kR1NoVirtual,
  kR2OpaqueExports,
  kR3SNoMutation,
  kR3RNoArgMutation,
  kR4CtorDelegation,
};

// Stable names: R1_NO_VIRTUAL, R2_OPAQUE_EXPORTS, R3S_NO_MUTATION,
// R3R_NO_ARG_MUTATION, R4_CTOR_DELEGATION.
std::string_view to_string(RuleId rule);
std::optional<RuleId> rule_from_string(std::string_view name);

struct Diagnostic {
  RuleId rule;
  Span span;
  std::string subject;  // qualified name of the offending declaration
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "FILE:LINE:COL: RULE_ID: MESSAGE"
std::string to_string(const Diagnostic& diagnostic);

// Orders by (file, line, col, rule name); stable for ties.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

enum class MutationForm { kStrict, kRelaxed };

struct CheckConfig {
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;  // R3S or R3R depending on `form`
  bool r4 = true;
  MutationForm form = MutationForm::kStrict;

  static CheckConfig all(MutationForm form = MutationForm::kStrict);
  static CheckConfig none();

  // Parses "all" or a comma-separated subset of r1,r2,r3,r4.
  static std::optional<CheckConfig> from_flags(std::string_view rules,
                                               MutationForm form);

  // The rules this configuration runs, in enumeration order.
  std::vector<RuleId> enabled() const;
};

}  // namespace minioo

#endif  // MINIOO_CHECKER_DIAGNOSTIC_H_
