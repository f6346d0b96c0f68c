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

#ifndef MINIOO_CHECKER_RULES_H_
#define MINIOO_CHECKER_RULES_H_

#include <vector>

#include "minioo/checker/call_graph.h"
#include "minioo/checker/diagnostic.h"
#include "minioo/checker/mutation.h"
#include "minioo/frontend/resolver.h"

namespace minioo {

// One diagnostic per `virtual` method, at the keyword.
std::vector<Diagnostic> check_r1(const ResolvedProgram& program);

// One diagnostic per public field or method of an exported class.
std::vector<Diagnostic> check_r2(const ResolvedProgram& program);

// One diagnostic per assignment statement, at the `=`.
std::vector<Diagnostic> check_r3_strict(const ResolvedProgram& program);

// One diagnostic per callable whose summary marks a parameter. Constructors
// are reported only for marked explicit parameters.
std::vector<Diagnostic> check_r3_relaxed(const ResolvedProgram& program,
                                         const CallGraph& graph,
                                         const MutationSummary& summaries);
std::vector<Diagnostic> check_r3_relaxed(const ResolvedProgram& program);

// Constructors of derived classes must name a base constructor and may not
// assign in their body.
std::vector<Diagnostic> check_r4(const ResolvedProgram& program);

// Enabled rule results, sorted.
std::vector<Diagnostic> check_all(const ResolvedProgram& program,
                                  const CheckConfig& config);

}  // namespace minioo

#endif  // MINIOO_CHECKER_RULES_H_
