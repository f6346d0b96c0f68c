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

#ifndef MINIOO_HARNESS_PROPERTY_H_
#define MINIOO_HARNESS_PROPERTY_H_

#include <string>
#include <vector>

#include "minioo/checker/diagnostic.h"
#include "minioo/frontend/resolver.h"
#include "minioo/harness/suite.h"

namespace minioo {

struct PropertyResult {
  int violations = 0;     // diagnostics under the given rule set
  bool premise = false;   // violations == 0
  // Obligations that failed: "D under S: case ..." lines.
  std::vector<std::string> failures;

  // Conformance implies substitutability.
  bool holds() const { return !premise || failures.empty(); }
};

// Checks the program under `rules`. If it conforms, every class D derived
// from the base class of a suite must be substitutable under that suite
// through its zero-argument factory make_d, and every suite must pass under
// its own factory.
PropertyResult evaluate_property(const ResolvedProgram& program,
                                 const std::vector<ContractSuite>& suites,
                                 const CheckConfig& rules);

// R1, R2, R3 and R4 with the strict mutation form.
CheckConfig property_rules();

// "make_" followed by the lowercased class name.
std::string factory_name(const std::string& class_name);

}  // namespace minioo

#endif  // MINIOO_HARNESS_PROPERTY_H_
