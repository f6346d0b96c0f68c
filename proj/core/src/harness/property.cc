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

#include "minioo/harness/property.h"

#include <cctype>

#include "minioo/checker/rules.h"

namespace minioo {

CheckConfig property_rules() { return CheckConfig::all(MutationForm::kStrict); }

std::string factory_name(const std::string& class_name) {
  std::string out = "make_";
  for (char ch : class_name) {
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

PropertyResult evaluate_property(const ResolvedProgram& program,
                                 const std::vector<ContractSuite>& suites,
                                 const CheckConfig& rules) {
  PropertyResult result;
  result.violations = static_cast<int>(check_all(program, rules).size());
  result.premise = result.violations == 0;
  if (!result.premise) return result;

  for (const ContractSuite& suite : suites) {
    const std::string where = " under " + suite.base_class + " suite";
    try {
      for (const CaseResult& r : run_suite(program, suite, suite.factory)) {
        if (!r.passed) {
          result.failures.push_back(suite.factory + where + ": case " +
                                    r.name + " fails: " + r.note);
        }
      }
    } catch (const ConfigError& e) {
      result.failures.push_back(suite.factory + where + ": " + e.what());
      continue;
    }
    for (const ClassInfo* cls : program.classes()) {
      if (cls->name() == suite.base_class ||
          !program.is_subclass(cls->name(), suite.base_class)) {
        continue;
      }
      const std::string factory = factory_name(cls->name());
      if (!program.find_function(factory, 0)) {
        result.failures.push_back(cls->name() + where + ": no factory " +
                                  factory);
        continue;
      }
      try {
        SubstitutionReport report = substitution_test(program, suite, factory);
        for (const SubstitutionCase& c : report.cases) {
          if (c.base.passed && !c.derived.passed) {
            result.failures.push_back(cls->name() + where + ": case " + c.name +
                                      " fails: " + c.derived.note);
          }
        }
      } catch (const ConfigError& e) {
        result.failures.push_back(cls->name() + where + ": " + e.what());
      }
    }
  }
  return result;
}

}  // namespace minioo
