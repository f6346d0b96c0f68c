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

#ifndef MINIOO_HARNESS_SUITE_H_
#define MINIOO_HARNESS_SUITE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minioo/frontend/resolver.h"

namespace minioo {

// A malformed suite file.
class SuiteError : public std::runtime_error {
 public:
  SuiteError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Names in a suite or search that do not fit the program: unknown or
// ill-typed factories and drivers, or a factory of an unrelated class.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContractCase {
  std::string name;
  std::string driver;  // one-argument function returning bool
};

struct ContractSuite {
  std::string base_class;
  std::string factory;  // zero-argument function
  std::vector<ContractCase> cases;
};

// Directives, one per line: "base CLASS", "factory FN", "case NAME FN".
// Blank lines and lines starting with '#' are ignored.
ContractSuite parse_suite(std::string_view text);

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string note;  // why the case failed; empty on success
};

// Evaluates driver(factory()) for every case, each in a fresh interpreter.
// A case passes iff the driver returns true without a runtime error or a
// failed assertion.
std::vector<CaseResult> run_suite(const ResolvedProgram& program,
                                  const ContractSuite& suite,
                                  std::string_view factory);

struct SubstitutionCase {
  std::string name;
  CaseResult base;
  CaseResult derived;
};

struct SubstitutionReport {
  std::string base_factory;
  std::string derived_factory;
  std::vector<SubstitutionCase> cases;
  // Every case that passes under the base factory passes under the derived.
  bool substitutable = true;
};

// Runs `suite` under its own factory and under `derived_factory`. The
// derived factory must produce an object whose class is related to the
// suite's base class by inheritance; anything else throws ConfigError.
SubstitutionReport substitution_test(const ResolvedProgram& program,
                                     const ContractSuite& suite,
                                     std::string_view derived_factory);

std::string format_text(const SubstitutionReport& report);
// Top-level object with `version`, `cases` and `verdict`.
std::string format_json(const SubstitutionReport& report);

}  // namespace minioo

#endif  // MINIOO_HARNESS_SUITE_H_
