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

#include "minioo/harness/suite.h"

#include <sstream>

#include "json.hpp"
#include "minioo/interp/interpreter.h"

namespace minioo {
namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

void require_factory(const ResolvedProgram& program, std::string_view name) {
  if (!program.find_function(name, 0)) {
    throw ConfigError("no zero-argument factory '" + std::string(name) + "'");
  }
}

CaseResult run_case(const ResolvedProgram& program, const ContractCase& c,
                    std::string_view factory) {
  CaseResult r{c.name, false, ""};
  Interpreter interp(program);
  ExecOutcome made = interp.call_function(factory, {});
  if (!made.ok() || !made.result) {
    r.note = made.error ? "factory failed: " + to_string(*made.error)
                        : "factory failed an assertion";
    return r;
  }
  ExecOutcome out = interp.call_function(c.driver, {*made.result});
  if (out.error) {
    r.note = to_string(*out.error);
  } else if (!out.assertions_failed.empty()) {
    r.note = "assertion failed at " + to_string(out.assertions_failed.front());
  } else if (!out.result || out.result->kind != Value::Kind::kBool) {
    r.note = "driver returned " + out.rendered;
  } else if (!out.result->b) {
    r.note = "driver returned false";
  } else {
    r.passed = true;
  }
  return r;
}

std::string factory_class(const ResolvedProgram& program,
                          std::string_view factory) {
  Interpreter interp(program);
  ExecOutcome made = interp.call_function(factory, {});
  if (!made.ok() || !made.result) {
    throw ConfigError("factory '" + std::string(factory) + "' failed");
  }
  if (made.result->kind != Value::Kind::kObject) {
    throw ConfigError("factory '" + std::string(factory) +
                      "' does not return an object");
  }
  return interp.store().at(made.result->object).class_name;
}

}  // namespace

ContractSuite parse_suite(std::string_view text) {
  ContractSuite suite;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] == "base" && w.size() == 2) {
      if (!suite.base_class.empty()) throw SuiteError(line_no, "duplicate base");
      suite.base_class = w[1];
    } else if (w[0] == "factory" && w.size() == 2) {
      if (!suite.factory.empty()) {
        throw SuiteError(line_no, "duplicate factory");
      }
      suite.factory = w[1];
    } else if (w[0] == "case" && w.size() == 3) {
      for (const ContractCase& c : suite.cases) {
        if (c.name == w[1]) {
          throw SuiteError(line_no, "duplicate case '" + w[1] + "'");
        }
      }
      suite.cases.push_back({w[1], w[2]});
    } else {
      throw SuiteError(line_no, "unrecognized directive '" + line + "'");
    }
  }
  if (suite.base_class.empty()) throw SuiteError(line_no, "missing base");
  if (suite.factory.empty()) throw SuiteError(line_no, "missing factory");
  return suite;
}

std::vector<CaseResult> run_suite(const ResolvedProgram& program,
                                  const ContractSuite& suite,
                                  std::string_view factory) {
  require_factory(program, factory);
  for (const ContractCase& c : suite.cases) {
    if (!program.find_function(c.driver, 1)) {
      throw ConfigError("case '" + c.name + "': no one-argument driver '" +
                        c.driver + "'");
    }
  }
  std::vector<CaseResult> results;
  for (const ContractCase& c : suite.cases) {
    results.push_back(run_case(program, c, factory));
  }
  return results;
}

SubstitutionReport substitution_test(const ResolvedProgram& program,
                                     const ContractSuite& suite,
                                     std::string_view derived_factory) {
  if (!program.find_class(suite.base_class)) {
    throw ConfigError("unknown class '" + suite.base_class + "'");
  }
  require_factory(program, suite.factory);
  require_factory(program, derived_factory);
  const std::string base_cls = factory_class(program, suite.factory);
  if (base_cls != suite.base_class) {
    throw ConfigError("factory '" + suite.factory + "' builds '" + base_cls +
                      "', not '" + suite.base_class + "'");
  }
  const std::string derived_cls = factory_class(program, derived_factory);
  if (!program.is_subclass(derived_cls, suite.base_class) &&
      !program.is_subclass(suite.base_class, derived_cls)) {
    throw ConfigError("factory '" + std::string(derived_factory) +
                      "' builds '" + derived_cls + "', unrelated to '" +
                      suite.base_class + "'");
  }

  SubstitutionReport report;
  report.base_factory = suite.factory;
  report.derived_factory = std::string(derived_factory);
  std::vector<CaseResult> base = run_suite(program, suite, suite.factory);
  std::vector<CaseResult> derived = run_suite(program, suite, derived_factory);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].passed && !derived[i].passed) report.substitutable = false;
    report.cases.push_back({base[i].name, base[i], derived[i]});
  }
  return report;
}

std::string format_text(const SubstitutionReport& report) {
  std::ostringstream out;
  auto verdict = [](const CaseResult& r) { return r.passed ? "pass" : "FAIL"; };
  for (const SubstitutionCase& c : report.cases) {
    out << c.name << ": " << report.base_factory << " " << verdict(c.base)
        << ", " << report.derived_factory << " " << verdict(c.derived);
    if (!c.derived.passed && !c.derived.note.empty()) {
      out << " (" << c.derived.note << ")";
    }
    out << "\n";
  }
  out << "verdict: "
      << (report.substitutable ? "substitutable" : "not substitutable") << "\n";
  return out.str();
}

std::string format_json(const SubstitutionReport& report) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["base_factory"] = report.base_factory;
  doc["derived_factory"] = report.derived_factory;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const SubstitutionCase& c : report.cases) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["base"] = c.base.passed;
    entry["derived"] = c.derived.passed;
    if (!c.derived.note.empty()) entry["derived_note"] = c.derived.note;
    cases.push_back(std::move(entry));
  }
  doc["cases"] = std::move(cases);
  doc["verdict"] = report.substitutable ? "substitutable" : "not_substitutable";
  return doc.dump(2) + "\n";
}

}  // namespace minioo
