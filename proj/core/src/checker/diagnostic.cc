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

#include "minioo/checker/diagnostic.h"

#include <algorithm>
#include <array>
#include <tuple>

namespace minioo {
namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 5> kRuleNames = {{
    {RuleId::kR1NoVirtual, "R1_NO_VIRTUAL"},
    {RuleId::kR2OpaqueExports, "R2_OPAQUE_EXPORTS"},
    {RuleId::kR3SNoMutation, "R3S_NO_MUTATION"},
    {RuleId::kR3RNoArgMutation, "R3R_NO_ARG_MUTATION"},
    {RuleId::kR4CtorDelegation, "R4_CTOR_DELEGATION"},
}};

}  // namespace

std::string_view to_string(RuleId rule) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == rule) return name;
  }
  return "?";
}

std::optional<RuleId> rule_from_string(std::string_view name) {
  for (const auto& [id, n] : kRuleNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::string to_string(const Diagnostic& d) {
  return to_string(d.span) + ": " + std::string(to_string(d.rule)) + ": " +
         d.message;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::make_tuple(std::cref(a.span.file),
                                            a.span.line, a.span.col,
                                            to_string(a.rule)) <
                            std::make_tuple(std::cref(b.span.file),
                                            b.span.line, b.span.col,
                                            to_string(b.rule));
                   });
}

CheckConfig CheckConfig::all(MutationForm form) {
  CheckConfig c;
  c.form = form;
  return c;
}

CheckConfig CheckConfig::none() {
  CheckConfig c;
  c.r1 = c.r2 = c.r3 = c.r4 = false;
  return c;
}

std::optional<CheckConfig> CheckConfig::from_flags(std::string_view rules,
                                                   MutationForm form) {
  if (rules == "all") return all(form);
  CheckConfig c = none();
  c.form = form;
  std::size_t start = 0;
  while (start <= rules.size()) {
    std::size_t end = rules.find(',', start);
    if (end == std::string_view::npos) end = rules.size();
    std::string_view item = rules.substr(start, end - start);
    if (item == "r1") {
      c.r1 = true;
    } else if (item == "r2") {
      c.r2 = true;
    } else if (item == "r3") {
      c.r3 = true;
    } else if (item == "r4") {
      c.r4 = true;
    } else {
      return std::nullopt;
    }
    start = end + 1;
  }
  return c;
}

std::vector<RuleId> CheckConfig::enabled() const {
  std::vector<RuleId> out;
  if (r1) out.push_back(RuleId::kR1NoVirtual);
  if (r2) out.push_back(RuleId::kR2OpaqueExports);
  if (r3 && form == MutationForm::kStrict) out.push_back(RuleId::kR3SNoMutation);
  if (r3 && form == MutationForm::kRelaxed) {
    out.push_back(RuleId::kR3RNoArgMutation);
  }
  if (r4) out.push_back(RuleId::kR4CtorDelegation);
  return out;
}

}  // namespace minioo
