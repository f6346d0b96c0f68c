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

#include "minioo/checker/report.h"

#include "json.hpp"

namespace minioo {

std::string format_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) out += to_string(d) + "\n";
  return out;
}

std::string format_json(const std::vector<Diagnostic>& diagnostics,
                        const CheckConfig& config) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["version"] = 1;
  ordered_json list = ordered_json::array();
  for (const Diagnostic& d : diagnostics) {
    ordered_json item;
    item["rule"] = to_string(d.rule);
    item["file"] = d.span.file;
    item["line"] = d.span.line;
    item["col"] = d.span.col;
    item["subject"] = d.subject;
    item["message"] = d.message;
    list.push_back(std::move(item));
  }
  doc["diagnostics"] = std::move(list);
  ordered_json rules = ordered_json::array();
  for (RuleId r : config.enabled()) rules.push_back(to_string(r));
  doc["summary"]["checked_rules"] = std::move(rules);
  doc["summary"]["violation_count"] = diagnostics.size();
  return doc.dump(2) + "\n";
}

}  // namespace minioo
