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

#ifndef MINIOO_CHECKER_REPORT_H_
#define MINIOO_CHECKER_REPORT_H_

#include <string>
#include <vector>

#include "minioo/checker/diagnostic.h"

namespace minioo {

// One line per diagnostic, each terminated by a newline.
std::string format_text(const std::vector<Diagnostic>& diagnostics);

// A single JSON document with `version`, `diagnostics` and `summary`.
std::string format_json(const std::vector<Diagnostic>& diagnostics,
                        const CheckConfig& config);

}  // namespace minioo

#endif  // MINIOO_CHECKER_REPORT_H_
