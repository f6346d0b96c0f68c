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

#ifndef MINIOO_FRONTEND_PRINTER_H_
#define MINIOO_FRONTEND_PRINTER_H_

#include <string>

#include "minioo/frontend/ast.h"

namespace minioo {

// Canonical MiniOO text for `program`. Declarations are separated by one
// blank line, members are indented by two spaces per level and every block
// opens on the line of its head. Parsing the output yields a structurally
// equal program.
std::string pretty_print(const Program& program);
std::string pretty_print(const Expr& expr);

// Structural equality: compares everything the parser produces, ignoring
// spans and resolver annotations.
bool structurally_equal(const Program& a, const Program& b);
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace minioo

#endif  // MINIOO_FRONTEND_PRINTER_H_
