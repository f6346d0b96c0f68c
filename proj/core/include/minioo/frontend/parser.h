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

#ifndef MINIOO_FRONTEND_PARSER_H_
#define MINIOO_FRONTEND_PARSER_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minioo/frontend/ast.h"
#include "minioo/frontend/lexer.h"

namespace minioo {

class ParseError : public std::runtime_error {
 public:
  ParseError(Span span, std::vector<std::string> expected, std::string found);

  const Span& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Recursive-descent parser for the grammar in docs/grammar.md. `tokens`
// must end with a kEnd token.
Program parse_program(std::span<const Token> tokens);

// Convenience: tokenize + parse a single source text.
Program parse_source(std::string_view source, std::string_view file);

}  // namespace minioo

#endif  // MINIOO_FRONTEND_PARSER_H_
