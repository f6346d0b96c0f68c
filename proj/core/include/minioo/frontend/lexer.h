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

#ifndef MINIOO_FRONTEND_LEXER_H_
#define MINIOO_FRONTEND_LEXER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minioo/frontend/ast.h"

namespace minioo {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kIntLiteral,
  kStringLiteral,
  kPunct,
  kEnd,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool is_keyword(std::string_view t) const {
    return is(TokenKind::kKeyword, t);
  }
  bool is_punct(std::string_view t) const { return is(TokenKind::kPunct, t); }
};

class LexError : public std::runtime_error {
 public:
  LexError(Span span, const std::string& message)
      : std::runtime_error(to_string(span) + ": lex error: " + message),
        span_(std::move(span)) {}
  const Span& span() const { return span_; }

 private:
  Span span_;
};

bool is_keyword(std::string_view word);

// Splits `source` into tokens. The last token is always kEnd. Throws
// LexError on any byte outside the lexical grammar.
std::vector<Token> tokenize(std::string_view source, std::string_view file);

}  // namespace minioo

#endif  // MINIOO_FRONTEND_LEXER_H_
