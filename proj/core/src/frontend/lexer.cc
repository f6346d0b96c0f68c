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

#include "minioo/frontend/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>

namespace minioo {
namespace {

constexpr std::array<std::string_view, 26> kKeywords = {
    "class",  "export", "public", "private", "virtual", "friend", "ref",
    "constref", "let", "if",     "else",    "while",   "return", "assert",
    "new",    "int",    "bool",   "unit",    "list",    "true",   "false",
    "nil",    "cons",   "head",   "tail",    "is_nil",
};

// Longest match first.
constexpr std::array<std::string_view, 24> kPunctuation = {
    "::", "==", "!=", "<=", ">=", "&&", "||", "{", "}", "(", ")", ";",
    ",",  ":",  ".",  "=",  "<",  ">",  "+",  "-", "*", "/", "%", "!",
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kIntLiteral: return "integer-literal";
    case TokenKind::kStringLiteral: return "string-literal";
    case TokenKind::kPunct: return "punctuation";
    case TokenKind::kEnd: return "end-of-input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source, std::string_view file) {
  std::vector<Token> tokens;
  const std::string file_name(file);
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  auto span_here = [&](int length) {
    return Span{file_name, line, col, std::max(length, 1)};
  };
  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (source[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };

  while (pos < source.size()) {
    const char c = source[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (source.substr(pos, 2) == "//") {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t end = pos;
      while (end < source.size() && is_ident_char(source[end])) ++end;
      std::string text(source.substr(pos, end - pos));
      const TokenKind kind =
          is_keyword(text) ? TokenKind::kKeyword : TokenKind::kIdentifier;
      tokens.push_back({kind, text, span_here(static_cast<int>(end - pos))});
      advance(end - pos);
      continue;
    }
    if (is_digit(c)) {
      std::size_t end = pos;
      while (end < source.size() && is_digit(source[end])) ++end;
      if (end < source.size() && is_ident_start(source[end])) {
        throw LexError(span_here(1 + static_cast<int>(end - pos)),
                       "malformed integer literal");
      }
      std::string text(source.substr(pos, end - pos));
      std::int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw LexError(span_here(static_cast<int>(text.size())),
                       "integer literal out of range: " + text);
      }
      tokens.push_back({TokenKind::kIntLiteral, text,
                        span_here(static_cast<int>(text.size()))});
      advance(end - pos);
      continue;
    }
    if (c == '"') {
      std::size_t end = pos + 1;
      while (end < source.size() && source[end] != '"' && source[end] != '\n')
        ++end;
      if (end >= source.size() || source[end] != '"') {
        throw LexError(span_here(1), "unterminated string literal");
      }
      ++end;
      std::string text(source.substr(pos, end - pos));
      tokens.push_back({TokenKind::kStringLiteral, text,
                        span_here(static_cast<int>(text.size()))});
      advance(end - pos);
      continue;
    }
    bool matched = false;
    for (std::string_view p : kPunctuation) {
      if (source.substr(pos, p.size()) == p) {
        tokens.push_back({TokenKind::kPunct, std::string(p),
                          span_here(static_cast<int>(p.size()))});
        advance(p.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;

    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 ||
        static_cast<unsigned char>(c) >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x",
                    static_cast<unsigned>(static_cast<unsigned char>(c)));
      shown = buf;
    } else {
      shown = std::string(1, c);
    }
    throw LexError(span_here(1), "unexpected character '" + shown + "'");
  }
  tokens.push_back({TokenKind::kEnd, "", span_here(1)});
  return tokens;
}

}  // namespace minioo
