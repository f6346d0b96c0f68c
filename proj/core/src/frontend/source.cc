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

#include "minioo/frontend/source.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minioo/frontend/lexer.h"
#include "minioo/frontend/parser.h"

namespace minioo {

LoadResult load_program(const std::vector<SourceFile>& files) {
  LoadResult result;
  std::vector<Token> tokens;
  try {
    Token end{TokenKind::kEnd, "", Span{}};
    for (const SourceFile& f : files) {
      std::vector<Token> part = tokenize(f.text, f.path);
      end = std::move(part.back());
      part.pop_back();
      for (Token& t : part) tokens.push_back(std::move(t));
    }
    tokens.push_back(std::move(end));
    ResolveResult resolved = resolve(parse_program(tokens));
    if (resolved.ok()) {
      result.program = std::move(resolved.program);
    } else {
      for (const ResolveError& e : resolved.errors) {
        result.errors.push_back(to_string(e));
      }
    }
  } catch (const std::runtime_error& e) {
    result.errors.push_back(e.what());
  }
  return result;
}

std::optional<std::vector<SourceFile>> read_sources(
    const std::vector<std::string>& paths, const std::string& base_dir,
    std::string* error) {
  std::vector<SourceFile> files;
  for (const std::string& path : paths) {
    std::filesystem::path full(path);
    if (!base_dir.empty() && full.is_relative()) full = base_dir / full;
    std::ifstream in(full, std::ios::binary);
    if (!in || std::filesystem::is_directory(full)) {
      if (error) *error = path + ": cannot read file";
      return std::nullopt;
    }
    std::ostringstream text;
    text << in.rdbuf();
    files.push_back({path, text.str()});
  }
  return files;
}

}  // namespace minioo
