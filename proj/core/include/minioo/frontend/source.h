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

#ifndef MINIOO_FRONTEND_SOURCE_H_
#define MINIOO_FRONTEND_SOURCE_H_

#include <optional>
#include <string>
#include <vector>

#include "minioo/frontend/resolver.h"

namespace minioo {

struct SourceFile {
  std::string path;  // used verbatim in spans
  std::string text;
};

// Result of running the whole frontend over a list of files. Either
// `program` is set or `errors` holds rendered lex, parse or resolve errors.
struct LoadResult {
  std::optional<ResolvedProgram> program;
  std::vector<std::string> errors;

  bool ok() const { return program.has_value(); }
};

// Tokenizes every file, concatenates the token streams in order, then parses
// and resolves the result as one program.
LoadResult load_program(const std::vector<SourceFile>& files);

// Reads `paths` from disk. Returns std::nullopt and sets `error` if a file
// cannot be read.
std::optional<std::vector<SourceFile>> read_sources(
    const std::vector<std::string>& paths, const std::string& base_dir,
    std::string* error);

}  // namespace minioo

#endif  // MINIOO_FRONTEND_SOURCE_H_
