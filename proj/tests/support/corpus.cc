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

#include "corpus.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "minioo/frontend/source.h"

namespace minioo::testing {

std::string corpus_dir() { return MINIOO_CORPUS_DIR; }

ResolvedProgram load_corpus(const std::vector<std::string>& files) {
  return load_corpus_with(files, "");
}

ResolvedProgram load_corpus_with(const std::vector<std::string>& files,
                                 const std::string& extra) {
  std::vector<std::string> paths;
  for (const std::string& f : files) paths.push_back("src/" + f);
  std::string error;
  auto sources = read_sources(paths, corpus_dir(), &error);
  if (!sources) throw std::runtime_error(error);
  if (!extra.empty()) sources->push_back({"extra.moo", extra});
  LoadResult loaded = load_program(*sources);
  if (!loaded.ok()) {
    std::string all;
    for (const std::string& e : loaded.errors) all += e + "\n";
    throw std::runtime_error(all);
  }
  return std::move(*loaded.program);
}

ContractSuite load_suite(const std::string& name) {
  std::ifstream in(corpus_dir() + "/suites/" + name);
  if (!in) throw std::runtime_error("cannot read suite " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_suite(text.str());
}

std::vector<Family> corpus_families() {
  return {
      {"cbag", {"cbag.moo"}},
      {"cbag_cset", {"cbag.moo", "cset.moo"}},
      {"vcbag_foo1", {"cbag.moo", "cset.moo", "vcbag_foo1.moo"}},
      {"vcbag_foo2", {"cbag.moo", "cset.moo", "vcbag_foo2.moo"}},
      {"vcset_foo1", {"cbag.moo", "cset.moo", "vcset_foo1.moo"}},
      {"vcset_foo2", {"cbag.moo", "cset.moo", "vcset_foo2.moo"}},
      {"fbag", {"fbag.moo"}},
      {"vfbag", {"fbag.moo", "vfbag.moo"}},
      {"fbag_fset", {"fbag.moo", "fset.moo"}},
      {"vfset", {"fbag.moo", "fset.moo", "vfset.moo"}},
      {"fset_demo", {"fbag.moo", "fset.moo", "fset_demo.moo"}},
      {"fset_nodedup", {"fbag.moo", "fset_nodedup.moo"}},
      {"shapes_oop", {"shapes_oop.moo", "shapes_demo.moo"}},
      {"shapes_brules", {"shapes_brules.moo", "shapes_demo.moo"}},
      {"ufdemo", {"ufdemo.moo"}},
      {"empty", {"empty.moo"}},
  };
}

}  // namespace minioo::testing
