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

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "minioo/checker/rules.h"
#include "minioo/frontend/parser.h"
#include "minioo/frontend/source.h"
#include "minioo/harness/diff.h"
#include "minioo/harness/iso.h"

namespace minioo {
namespace {

std::string read_source(const std::string& name) {
  std::ifstream in(std::string(MINIOO_CORPUS_DIR) + "/src/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ResolvedProgram load(const std::vector<std::string>& names) {
  std::vector<SourceFile> files;
  for (const std::string& n : names) files.push_back({"src/" + n, read_source(n)});
  LoadResult r = load_program(files);
  if (!r.ok()) throw std::runtime_error("corpus does not load");
  return std::move(*r.program);
}

void BM_Parse(benchmark::State& state) {
  const std::string text = read_source("cbag.moo") + read_source("cset.moo");
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_source(text, "bench.moo"));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_Parse);

void BM_CheckAll(benchmark::State& state) {
  ResolvedProgram p = load({"cbag.moo", "cset.moo"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all(p, CheckConfig::all()));
  }
}
BENCHMARK(BM_CheckAll);

void BM_DifferentialSearch(benchmark::State& state) {
  ResolvedProgram p = load({"cbag.moo", "cset.moo"});
  const DiffSpec spec{"foo1", "foo2", {1, 2}, static_cast<int>(state.range(0)),
                      "make_cbag"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential_search(p, spec));
  }
}
BENCHMARK(BM_DifferentialSearch)->Arg(1)->Arg(2);

void BM_Isomorphism(benchmark::State& state) {
  const std::vector<std::int64_t> universe = {1, 2, 3, 4, 5};
  const UfEncoding enc = UfEncoding::primes(universe);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_isomorphism(enc, universe, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Isomorphism)->Arg(2)->Arg(3);

}  // namespace
}  // namespace minioo

BENCHMARK_MAIN();
