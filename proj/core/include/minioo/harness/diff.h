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

#ifndef MINIOO_HARNESS_DIFF_H_
#define MINIOO_HARNESS_DIFF_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minioo/frontend/resolver.h"
#include "minioo/interp/interpreter.h"

namespace minioo {

using Multiset = std::vector<std::int64_t>;  // nondecreasing

// All multisets over `universe` with at most `max_size` elements, ordered
// by size and then lexicographically.
std::vector<Multiset> enumerate_multisets(std::vector<std::int64_t> universe,
                                          int max_size);

struct DiffSpec {
  std::string entry_a;
  std::string entry_b;
  std::vector<std::int64_t> universe;
  int max_size = 0;
  std::string factory;  // one-argument function taking a list
};

// The observable result of one call.
struct Observation {
  std::string result;  // rendered value, or "" on error
  std::vector<std::string> output;
  std::optional<RuntimeErrorKind> error;
  bool assertion_failed = false;

  friend bool operator==(const Observation&, const Observation&) = default;
};

std::string to_string(const Observation& observation);

struct Witness {
  std::vector<Multiset> args;
  Observation a;
  Observation b;
};

// Calls both entries on every tuple of factory-built collections, tuples in
// lexicographic order with the first argument varying slowest, and returns
// the first tuple on which the observations differ.
std::optional<Witness> differential_search(const ResolvedProgram& program,
                                           const DiffSpec& spec);

// "{1 2}"
std::string format_multiset(const Multiset& m);
std::string format_text(const Witness& witness, const DiffSpec& spec);

}  // namespace minioo

#endif  // MINIOO_HARNESS_DIFF_H_
