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

#ifndef MINIOO_HARNESS_SOUNDNESS_H_
#define MINIOO_HARNESS_SOUNDNESS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "minioo/checker/call_graph.h"
#include "minioo/checker/mutation.h"
#include "minioo/frontend/resolver.h"

namespace minioo {

struct SoundnessViolation {
  std::string callable;  // call graph key
  int position = 0;      // parameter position, receiver is 0 for methods
  std::string args;      // rendered probe arguments
  std::string before;
  std::string after;
};

struct SoundnessReport {
  int callables_probed = 0;
  std::int64_t probes = 0;
  // "KEY: reason" for callables that could not be probed.
  std::vector<std::string> skipped;
  std::vector<SoundnessViolation> violations;
};

// Executes every function and method on generated arguments and compares
// the reachable state of each argument before and after the call. A change
// in an argument whose position the mutation summary leaves unmarked is a
// violation. Ints come from `universe`, lists and objects from multisets
// over it of size <= max_size; an object of class C is built by
// make_c(list) with the class name lowercased. Constructors are not probed.
SoundnessReport check_summary_soundness(const ResolvedProgram& program,
                                        const std::vector<std::int64_t>& universe,
                                        int max_size);

// Same, against caller-supplied summaries for \`graph\`.
SoundnessReport check_summary_soundness(const ResolvedProgram& program,
                                        const CallGraph& graph,
                                        const MutationSummary& summaries,
                                        const std::vector<std::int64_t>& universe,
                                        int max_size);

std::string format_text(const SoundnessReport& report);

}  // namespace minioo

#endif  // MINIOO_HARNESS_SOUNDNESS_H_
