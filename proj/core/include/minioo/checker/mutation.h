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

#ifndef MINIOO_CHECKER_MUTATION_H_
#define MINIOO_CHECKER_MUTATION_H_

#include <set>
#include <vector>

#include "minioo/checker/call_graph.h"

namespace minioo {

// For every node of a call graph, the parameter positions whose reachable
// state the callable may mutate. Receivers are position 0.
struct MutationSummary {
  std::vector<std::set<int>> marked;  // indexed like CallGraph::nodes()

  const std::set<int>& of(int node) const { return marked[node]; }
};

// Least fixpoint of the mutation transfer rules over `graph`.
MutationSummary mutation_summaries(const ResolvedProgram& program,
                                   const CallGraph& graph);

}  // namespace minioo

#endif  // MINIOO_CHECKER_MUTATION_H_
