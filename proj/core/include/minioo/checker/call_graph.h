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

#ifndef MINIOO_CHECKER_CALL_GRAPH_H_
#define MINIOO_CHECKER_CALL_GRAPH_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minioo/frontend/resolver.h"

namespace minioo {

enum class CallableKind { kFunction, kMethod, kCtor };

// A function, method or explicitly declared constructor.
struct Callable {
  CallableKind kind;
  // "name/arity" for functions, "Class::method" for methods and
  // "Class::Class#i" for the i-th constructor.
  std::string key;
  // Qualified source name: "name", "Class::method" or "Class::Class".
  std::string name;
  const ClassInfo* cls = nullptr;
  const FunDecl* function = nullptr;
  const MethodDecl* method = nullptr;
  const CtorDecl* ctor = nullptr;

  const std::vector<Param>& params() const;
  const Block& body() const;
  const Span& span() const;
  // Methods and constructors number the receiver 0 and parameters from 1.
  int first_param_position() const { return kind == CallableKind::kFunction ? 0 : 1; }
};

class CallGraph {
 public:
  // Nodes in declaration order: functions and classes interleaved as they
  // appear; within a class methods precede constructors.
  const std::vector<Callable>& nodes() const { return nodes_; }
  // Sorted, duplicate-free (caller, callee) index pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int find(const std::string& key) const;
  // Callees of a call expression (method call, function call or `new`), or
  // of a base initializer. Empty for print and implicit constructors.
  const std::vector<int>& targets(const void* site) const;

  std::vector<std::pair<std::string, std::string>> edge_keys() const;

 private:
  friend CallGraph build_call_graph(const ResolvedProgram& program);

  std::vector<Callable> nodes_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::map<const void*, std::vector<int>> sites_;
};

// Closed-world call graph. A virtual call site has edges to the statically
// found method and to every override below the static receiver class.
CallGraph build_call_graph(const ResolvedProgram& program);

}  // namespace minioo

#endif  // MINIOO_CHECKER_CALL_GRAPH_H_
