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

#ifndef MINIOO_INTERP_INTERPRETER_H_
#define MINIOO_INTERP_INTERPRETER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minioo/frontend/resolver.h"
#include "minioo/interp/value.h"

namespace minioo {

enum class RuntimeErrorKind {
  kNilList,         // head or tail of nil
  kDivisionByZero,
  kMissingMethod,
  kConstWrite,      // write through a constref parameter
  kUninitialized,   // read of a field before its initialization
  kType,            // operand of the wrong kind
  kArity,
  kUnknownEntry,
  kStepLimit,
  kDepthLimit,
};

std::string_view to_string(RuntimeErrorKind kind);

struct RuntimeError {
  RuntimeErrorKind kind;
  Span span;
  std::string message;
};

// "FILE:LINE:COL: runtime error: MESSAGE" (location omitted if unknown).
std::string to_string(const RuntimeError& error);

struct ExecOutcome {
  std::optional<Value> result;  // set iff error is empty
  std::optional<RuntimeError> error;
  std::vector<std::string> output;
  std::vector<Span> assertions_failed;
  std::string rendered;  // render(*result), or "" on error

  bool ok() const { return !error && assertions_failed.empty(); }
};

struct Limits {
  std::int64_t max_steps = 5'000'000;
  int max_depth = 400;
};

// Selects the body a method call runs. A virtual method resolves against
// the receiver's dynamic class; anything else against `static_class`.
std::optional<MethodRef> dispatch(const ResolvedProgram& program,
                                  const ObjectStore& store, ObjectId receiver,
                                  std::string_view static_class,
                                  std::string_view method,
                                  bool qualified = false);

// Tree-walking evaluator. The object store persists across calls so that
// values built by one call can be passed to the next; output, assertion
// failures and the step budget are per call.
class Interpreter {
 public:
  explicit Interpreter(const ResolvedProgram& program, Limits limits = {});
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  ExecOutcome run_main();
  ExecOutcome call_function(std::string_view name, std::vector<Value> args);
  ExecOutcome call_method(const Value& receiver, std::string_view method,
                          std::vector<Value> args);

  const ObjectStore& store() const;
  const ResolvedProgram& program() const;
  std::string render(const Value& value) const;
  std::string snapshot(const Value& value) const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

// Runs `main()` in a fresh interpreter.
ExecOutcome run_program(const ResolvedProgram& program, Limits limits = {});

// Calls free function `name` in a fresh interpreter.
ExecOutcome evaluate_function(const ResolvedProgram& program,
                              std::string_view name, std::vector<Value> args,
                              Limits limits = {});

}  // namespace minioo

#endif  // MINIOO_INTERP_INTERPRETER_H_
