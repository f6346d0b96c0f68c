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

#ifndef MINIOO_FRONTEND_RESOLVER_H_
#define MINIOO_FRONTEND_RESOLVER_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minioo/frontend/ast.h"

namespace minioo {

struct ResolveError {
  Span span;
  std::string message;

  friend bool operator==(const ResolveError&, const ResolveError&) = default;
};

std::string to_string(const ResolveError& error);

struct ClassInfo {
  const ClassDecl* decl = nullptr;
  const ClassInfo* base = nullptr;
  std::vector<const ClassInfo*> children;  // in declaration order

  const std::string& name() const { return decl->name; }
};

struct MethodRef {
  const ClassInfo* owner = nullptr;
  const MethodDecl* method = nullptr;
};

struct FieldRef {
  const ClassInfo* owner = nullptr;
  const FieldDecl* field = nullptr;
};

// A program whose names are bound and whose call sites are annotated. Owns
// its AST; pointers handed out stay valid for the lifetime of the object.
class ResolvedProgram {
 public:
  ResolvedProgram(ResolvedProgram&&) noexcept = default;
  ResolvedProgram& operator=(ResolvedProgram&&) noexcept = default;
  ResolvedProgram(const ResolvedProgram&) = delete;
  ResolvedProgram& operator=(const ResolvedProgram&) = delete;

  const Program& program() const { return *program_; }

  // class name -> optional base class name.
  const std::map<std::string, std::optional<std::string>>& hierarchy() const {
    return hierarchy_;
  }

  const ClassInfo* find_class(std::string_view name) const;
  // Classes in declaration order.
  const std::vector<const ClassInfo*>& classes() const { return class_order_; }
  // Free functions in declaration order.
  const std::vector<const FunDecl*>& functions() const { return functions_; }
  const FunDecl* find_function(std::string_view name, std::size_t arity) const;
  bool has_function_named(std::string_view name) const;

  // Reflexive: a class is a subclass of itself.
  bool is_subclass(std::string_view derived, std::string_view base) const;

  // Searches `class_name` and then its ancestors.
  std::optional<MethodRef> lookup_method(std::string_view class_name,
                                         std::string_view method) const;
  std::optional<FieldRef> lookup_field(std::string_view class_name,
                                       std::string_view field) const;

  // Every class in the subtree rooted at `cls` (excluding `cls`) that
  // declares a method called `method`, in declaration order.
  std::vector<MethodRef> overrides_below(const ClassInfo* cls,
                                         std::string_view method) const;

  // True iff `method`, as seen from `class_name`, is virtual: the found
  // declaration or any same-named declaration among its ancestors or
  // descendants carries `virtual`.
  bool is_virtual_method(std::string_view class_name,
                         std::string_view method) const;

  // All fields of an object of `class_name`, base-most first.
  std::vector<FieldRef> all_fields(std::string_view class_name) const;

  bool is_friend(const ClassInfo* cls, std::string_view function) const;

 private:
  friend class Resolver;
  explicit ResolvedProgram(Program program);

  std::unique_ptr<Program> program_;
  std::map<std::string, std::optional<std::string>> hierarchy_;
  std::map<std::string, std::unique_ptr<ClassInfo>, std::less<>> classes_;
  std::vector<const ClassInfo*> class_order_;
  std::vector<const FunDecl*> functions_;
};

struct ResolveResult {
  std::optional<ResolvedProgram> program;  // set iff errors is empty
  std::vector<ResolveError> errors;

  bool ok() const { return errors.empty(); }
};

// Binds every identifier, builds the hierarchy table, annotates method call
// sites as static or virtual, and checks friend/private access. Errors are
// reported in source order; identical input yields identical output.
ResolveResult resolve(Program program);

// A runnable program has exactly one `main` taking no parameters.
std::optional<ResolveError> check_runnable(const ResolvedProgram& program);

bool is_assignable(const ResolvedProgram& program, const Type& from,
                   const Type& to);

}  // namespace minioo

#endif  // MINIOO_FRONTEND_RESOLVER_H_
