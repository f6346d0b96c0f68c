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

#ifndef MINIOO_FRONTEND_VISIT_H_
#define MINIOO_FRONTEND_VISIT_H_

#include <type_traits>
#include <variant>

#include "minioo/frontend/ast.h"

namespace minioo {

// Calls `fn(expr)` for `expr` and every subexpression, parents first.
template <typename F>
void for_each_expr(const Expr& expr, F&& fn) {
  fn(expr);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FieldAccess>) {
          for_each_expr(*n.object, fn);
        } else if constexpr (std::is_same_v<T, MethodCall>) {
          if (n.receiver) for_each_expr(*n.receiver, fn);
          for (const ExprPtr& a : n.args) for_each_expr(*a, fn);
        } else if constexpr (std::is_same_v<T, FunCall> ||
                             std::is_same_v<T, NewObject> ||
                             std::is_same_v<T, BuiltinCall>) {
          for (const ExprPtr& a : n.args) for_each_expr(*a, fn);
        } else if constexpr (std::is_same_v<T, Binary>) {
          for_each_expr(*n.lhs, fn);
          for_each_expr(*n.rhs, fn);
        } else if constexpr (std::is_same_v<T, Unary>) {
          for_each_expr(*n.operand, fn);
        }
      },
      expr.node);
}

// Calls `fn(stmt)` for every statement in `block`, including nested ones,
// in source order.
template <typename F>
void for_each_stmt(const Block& block, F&& fn) {
  for (const Stmt& stmt : block) {
    fn(stmt);
    if (const auto* s = stmt.as<IfStmt>()) {
      for_each_stmt(s->then_block, fn);
      if (s->else_block) for_each_stmt(*s->else_block, fn);
    } else if (const auto* w = stmt.as<WhileStmt>()) {
      for_each_stmt(w->body, fn);
    }
  }
}

// Calls `fn(expr)` for every expression in `block`, statement by
// statement, including the expressions of nested statements.
template <typename F>
void for_each_expr(const Block& block, F&& fn) {
  for_each_stmt(block, [&](const Stmt& stmt) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            for_each_expr(*n.init, fn);
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            for_each_expr(*n.target, fn);
            for_each_expr(*n.value, fn);
          } else if constexpr (std::is_same_v<T, IfStmt> ||
                               std::is_same_v<T, WhileStmt> ||
                               std::is_same_v<T, AssertStmt>) {
            for_each_expr(*n.cond, fn);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (n.value) for_each_expr(*n.value, fn);
          } else {
            for_each_expr(*n.expr, fn);
          }
        },
        stmt.node);
  });
}

}  // namespace minioo

#endif  // MINIOO_FRONTEND_VISIT_H_
