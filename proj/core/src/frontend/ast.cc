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

#include "minioo/frontend/ast.h"

namespace minioo {

std::string to_string(const Span& span) {
  return span.file + ":" + std::to_string(span.line) + ":" +
         std::to_string(span.col);
}

std::string to_string(const Type& type) {
  switch (type.kind) {
    case TypeKind::kInt: return "int";
    case TypeKind::kBool: return "bool";
    case TypeKind::kUnit: return "unit";
    case TypeKind::kList: return "list";
    case TypeKind::kClass: return type.class_name;
    case TypeKind::kAny: return "any";
  }
  return "?";
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view to_string(UnaryOp op) {
  return op == UnaryOp::kNot ? "!" : "-";
}

std::string_view to_string(BuiltinOp op) {
  switch (op) {
    case BuiltinOp::kCons: return "cons";
    case BuiltinOp::kHead: return "head";
    case BuiltinOp::kTail: return "tail";
    case BuiltinOp::kIsNil: return "is_nil";
  }
  return "?";
}

}  // namespace minioo
