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

#ifndef MINIOO_FRONTEND_AST_H_
#define MINIOO_FRONTEND_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minioo {

// A 1-based location in a source file. `length` is the byte length of the
// token (or construct head) the span designates.
struct Span {
  std::string file;
  int line = 1;
  int col = 1;
  int length = 1;

  friend bool operator==(const Span&, const Span&) = default;
};

std::string to_string(const Span& span);  // "FILE:LINE:COL"

enum class TypeKind { kInt, kBool, kUnit, kList, kClass, kAny };

// A type as written in a declaration, or as inferred for an expression.
// `kAny` only arises from inference (e.g. the element of a list).
struct Type {
  TypeKind kind = TypeKind::kAny;
  std::string class_name;  // set iff kind == kClass

  static Type Int() { return {TypeKind::kInt, {}}; }
  static Type Bool() { return {TypeKind::kBool, {}}; }
  static Type Unit() { return {TypeKind::kUnit, {}}; }
  static Type List() { return {TypeKind::kList, {}}; }
  static Type Any() { return {TypeKind::kAny, {}}; }
  static Type Class(std::string name) {
    return {TypeKind::kClass, std::move(name)};
  }

  bool is_primitive() const {
    return kind == TypeKind::kInt || kind == TypeKind::kBool ||
           kind == TypeKind::kUnit;
  }

  friend bool operator==(const Type&, const Type&) = default;
};

std::string to_string(const Type& type);

enum class Visibility { kPublic, kPrivate };
enum class ParamMode { kValue, kRef, kConstRef };

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kAnd, kOr,
};
enum class UnaryOp { kNot, kNeg };
enum class BuiltinOp { kCons, kHead, kTail, kIsNil };

std::string_view to_string(BinaryOp op);
std::string_view to_string(UnaryOp op);
std::string_view to_string(BuiltinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;
using ExprList = std::vector<ExprPtr>;

// ---------------------------------------------------------------------------
// Expressions. Fields marked "resolved" are filled in by resolve() and are
// ignored by structural equality and pretty printing.

struct IntLit {
  std::int64_t value = 0;
};

struct BoolLit {
  bool value = false;
};

struct NilLit {};

enum class VarKind { kUnresolved, kLocal, kParam, kThis, kField };

struct VarRef {
  std::string name;
  // resolved
  VarKind kind = VarKind::kUnresolved;
  std::string owner_class;  // declaring class for kField
  ParamMode mode = ParamMode::kValue;  // for kParam
};

struct FieldAccess {
  ExprPtr object;
  std::string field;
  Span field_span;
  // resolved
  std::string owner_class;
};

// `recv.m(args)`, `m(args)` inside a class (receiver == nullptr), or the
// qualified base call `Base::m(args)` (qualifier set, receiver == nullptr).
struct MethodCall {
  ExprPtr receiver;
  std::optional<std::string> qualifier;
  std::string method;
  ExprList args;
  // resolved
  std::string static_class;  // class the static lookup starts from
  std::string owner_class;   // class declaring the statically found method
  bool is_virtual = false;
};

enum class CallKind { kUnresolved, kFunction, kPrint };

// `f(args)` naming a free function or the built-in print. Inside a class a
// bare call naming a method is rewritten to MethodCall by resolve().
struct FunCall {
  std::string name;
  ExprList args;
  // resolved
  CallKind kind = CallKind::kUnresolved;
};

struct NewObject {
  std::string class_name;
  ExprList args;
  // resolved
  int ctor_index = -1;  // -1: implicit default constructor
};

struct BuiltinCall {
  BuiltinOp op;
  ExprList args;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

using ExprNode = std::variant<IntLit, BoolLit, NilLit, VarRef, FieldAccess,
                              MethodCall, FunCall, NewObject, BuiltinCall,
                              Binary, Unary>;

struct Expr {
  Span span;
  ExprNode node;
  Type static_type;  // resolved

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  template <typename T>
  T* as() { return std::get_if<T>(&node); }
};

template <typename T>
ExprPtr make_expr(Span span, T node) {
  return std::make_unique<Expr>(Expr{std::move(span), std::move(node), {}});
}

// ---------------------------------------------------------------------------
// Statements.

struct Stmt;
using Block = std::vector<Stmt>;

struct LetStmt {
  std::string name;
  ExprPtr init;
};

// `target = value;`. The statement span designates the `=` token.
struct AssignStmt {
  ExprPtr target;  // VarRef or FieldAccess
  ExprPtr value;
};

struct IfStmt {
  ExprPtr cond;
  Block then_block;
  std::optional<Block> else_block;
};

struct WhileStmt {
  ExprPtr cond;
  Block body;
};

struct ReturnStmt {
  ExprPtr value;  // may be null
};

struct AssertStmt {
  ExprPtr cond;
};

struct ExprStmt {
  ExprPtr expr;
};

using StmtNode = std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt,
                              ReturnStmt, AssertStmt, ExprStmt>;

struct Stmt {
  Span span;
  StmtNode node;

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  template <typename T>
  T* as() { return std::get_if<T>(&node); }
};

// ---------------------------------------------------------------------------
// Declarations.

struct TypeRef {
  Type type;
  Span span;
};

struct Param {
  std::string name;
  TypeRef type;
  ParamMode mode = ParamMode::kValue;
  Span span;
};

struct FieldDecl {
  std::string name;
  TypeRef type;
  Visibility visibility = Visibility::kPrivate;
  Span span;  // the field name
};

struct MethodDecl {
  std::string name;
  std::vector<Param> params;
  TypeRef return_type;
  bool is_virtual = false;
  std::optional<Span> virtual_span;
  Visibility visibility = Visibility::kPrivate;
  Block body;
  Span span;  // the method name
};

struct BaseInit {
  std::string class_name;
  ExprList args;
  Span span;
  int ctor_index = -1;  // resolved
};

struct FieldInit {
  std::string field;
  ExprPtr value;
  Span span;
};

struct CtorDecl {
  std::vector<Param> params;
  std::optional<BaseInit> base_init;
  std::vector<FieldInit> field_inits;
  Block body;
  Span span;  // the constructor name
};

struct FriendDecl {
  std::string name;
  Span span;
};

struct ClassDecl {
  std::string name;
  bool exported = false;
  std::optional<std::string> base;
  std::optional<Span> base_span;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<CtorDecl> ctors;
  std::vector<FriendDecl> friends;
  Span span;  // the class name
};

struct FunDecl {
  std::string name;
  std::vector<Param> params;
  TypeRef return_type;
  Block body;
  Span span;  // the function name
};

using Decl = std::variant<ClassDecl, FunDecl>;

struct Program {
  std::vector<Decl> decls;
};

}  // namespace minioo

#endif  // MINIOO_FRONTEND_AST_H_
