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

#include "minioo/frontend/resolver.h"

#include <algorithm>
#include <set>
#include <utility>

namespace minioo {

std::string to_string(const ResolveError& error) {
  if (error.span.file.empty()) return "error: " + error.message;
  return to_string(error.span) + ": error: " + error.message;
}

// ---------------------------------------------------------------------------
// ResolvedProgram queries.

ResolvedProgram::ResolvedProgram(Program program)
    : program_(std::make_unique<Program>(std::move(program))) {}

const ClassInfo* ResolvedProgram::find_class(std::string_view name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : it->second.get();
}

const FunDecl* ResolvedProgram::find_function(std::string_view name,
                                              std::size_t arity) const {
  for (const FunDecl* fn : functions_) {
    if (fn->name == name && fn->params.size() == arity) return fn;
  }
  return nullptr;
}

bool ResolvedProgram::has_function_named(std::string_view name) const {
  return std::any_of(functions_.begin(), functions_.end(),
                     [&](const FunDecl* fn) { return fn->name == name; });
}

bool ResolvedProgram::is_subclass(std::string_view derived,
                                  std::string_view base) const {
  for (const ClassInfo* c = find_class(derived); c != nullptr; c = c->base) {
    if (c->name() == base) return true;
  }
  return false;
}

std::optional<MethodRef> ResolvedProgram::lookup_method(
    std::string_view class_name, std::string_view method) const {
  for (const ClassInfo* c = find_class(class_name); c != nullptr;
       c = c->base) {
    for (const MethodDecl& m : c->decl->methods) {
      if (m.name == method) return MethodRef{c, &m};
    }
  }
  return std::nullopt;
}

std::optional<FieldRef> ResolvedProgram::lookup_field(
    std::string_view class_name, std::string_view field) const {
  for (const ClassInfo* c = find_class(class_name); c != nullptr;
       c = c->base) {
    for (const FieldDecl& f : c->decl->fields) {
      if (f.name == field) return FieldRef{c, &f};
    }
  }
  return std::nullopt;
}

std::vector<MethodRef> ResolvedProgram::overrides_below(
    const ClassInfo* cls, std::string_view method) const {
  std::vector<MethodRef> out;
  std::vector<const ClassInfo*> stack(cls->children.rbegin(),
                                      cls->children.rend());
  while (!stack.empty()) {
    const ClassInfo* c = stack.back();
    stack.pop_back();
    for (const MethodDecl& m : c->decl->methods) {
      if (m.name == method) out.push_back({c, &m});
    }
    stack.insert(stack.end(), c->children.rbegin(), c->children.rend());
  }
  return out;
}

bool ResolvedProgram::is_virtual_method(std::string_view class_name,
                                        std::string_view method) const {
  const ClassInfo* start = find_class(class_name);
  if (start == nullptr) return false;
  for (const ClassInfo* c = start; c != nullptr; c = c->base) {
    for (const MethodDecl& m : c->decl->methods) {
      if (m.name == method && m.is_virtual) return true;
    }
  }
  for (const MethodRef& ref : overrides_below(start, method)) {
    if (ref.method->is_virtual) return true;
  }
  return false;
}

std::vector<FieldRef> ResolvedProgram::all_fields(
    std::string_view class_name) const {
  std::vector<const ClassInfo*> chain;
  for (const ClassInfo* c = find_class(class_name); c != nullptr;
       c = c->base) {
    chain.push_back(c);
  }
  std::vector<FieldRef> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const FieldDecl& f : (*it)->decl->fields) out.push_back({*it, &f});
  }
  return out;
}

bool ResolvedProgram::is_friend(const ClassInfo* cls,
                                std::string_view function) const {
  return std::any_of(cls->decl->friends.begin(), cls->decl->friends.end(),
                     [&](const FriendDecl& f) { return f.name == function; });
}

bool is_assignable(const ResolvedProgram& program, const Type& from,
                   const Type& to) {
  if (from.kind == TypeKind::kAny || to.kind == TypeKind::kAny) return true;
  if (from.kind != to.kind) return false;
  if (from.kind != TypeKind::kClass) return true;
  return program.is_subclass(from.class_name, to.class_name);
}

// ---------------------------------------------------------------------------
// Resolver.

class Resolver {
 public:
  explicit Resolver(Program program) : result_(std::move(program)) {}

  ResolveResult run() {
    Program& program = *result_.program_;
    collect_declarations(program);
    link_hierarchy();
    check_members();
    for (Decl& decl : program.decls) {
      if (auto* cls = std::get_if<ClassDecl>(&decl)) {
        resolve_class_bodies(*cls);
      } else {
        resolve_function(std::get<FunDecl>(decl));
      }
    }
    ResolveResult out;
    out.errors = std::move(errors_);
    if (out.errors.empty()) out.program.emplace(std::move(result_));
    return out;
  }

 private:
  struct VarInfo {
    Type type;
    VarKind kind;
    ParamMode mode = ParamMode::kValue;
  };

  struct Context {
    const ClassInfo* cls = nullptr;
    std::string function;  // free function name, for friend checks
    std::vector<std::map<std::string, VarInfo>> scopes;
  };

  void error(const Span& span, std::string message) {
    errors_.push_back({span, std::move(message)});
  }

  // Phase 1: the class table and the function table.
  void collect_declarations(Program& program) {
    std::set<std::pair<std::string, std::size_t>> seen_functions;
    for (Decl& decl : program.decls) {
      if (auto* cls = std::get_if<ClassDecl>(&decl)) {
        if (result_.classes_.count(cls->name)) {
          error(cls->span, "duplicate definition of class '" + cls->name + "'");
          continue;
        }
        auto info = std::make_unique<ClassInfo>();
        info->decl = cls;
        result_.class_order_.push_back(info.get());
        result_.classes_.emplace(cls->name, std::move(info));
        result_.hierarchy_[cls->name] = cls->base;
      } else {
        FunDecl& fn = std::get<FunDecl>(decl);
        if (fn.name == "print") {
          error(fn.span, "'print' is a built-in and cannot be redefined");
          continue;
        }
        if (!seen_functions.insert({fn.name, fn.params.size()}).second) {
          error(fn.span, "duplicate definition of function '" + fn.name +
                             "' with " + std::to_string(fn.params.size()) +
                             " parameter(s)");
          continue;
        }
        result_.functions_.push_back(&fn);
      }
    }
  }

  // Phase 2: base links, then cycle detection.
  void link_hierarchy() {
    for (const ClassInfo* c : result_.class_order_) {
      auto* info = const_cast<ClassInfo*>(c);
      if (!info->decl->base) continue;
      auto it = result_.classes_.find(*info->decl->base);
      if (it == result_.classes_.end()) {
        error(*info->decl->base_span,
              "unknown base class '" + *info->decl->base + "'");
        continue;
      }
      info->base = it->second.get();
    }
    std::set<const ClassInfo*> reported;
    for (const ClassInfo* c : result_.class_order_) {
      std::set<const ClassInfo*> visited;
      const ClassInfo* walk = c;
      while (walk != nullptr && visited.insert(walk).second) walk = walk->base;
      if (walk == c && !reported.count(c)) {
        // Report once per cycle, at its first member in declaration order.
        const ClassInfo* m = c;
        do {
          reported.insert(m);
          m = m->base;
        } while (m != c);
        error(c->decl->span,
              "cyclic inheritance involving class '" + c->name() + "'");
      }
    }
    for (const ClassInfo* c : reported) const_cast<ClassInfo*>(c)->base = nullptr;
    for (const ClassInfo* c : result_.class_order_) {
      if (c->base) const_cast<ClassInfo*>(c->base)->children.push_back(c);
    }
  }

  void check_type(const TypeRef& ref) {
    if (ref.type.kind == TypeKind::kClass &&
        !result_.find_class(ref.type.class_name)) {
      error(ref.span, "unknown type '" + ref.type.class_name + "'");
    }
  }

  void check_params(const std::vector<Param>& params) {
    std::set<std::string> names;
    for (const Param& p : params) {
      check_type(p.type);
      if (!names.insert(p.name).second) {
        error(p.span, "duplicate parameter '" + p.name + "'");
      }
    }
  }

  // Phase 3: member tables, overrides, friends, declared types.
  void check_members() {
    for (const ClassInfo* c : result_.class_order_) {
      const ClassDecl& cls = *c->decl;
      std::set<std::string> names;
      for (const FieldDecl& f : cls.fields) {
        check_type(f.type);
        if (!names.insert(f.name).second) {
          error(f.span, "duplicate member '" + f.name + "' in class '" +
                            cls.name + "'");
          continue;
        }
        if (c->base && result_.lookup_field(c->base->name(), f.name)) {
          error(f.span, "field '" + f.name + "' redeclares an inherited field");
        }
      }
      for (const MethodDecl& m : cls.methods) {
        check_type(m.return_type);
        check_params(m.params);
        if (!names.insert(m.name).second) {
          error(m.span, "duplicate member '" + m.name + "' in class '" +
                            cls.name + "'");
          continue;
        }
        if (!c->base) continue;
        if (auto inherited = result_.lookup_method(c->base->name(), m.name)) {
          if (inherited->method->params.size() != m.params.size()) {
            error(m.span, "override of '" + inherited->owner->name() +
                              "::" + m.name +
                              "' changes the number of parameters");
          }
        }
        if (result_.lookup_field(c->base->name(), m.name)) {
          error(m.span, "method '" + m.name + "' hides an inherited field");
        }
      }
      for (const CtorDecl& ctor : cls.ctors) check_params(ctor.params);
      for (const FriendDecl& f : cls.friends) {
        if (!result_.has_function_named(f.name)) {
          error(f.span, "unknown friend function '" + f.name + "'");
        }
      }
    }
    for (const FunDecl* fn : result_.functions_) {
      check_type(fn->return_type);
      check_params(fn->params);
    }
  }

  // Phase 4: bodies.

  static void declare_params(Context& ctx, const std::vector<Param>& params) {
    ctx.scopes.emplace_back();
    for (const Param& p : params) {
      ctx.scopes.back()[p.name] = {p.type.type, VarKind::kParam, p.mode};
    }
  }

  void resolve_function(FunDecl& fn) {
    if (std::find(result_.functions_.begin(), result_.functions_.end(),
                  &fn) == result_.functions_.end()) {
      return;  // duplicate, already reported
    }
    Context ctx;
    ctx.function = fn.name;
    declare_params(ctx, fn.params);
    resolve_block(ctx, fn.body);
  }

  void resolve_class_bodies(ClassDecl& cls) {
    const ClassInfo* info = result_.find_class(cls.name);
    if (info == nullptr || info->decl != &cls) return;  // duplicate
    for (MethodDecl& m : cls.methods) {
      Context ctx;
      ctx.cls = info;
      declare_params(ctx, m.params);
      resolve_block(ctx, m.body);
    }
    for (CtorDecl& ctor : cls.ctors) resolve_ctor(info, ctor);
    if (cls.ctors.empty() && info->base) {
      check_default_ctor(info->base, cls.span);
    }
  }

  void check_default_ctor(const ClassInfo* base, const Span& at) {
    const auto& ctors = base->decl->ctors;
    const bool has_default =
        ctors.empty() || std::any_of(ctors.begin(), ctors.end(),
                                     [](const CtorDecl& c) {
                                       return c.params.empty();
                                     });
    if (!has_default) {
      error(at, "base class '" + base->name() +
                    "' has no zero-argument constructor");
    }
  }

  void resolve_ctor(const ClassInfo* info, CtorDecl& ctor) {
    Context ctx;
    ctx.cls = info;
    declare_params(ctx, ctor.params);
    if (ctor.base_init) {
      std::vector<Type> types;
      for (ExprPtr& arg : ctor.base_init->args) {
        types.push_back(resolve_expr(ctx, *arg));
      }
      ctor.base_init->ctor_index =
          select_ctor(info->base, types, ctor.base_init->span);
    } else if (info->base) {
      check_default_ctor(info->base, ctor.span);
    }
    std::set<std::string> initialized;
    for (FieldInit& init : ctor.field_inits) {
      resolve_expr(ctx, *init.value);
      const bool own = std::any_of(
          info->decl->fields.begin(), info->decl->fields.end(),
          [&](const FieldDecl& f) { return f.name == init.field; });
      if (!own) {
        error(init.span, "'" + init.field + "' is not a field of class '" +
                             info->name() + "'");
      } else if (!initialized.insert(init.field).second) {
        error(init.span, "field '" + init.field + "' initialized twice");
      }
    }
    resolve_block(ctx, ctor.body);
  }

  // Returns the index of the first constructor of `cls` accepting `args`,
  // or -1 for the implicit default constructor.
  int select_ctor(const ClassInfo* cls, const std::vector<Type>& args,
                  const Span& at) {
    const auto& ctors = cls->decl->ctors;
    if (ctors.empty()) {
      if (args.empty()) return -1;
      error(at, "class '" + cls->name() + "' has only a default constructor");
      return -1;
    }
    for (std::size_t i = 0; i < ctors.size(); ++i) {
      const auto& params = ctors[i].params;
      if (params.size() != args.size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < args.size() && ok; ++j) {
        ok = is_assignable(result_, args[j], params[j].type.type);
      }
      if (ok) return static_cast<int>(i);
    }
    std::string shown;
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (j) shown += ", ";
      shown += to_string(args[j]);
    }
    error(at, "no constructor of '" + cls->name() + "' accepts (" + shown +
                  ")");
    return -1;
  }

  const VarInfo* lookup_var(const Context& ctx, const std::string& name) const {
    for (auto it = ctx.scopes.rbegin(); it != ctx.scopes.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  void check_access(const Context& ctx, const ClassInfo* owner,
                    Visibility vis, const std::string& member,
                    const Span& at) {
    if (vis == Visibility::kPublic) return;
    if (ctx.cls == owner) return;
    if (ctx.cls == nullptr && result_.is_friend(owner, ctx.function)) return;
    error(at, "'" + owner->name() + "::" + member +
                  "' is private and not accessible here");
  }

  void resolve_block(Context& ctx, Block& block) {
    ctx.scopes.emplace_back();
    for (Stmt& stmt : block) resolve_stmt(ctx, stmt);
    ctx.scopes.pop_back();
  }

  void resolve_stmt(Context& ctx, Stmt& stmt) {
    std::visit(
        [&](auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            Type t = resolve_expr(ctx, *node.init);
            if (node.name == "this" || lookup_var(ctx, node.name)) {
              error(stmt.span, "duplicate definition of '" + node.name + "'");
            }
            ctx.scopes.back()[node.name] = {t, VarKind::kLocal};
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            resolve_expr(ctx, *node.target);
            if (const VarRef* v = node.target->template as<VarRef>();
                v && v->kind == VarKind::kThis) {
              error(node.target->span, "cannot assign to 'this'");
            }
            resolve_expr(ctx, *node.value);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            resolve_expr(ctx, *node.cond);
            resolve_block(ctx, node.then_block);
            if (node.else_block) resolve_block(ctx, *node.else_block);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            resolve_expr(ctx, *node.cond);
            resolve_block(ctx, node.body);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (node.value) resolve_expr(ctx, *node.value);
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            resolve_expr(ctx, *node.cond);
          } else {
            resolve_expr(ctx, *node.expr);
          }
        },
        stmt.node);
  }

  // Resolves `expr` in place and returns (and records) its static type.
  Type resolve_expr(Context& ctx, Expr& expr) {
    Type t = resolve_node(ctx, expr);
    expr.static_type = t;
    return t;
  }

  std::vector<Type> resolve_args(Context& ctx, ExprList& args) {
    std::vector<Type> types;
    for (ExprPtr& a : args) types.push_back(resolve_expr(ctx, *a));
    return types;
  }

  std::optional<std::string> class_of(const Type& t, const Span& at,
                                      std::string_view what) {
    if (t.kind == TypeKind::kClass) return t.class_name;
    error(at, std::string(what) + " on a value of type '" + to_string(t) +
                  "'");
    return std::nullopt;
  }

  Type resolve_method_call(Context& ctx, Expr& expr, MethodCall& call) {
    std::optional<std::string> start;
    if (call.qualifier) {
      if (ctx.cls == nullptr) {
        error(expr.span, "qualified call outside a class");
      } else if (!result_.find_class(*call.qualifier)) {
        error(expr.span, "unknown class '" + *call.qualifier + "'");
      } else if (!result_.is_subclass(ctx.cls->name(), *call.qualifier)) {
        error(expr.span, "'" + *call.qualifier + "' is not '" +
                             ctx.cls->name() + "' or one of its bases");
      } else {
        start = *call.qualifier;
      }
    } else if (call.receiver) {
      Type recv = resolve_expr(ctx, *call.receiver);
      start = class_of(recv, expr.span, "method call '" + call.method + "'");
    } else if (ctx.cls != nullptr) {
      start = ctx.cls->name();
    } else {
      error(expr.span, "method call without receiver outside a class");
    }
    const std::vector<Type> args = resolve_args(ctx, call.args);
    if (!start) return Type::Any();
    auto found = result_.lookup_method(*start, call.method);
    if (!found) {
      error(expr.span, "class '" + *start + "' has no method '" +
                           call.method + "'");
      return Type::Any();
    }
    check_access(ctx, found->owner, found->method->visibility, call.method,
                 expr.span);
    if (found->method->params.size() != args.size()) {
      error(expr.span, "method '" + found->owner->name() + "::" +
                           call.method + "' takes " +
                           std::to_string(found->method->params.size()) +
                           " argument(s), got " + std::to_string(args.size()));
    }
    call.static_class = *start;
    call.owner_class = found->owner->name();
    call.is_virtual = !call.qualifier &&
                      result_.is_virtual_method(*start, call.method);
    return found->method->return_type.type;
  }

  Type resolve_node(Context& ctx, Expr& expr) {
    ExprNode& node = expr.node;
    if (std::holds_alternative<IntLit>(node)) return Type::Int();
    if (std::holds_alternative<BoolLit>(node)) return Type::Bool();
    if (std::holds_alternative<NilLit>(node)) return Type::List();
    if (auto* v = std::get_if<VarRef>(&node)) {
      if (v->name == "this") {
        if (ctx.cls == nullptr) {
          error(expr.span, "'this' outside a class");
          return Type::Any();
        }
        v->kind = VarKind::kThis;
        return Type::Class(ctx.cls->name());
      }
      if (const VarInfo* info = lookup_var(ctx, v->name)) {
        v->kind = info->kind;
        v->mode = info->mode;
        return info->type;
      }
      if (ctx.cls != nullptr) {
        if (auto f = result_.lookup_field(ctx.cls->name(), v->name)) {
          v->kind = VarKind::kField;
          v->owner_class = f->owner->name();
          check_access(ctx, f->owner, f->field->visibility, v->name,
                       expr.span);
          return f->field->type.type;
        }
      }
      error(expr.span, "unknown name '" + v->name + "'");
      return Type::Any();
    }
    if (auto* fa = std::get_if<FieldAccess>(&node)) {
      Type obj = resolve_expr(ctx, *fa->object);
      auto cls = class_of(obj, expr.span, "field access '" + fa->field + "'");
      if (!cls) return Type::Any();
      auto f = result_.lookup_field(*cls, fa->field);
      if (!f) {
        error(expr.span,
              "class '" + *cls + "' has no field '" + fa->field + "'");
        return Type::Any();
      }
      fa->owner_class = f->owner->name();
      check_access(ctx, f->owner, f->field->visibility, fa->field, expr.span);
      return f->field->type.type;
    }
    if (auto* mc = std::get_if<MethodCall>(&node)) {
      return resolve_method_call(ctx, expr, *mc);
    }
    if (auto* fc = std::get_if<FunCall>(&node)) {
      if (ctx.cls != nullptr &&
          result_.lookup_method(ctx.cls->name(), fc->name)) {
        MethodCall call;
        call.method = std::move(fc->name);
        call.args = std::move(fc->args);
        node = std::move(call);
        return resolve_method_call(ctx, expr, std::get<MethodCall>(node));
      }
      const std::vector<Type> args = resolve_args(ctx, fc->args);
      if (fc->name == "print") {
        if (args.size() != 1) {
          error(expr.span, "'print' takes exactly one argument");
        }
        fc->kind = CallKind::kPrint;
        return Type::Unit();
      }
      if (const FunDecl* fn = result_.find_function(fc->name, args.size())) {
        fc->kind = CallKind::kFunction;
        return fn->return_type.type;
      }
      if (result_.has_function_named(fc->name)) {
        error(expr.span, "no overload of '" + fc->name + "' takes " +
                             std::to_string(args.size()) + " argument(s)");
      } else {
        error(expr.span, "unknown function '" + fc->name + "'");
      }
      return Type::Any();
    }
    if (auto* nw = std::get_if<NewObject>(&node)) {
      const std::vector<Type> args = resolve_args(ctx, nw->args);
      const ClassInfo* cls = result_.find_class(nw->class_name);
      if (cls == nullptr) {
        error(expr.span, "unknown class '" + nw->class_name + "'");
        return Type::Any();
      }
      nw->ctor_index = select_ctor(cls, args, expr.span);
      return Type::Class(nw->class_name);
    }
    if (auto* b = std::get_if<BuiltinCall>(&node)) {
      resolve_args(ctx, b->args);
      switch (b->op) {
        case BuiltinOp::kCons: return Type::List();
        case BuiltinOp::kHead: return Type::Any();
        case BuiltinOp::kTail: return Type::List();
        case BuiltinOp::kIsNil: return Type::Bool();
      }
    }
    if (auto* bin = std::get_if<Binary>(&node)) {
      resolve_expr(ctx, *bin->lhs);
      resolve_expr(ctx, *bin->rhs);
      switch (bin->op) {
        case BinaryOp::kAdd:
        case BinaryOp::kSub:
        case BinaryOp::kMul:
        case BinaryOp::kDiv:
        case BinaryOp::kMod:
          return Type::Int();
        default:
          return Type::Bool();
      }
    }
    auto& un = std::get<Unary>(node);
    resolve_expr(ctx, *un.operand);
    return un.op == UnaryOp::kNot ? Type::Bool() : Type::Int();
  }

  ResolvedProgram result_;
  std::vector<ResolveError> errors_;
};

ResolveResult resolve(Program program) {
  return Resolver(std::move(program)).run();
}

std::optional<ResolveError> check_runnable(const ResolvedProgram& program) {
  const FunDecl* main = nullptr;
  for (const FunDecl* fn : program.functions()) {
    if (fn->name != "main") continue;
    if (!fn->params.empty()) {
      return ResolveError{fn->span, "'main' must take no parameters"};
    }
    main = fn;
  }
  if (main == nullptr) {
    Span at;
    if (!program.program().decls.empty()) {
      const Decl& last = program.program().decls.back();
      at = std::visit([](const auto& d) { return d.span; }, last);
    }
    return ResolveError{at, "program has no 'main' function"};
  }
  return std::nullopt;
}

}  // namespace minioo
