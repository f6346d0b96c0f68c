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

#include "minioo/interp/interpreter.h"

#include <map>
#include <utility>

namespace minioo {

std::string_view to_string(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::kNilList: return "nil-list";
    case RuntimeErrorKind::kDivisionByZero: return "division-by-zero";
    case RuntimeErrorKind::kMissingMethod: return "missing-method";
    case RuntimeErrorKind::kConstWrite: return "constref-write";
    case RuntimeErrorKind::kUninitialized: return "uninitialized-field";
    case RuntimeErrorKind::kType: return "type";
    case RuntimeErrorKind::kArity: return "arity";
    case RuntimeErrorKind::kUnknownEntry: return "unknown-entry";
    case RuntimeErrorKind::kStepLimit: return "step-limit";
    case RuntimeErrorKind::kDepthLimit: return "depth-limit";
  }
  return "?";
}

std::string to_string(const RuntimeError& error) {
  if (error.span.file.empty()) return "runtime error: " + error.message;
  return to_string(error.span) + ": runtime error: " + error.message;
}

std::optional<MethodRef> dispatch(const ResolvedProgram& program,
                                  const ObjectStore& store, ObjectId receiver,
                                  std::string_view static_class,
                                  std::string_view method, bool qualified) {
  if (!qualified && program.is_virtual_method(static_class, method)) {
    return program.lookup_method(store.at(receiver).class_name, method);
  }
  return program.lookup_method(static_class, method);
}

namespace {

struct Thrown {
  RuntimeError error;
};

struct Binding {
  SlotPtr slot;
  bool readonly = false;
};

struct Frame {
  std::map<std::string, Binding> vars;
  std::optional<Value> self;
};

struct Flow {
  bool returned = false;
  Value value;
};

// An evaluated argument. `slot` is set when the argument is an lvalue that a
// ref parameter may share.
struct Arg {
  Value value;
  SlotPtr slot;
  bool slot_readonly = false;
};

}  // namespace

class Interpreter::Impl {
 public:
  Impl(const ResolvedProgram& program, Limits limits)
      : program_(program), limits_(limits) {}

  template <typename F>
  ExecOutcome guarded(F&& body) {
    output_.clear();
    asserts_.clear();
    steps_ = 0;
    depth_ = 0;
    ExecOutcome out;
    try {
      Value v = body();
      out.rendered = minioo::render(v, store_);
      out.result = std::move(v);
    } catch (const Thrown& t) {
      out.error = t.error;
    }
    out.output = std::move(output_);
    out.assertions_failed = std::move(asserts_);
    output_.clear();
    asserts_.clear();
    return out;
  }

  Value entry_function(std::string_view name, std::vector<Value> values) {
    const FunDecl* fn = program_.find_function(name, values.size());
    if (fn == nullptr) {
      if (program_.has_function_named(name)) {
        fail(RuntimeErrorKind::kArity, Span{},
             "no overload of '" + std::string(name) + "' takes " +
                 std::to_string(values.size()) + " argument(s)");
      }
      fail(RuntimeErrorKind::kUnknownEntry, Span{},
           "unknown function '" + std::string(name) + "'");
    }
    return call_function(*fn, to_args(std::move(values)), fn->span);
  }

  Value entry_method(const Value& receiver, std::string_view method,
                     std::vector<Value> values) {
    if (receiver.kind != Value::Kind::kObject) {
      fail(RuntimeErrorKind::kType, Span{}, "method call on a non-object");
    }
    auto target = program_.lookup_method(
        store_.at(receiver.object).class_name, method);
    if (!target) {
      fail(RuntimeErrorKind::kMissingMethod, Span{},
           "no method '" + std::string(method) + "'");
    }
    if (target->method->params.size() != values.size()) {
      fail(RuntimeErrorKind::kArity, Span{},
           "method '" + std::string(method) + "' takes " +
               std::to_string(target->method->params.size()) +
               " argument(s)");
    }
    return call_method(*target, receiver, to_args(std::move(values)),
                       target->method->span);
  }

  const ResolvedProgram& program_;
  ObjectStore store_;

 private:
  [[noreturn]] void fail(RuntimeErrorKind kind, const Span& span,
                         std::string message) {
    throw Thrown{{kind, span, std::move(message)}};
  }

  void step(const Span& span) {
    if (++steps_ > limits_.max_steps) {
      fail(RuntimeErrorKind::kStepLimit, span, "step limit exceeded");
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Impl& impl, const Span& span) : impl(impl) {
      if (++impl.depth_ > impl.limits_.max_depth) {
        impl.fail(RuntimeErrorKind::kDepthLimit, span,
                  "call depth limit exceeded");
      }
    }
    ~DepthGuard() { --impl.depth_; }
    Impl& impl;
  };

  static std::vector<Arg> to_args(std::vector<Value> values) {
    std::vector<Arg> args;
    for (Value& v : values) args.push_back({std::move(v), nullptr, false});
    return args;
  }

  void bind(Frame& frame, const Param& param, Arg arg) {
    Binding b;
    switch (param.mode) {
      case ParamMode::kValue:
        b.slot = std::make_shared<Slot>(Slot{std::move(arg.value)});
        break;
      case ParamMode::kConstRef:
        b.slot = std::make_shared<Slot>(Slot{arg.value.as_readonly()});
        b.readonly = true;
        break;
      case ParamMode::kRef:
        if (arg.slot) {
          b.slot = std::move(arg.slot);
          b.readonly = arg.slot_readonly;
        } else {
          b.slot = std::make_shared<Slot>(Slot{std::move(arg.value)});
        }
        break;
    }
    frame.vars[param.name] = std::move(b);
  }

  void bind_all(Frame& frame, const std::vector<Param>& params,
                std::vector<Arg> args, const Span& span) {
    if (params.size() != args.size()) {
      fail(RuntimeErrorKind::kArity, span, "argument count mismatch");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      bind(frame, params[i], std::move(args[i]));
    }
  }

  Value run_body(Frame& frame, const Block& body) {
    Flow flow = exec_block(frame, body);
    return flow.returned ? flow.value : Value::Unit();
  }

  Value call_function(const FunDecl& fn, std::vector<Arg> args,
                      const Span& span) {
    DepthGuard guard(*this, span);
    step(span);
    Frame frame;
    bind_all(frame, fn.params, std::move(args), span);
    return run_body(frame, fn.body);
  }

  Value call_method(const MethodRef& target, const Value& self,
                    std::vector<Arg> args, const Span& span) {
    DepthGuard guard(*this, span);
    step(span);
    Frame frame;
    frame.self = self;
    bind_all(frame, target.method->params, std::move(args), span);
    return run_body(frame, target.method->body);
  }

  static int default_ctor(const ClassInfo* cls) {
    const auto& ctors = cls->decl->ctors;
    for (std::size_t i = 0; i < ctors.size(); ++i) {
      if (ctors[i].params.empty()) return static_cast<int>(i);
    }
    return -1;
  }

  Value construct(const ClassInfo* cls, int ctor, std::vector<Arg> args,
                  const Span& span) {
    std::vector<std::string> fields;
    for (const FieldRef& f : program_.all_fields(cls->name())) {
      fields.push_back(f.field->name);
    }
    const Value obj = Value::Object(store_.create(cls->name(), fields));
    run_ctor(cls, ctor, obj, std::move(args), span);
    return obj;
  }

  void run_ctor(const ClassInfo* cls, int index, const Value& obj,
                std::vector<Arg> args, const Span& span) {
    DepthGuard guard(*this, span);
    step(span);
    if (index < 0) {
      if (cls->base) run_ctor(cls->base, default_ctor(cls->base), obj, {}, span);
      return;
    }
    const CtorDecl& ctor = cls->decl->ctors[index];
    Frame frame;
    frame.self = obj;
    bind_all(frame, ctor.params, std::move(args), span);
    if (ctor.base_init) {
      const BaseInit& b = *ctor.base_init;
      const std::vector<Param>* params = nullptr;
      if (b.ctor_index >= 0) params = &cls->base->decl->ctors[b.ctor_index].params;
      std::vector<Arg> base_args = eval_args(frame, b.args, params);
      run_ctor(cls->base, b.ctor_index, obj, std::move(base_args), b.span);
    } else if (cls->base) {
      run_ctor(cls->base, default_ctor(cls->base), obj, {}, span);
    }
    for (const FieldInit& fi : ctor.field_inits) {
      Value v = eval(frame, *fi.value);
      store_.at(obj.object).fields.at(fi.field)->value = std::move(v);
    }
    exec_block(frame, ctor.body);
  }

  Flow exec_block(Frame& frame, const Block& block) {
    for (const Stmt& s : block) {
      Flow flow = exec(frame, s);
      if (flow.returned) return flow;
    }
    return {};
  }

  bool condition(Frame& frame, const Expr& cond) {
    Value v = eval(frame, cond);
    if (v.kind != Value::Kind::kBool) {
      fail(RuntimeErrorKind::kType, cond.span, "condition is not a bool");
    }
    return v.b;
  }

  Flow exec(Frame& frame, const Stmt& stmt) {
    step(stmt.span);
    if (const auto* let = stmt.as<LetStmt>()) {
      Value v = eval(frame, *let->init);
      frame.vars[let->name] = {std::make_shared<Slot>(Slot{std::move(v)}),
                               false};
    } else if (const auto* as = stmt.as<AssignStmt>()) {
      assign(frame, *as->target, *as->value, stmt.span);
    } else if (const auto* i = stmt.as<IfStmt>()) {
      if (condition(frame, *i->cond)) return exec_block(frame, i->then_block);
      if (i->else_block) return exec_block(frame, *i->else_block);
    } else if (const auto* w = stmt.as<WhileStmt>()) {
      while (condition(frame, *w->cond)) {
        Flow flow = exec_block(frame, w->body);
        if (flow.returned) return flow;
        step(stmt.span);
      }
    } else if (const auto* r = stmt.as<ReturnStmt>()) {
      return {true, r->value ? eval(frame, *r->value) : Value::Unit()};
    } else if (const auto* a = stmt.as<AssertStmt>()) {
      if (!eval(frame, *a->cond).is_true()) asserts_.push_back(stmt.span);
    } else if (const auto* e = stmt.as<ExprStmt>()) {
      eval(frame, *e->expr);
    }
    return {};
  }

  void assign(Frame& frame, const Expr& target, const Expr& value,
              const Span& span) {
    if (const auto* v = target.as<VarRef>()) {
      if (v->kind == VarKind::kField) {
        const Value self = *frame.self;
        Value rhs = eval(frame, value);
        write_field(self, v->name, std::move(rhs), span);
        return;
      }
      Binding& b = frame.vars.at(v->name);
      if (b.readonly) {
        fail(RuntimeErrorKind::kConstWrite, span,
             "assignment to constref parameter '" + v->name + "'");
      }
      b.slot->value = eval(frame, value);
      return;
    }
    const auto& fa = std::get<FieldAccess>(target.node);
    const Value obj = eval(frame, *fa.object);
    Value rhs = eval(frame, value);
    write_field(obj, fa.field, std::move(rhs), span);
  }

  SlotPtr field_slot(const Value& obj, const std::string& field,
                     const Span& span) {
    if (obj.kind != Value::Kind::kObject) {
      fail(RuntimeErrorKind::kType, span,
           "field '" + field + "' of a non-object");
    }
    Object& o = store_.at(obj.object);
    auto it = o.fields.find(field);
    if (it == o.fields.end()) {
      fail(RuntimeErrorKind::kType, span,
           "object of class '" + o.class_name + "' has no field '" + field +
               "'");
    }
    return it->second;
  }

  void write_field(const Value& obj, const std::string& field, Value v,
                   const Span& span) {
    SlotPtr slot = field_slot(obj, field, span);
    if (obj.readonly) {
      fail(RuntimeErrorKind::kConstWrite, span,
           "write to field '" + field + "' through a constref parameter");
    }
    slot->value = std::move(v);
  }

  Value read_field(const Value& obj, const std::string& field,
                   const Span& span) {
    SlotPtr slot = field_slot(obj, field, span);
    if (!slot->value) {
      fail(RuntimeErrorKind::kUninitialized, span,
           "field '" + field + "' read before initialization");
    }
    return obj.readonly ? slot->value->as_readonly() : *slot->value;
  }

  Arg eval_arg(Frame& frame, const Expr& e, ParamMode mode) {
    if (mode == ParamMode::kRef) {
      if (const auto* v = e.as<VarRef>()) {
        if (v->kind == VarKind::kLocal || v->kind == VarKind::kParam) {
          const Binding& b = frame.vars.at(v->name);
          return {*b.slot->value, b.slot, b.readonly};
        }
        if (v->kind == VarKind::kField) {
          const Value self = *frame.self;
          Value val = read_field(self, v->name, e.span);
          return {val, field_slot(self, v->name, e.span), self.readonly};
        }
      }
      if (const auto* fa = e.as<FieldAccess>()) {
        const Value obj = eval(frame, *fa->object);
        Value val = read_field(obj, fa->field, e.span);
        return {val, field_slot(obj, fa->field, e.span), obj.readonly};
      }
    }
    return {eval(frame, e), nullptr, false};
  }

  std::vector<Arg> eval_args(Frame& frame, const ExprList& exprs,
                             const std::vector<Param>* params) {
    std::vector<Arg> args;
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      const ParamMode mode = params && i < params->size()
                                 ? (*params)[i].mode
                                 : ParamMode::kValue;
      args.push_back(eval_arg(frame, *exprs[i], mode));
    }
    return args;
  }

  std::int64_t as_int(const Value& v, const Span& span) {
    if (v.kind != Value::Kind::kInt) {
      fail(RuntimeErrorKind::kType, span, "operand is not an int");
    }
    return v.i;
  }

  bool as_bool(const Value& v, const Span& span) {
    if (v.kind != Value::Kind::kBool) {
      fail(RuntimeErrorKind::kType, span, "operand is not a bool");
    }
    return v.b;
  }

  const ListCell& cell_of(const Value& v, const Span& span,
                          std::string_view op) {
    if (v.kind != Value::Kind::kList) {
      fail(RuntimeErrorKind::kType, span,
           std::string(op) + " of a non-list value");
    }
    if (!v.list) {
      fail(RuntimeErrorKind::kNilList, span, std::string(op) + " of nil");
    }
    return *v.list;
  }

  static std::int64_t wrap(std::uint64_t v) {
    return static_cast<std::int64_t>(v);
  }

  Value binary(Frame& frame, const Binary& b, const Span& span) {
    if (b.op == BinaryOp::kAnd || b.op == BinaryOp::kOr) {
      const bool lhs = as_bool(eval(frame, *b.lhs), b.lhs->span);
      if (b.op == BinaryOp::kAnd && !lhs) return Value::Bool(false);
      if (b.op == BinaryOp::kOr && lhs) return Value::Bool(true);
      return Value::Bool(as_bool(eval(frame, *b.rhs), b.rhs->span));
    }
    const Value lhs = eval(frame, *b.lhs);
    const Value rhs = eval(frame, *b.rhs);
    if (b.op == BinaryOp::kEq) return Value::Bool(values_equal(lhs, rhs));
    if (b.op == BinaryOp::kNe) return Value::Bool(!values_equal(lhs, rhs));
    const std::int64_t x = as_int(lhs, b.lhs->span);
    const std::int64_t y = as_int(rhs, b.rhs->span);
    const auto ux = static_cast<std::uint64_t>(x);
    const auto uy = static_cast<std::uint64_t>(y);
    switch (b.op) {
      case BinaryOp::kAdd: return Value::Int(wrap(ux + uy));
      case BinaryOp::kSub: return Value::Int(wrap(ux - uy));
      case BinaryOp::kMul: return Value::Int(wrap(ux * uy));
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (y == 0) {
          fail(RuntimeErrorKind::kDivisionByZero, span, "division by zero");
        }
        if (y == -1) {
          return Value::Int(b.op == BinaryOp::kDiv ? wrap(0 - ux) : 0);
        }
        return Value::Int(b.op == BinaryOp::kDiv ? x / y : x % y);
      case BinaryOp::kLt: return Value::Bool(x < y);
      case BinaryOp::kLe: return Value::Bool(x <= y);
      case BinaryOp::kGt: return Value::Bool(x > y);
      case BinaryOp::kGe: return Value::Bool(x >= y);
      default: break;
    }
    fail(RuntimeErrorKind::kType, span, "unsupported operator");
  }

  Value eval(Frame& frame, const Expr& e) {
    return std::visit([&](const auto& n) { return eval_node(frame, e, n); },
                      e.node);
  }

  Value eval_node(Frame&, const Expr&, const IntLit& n) {
    return Value::Int(n.value);
  }
  Value eval_node(Frame&, const Expr&, const BoolLit& n) {
    return Value::Bool(n.value);
  }
  Value eval_node(Frame&, const Expr&, const NilLit&) {
    return Value::List(nullptr);
  }

  Value eval_node(Frame& frame, const Expr& e, const VarRef& v) {
    switch (v.kind) {
      case VarKind::kThis: return *frame.self;
      case VarKind::kField: return read_field(*frame.self, v.name, e.span);
      default: break;
    }
    auto it = frame.vars.find(v.name);
    if (it == frame.vars.end() || !it->second.slot->value) {
      fail(RuntimeErrorKind::kType, e.span, "unbound variable '" + v.name + "'");
    }
    return *it->second.slot->value;
  }

  Value eval_node(Frame& frame, const Expr& e, const FieldAccess& fa) {
    const Value obj = eval(frame, *fa.object);
    return read_field(obj, fa.field, e.span);
  }

  Value eval_node(Frame& frame, const Expr& e, const MethodCall& mc) {
    const Value self = mc.receiver ? eval(frame, *mc.receiver) : *frame.self;
    if (self.kind != Value::Kind::kObject) {
      fail(RuntimeErrorKind::kType, e.span,
           "method '" + mc.method + "' called on a non-object");
    }
    auto statically = program_.lookup_method(mc.static_class, mc.method);
    std::vector<Arg> args = eval_args(
        frame, mc.args, statically ? &statically->method->params : nullptr);
    auto target = dispatch(program_, store_, self.object, mc.static_class,
                           mc.method, mc.qualifier.has_value());
    if (!target) {
      fail(RuntimeErrorKind::kMissingMethod, e.span,
           "no method '" + mc.method + "' for class '" +
               store_.at(self.object).class_name + "'");
    }
    return call_method(*target, self, std::move(args), e.span);
  }

  Value eval_node(Frame& frame, const Expr& e, const FunCall& fc) {
    if (fc.kind == CallKind::kPrint) {
      const Value v = eval(frame, *fc.args.at(0));
      output_.push_back(minioo::render(v, store_));
      return Value::Unit();
    }
    const FunDecl* fn = program_.find_function(fc.name, fc.args.size());
    if (fn == nullptr) {
      fail(RuntimeErrorKind::kMissingMethod, e.span,
           "unknown function '" + fc.name + "'");
    }
    return call_function(*fn, eval_args(frame, fc.args, &fn->params), e.span);
  }

  Value eval_node(Frame& frame, const Expr& e, const NewObject& nw) {
    const ClassInfo* cls = program_.find_class(nw.class_name);
    const std::vector<Param>* params =
        nw.ctor_index >= 0 ? &cls->decl->ctors[nw.ctor_index].params : nullptr;
    return construct(cls, nw.ctor_index, eval_args(frame, nw.args, params),
                     e.span);
  }

  Value eval_node(Frame& frame, const Expr& e, const BuiltinCall& b) {
    switch (b.op) {
      case BuiltinOp::kCons: {
        const Value head = eval(frame, *b.args[0]);
        const Value tail = eval(frame, *b.args[1]);
        if (tail.kind != Value::Kind::kList) {
          fail(RuntimeErrorKind::kType, b.args[1]->span,
               "cons onto a non-list value");
        }
        Value out = Value::List(std::make_shared<const ListCell>(
            ListCell{head, tail.list}));
        out.readonly = head.readonly || tail.readonly;
        return out;
      }
      case BuiltinOp::kHead: {
        const Value list = eval(frame, *b.args[0]);
        const Value& head = cell_of(list, e.span, "head").head;
        return list.readonly ? head.as_readonly() : head;
      }
      case BuiltinOp::kTail: {
        const Value list = eval(frame, *b.args[0]);
        return Value::List(cell_of(list, e.span, "tail").tail, list.readonly);
      }
      case BuiltinOp::kIsNil: {
        const Value list = eval(frame, *b.args[0]);
        if (list.kind != Value::Kind::kList) {
          fail(RuntimeErrorKind::kType, e.span, "is_nil of a non-list value");
        }
        return Value::Bool(!list.list);
      }
    }
    return Value::Unit();
  }

  Value eval_node(Frame& frame, const Expr& e, const Binary& b) {
    return binary(frame, b, e.span);
  }

  Value eval_node(Frame& frame, const Expr& e, const Unary& u) {
    const Value v = eval(frame, *u.operand);
    if (u.op == UnaryOp::kNot) return Value::Bool(!as_bool(v, e.span));
    return Value::Int(wrap(0 - static_cast<std::uint64_t>(as_int(v, e.span))));
  }

  Limits limits_;
  std::vector<std::string> output_;
  std::vector<Span> asserts_;
  std::int64_t steps_ = 0;
  int depth_ = 0;
};

Interpreter::Interpreter(const ResolvedProgram& program, Limits limits)
    : impl_(std::make_unique<Impl>(program, limits)) {}

Interpreter::~Interpreter() = default;

ExecOutcome Interpreter::run_main() {
  return impl_->guarded([&] { return impl_->entry_function("main", {}); });
}

ExecOutcome Interpreter::call_function(std::string_view name,
                                       std::vector<Value> args) {
  return impl_->guarded(
      [&] { return impl_->entry_function(name, std::move(args)); });
}

ExecOutcome Interpreter::call_method(const Value& receiver,
                                     std::string_view method,
                                     std::vector<Value> args) {
  return impl_->guarded(
      [&] { return impl_->entry_method(receiver, method, std::move(args)); });
}

const ObjectStore& Interpreter::store() const { return impl_->store_; }

const ResolvedProgram& Interpreter::program() const { return impl_->program_; }

std::string Interpreter::render(const Value& value) const {
  return minioo::render(value, impl_->store_);
}

std::string Interpreter::snapshot(const Value& value) const {
  return structural_snapshot(value, impl_->store_);
}

ExecOutcome run_program(const ResolvedProgram& program, Limits limits) {
  Interpreter interp(program, limits);
  return interp.run_main();
}

ExecOutcome evaluate_function(const ResolvedProgram& program,
                              std::string_view name, std::vector<Value> args,
                              Limits limits) {
  Interpreter interp(program, limits);
  return interp.call_function(name, std::move(args));
}

}  // namespace minioo
