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

#include "minioo/checker/mutation.h"

#include <map>
#include <string>

#include "minioo/frontend/visit.h"

namespace minioo {
namespace {

using Roots = std::set<int>;

bool add_all(Roots& into, const Roots& from) {
  const std::size_t before = into.size();
  into.insert(from.begin(), from.end());
  return into.size() != before;
}

class Analyzer {
 public:
  Analyzer(const CallGraph& graph)
      : graph_(graph),
        marked_(graph.nodes().size()),
        returns_(graph.nodes().size()),
        rebinds_(graph.nodes().size()) {}

  MutationSummary run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t n = 0; n < graph_.nodes().size(); ++n) {
        changed |= analyze(static_cast<int>(n));
      }
    }
    MutationSummary summary;
    for (std::size_t n = 0; n < graph_.nodes().size(); ++n) {
      const Callable& c = graph_.nodes()[n];
      Roots kept;
      for (int pos : marked_[n]) {
        const int i = pos - c.first_param_position();
        if (i >= 0) {
          const Param& p = c.params()[i];
          if (p.mode == ParamMode::kValue && p.type.type.is_primitive()) {
            continue;
          }
        }
        kept.insert(pos);
      }
      summary.marked.push_back(std::move(kept));
    }
    return summary;
  }

 private:
  // One flow-insensitive pass over a callable, iterated until its
  // environment is stable. Returns true if its marks or returns grew.
  bool analyze(int node) {
    const Callable& c = graph_.nodes()[node];
    env_.clear();
    marks_.clear();
    ret_.clear();
    ref_pos_.clear();
    const auto& params = c.params();
    for (std::size_t i = 0; i < params.size(); ++i) {
      const int pos = c.first_param_position() + static_cast<int>(i);
      if (params[i].mode == ParamMode::kRef) ref_pos_[params[i].name] = pos;
      if (!params[i].type.type.is_primitive() ||
          params[i].mode == ParamMode::kRef) {
        env_[params[i].name] = {pos};
      }
    }
    if (c.kind == CallableKind::kMethod) env_["this"] = {0};
    bool grew = true;
    while (grew) {
      grew = false;
      if (c.kind == CallableKind::kCtor) {
        if (c.ctor->base_init) {
          const BaseInit& b = *c.ctor->base_init;
          for (const ExprPtr& a : b.args) grew |= visit_calls(*a);
          std::vector<const Expr*> args;
          for (const ExprPtr& a : b.args) args.push_back(a.get());
          grew |= apply_call(&b, nullptr, args, false);
        }
        for (const FieldInit& fi : c.ctor->field_inits) {
          grew |= visit_calls(*fi.value);
          grew |= add_all(env_["this"], roots(*fi.value));
        }
      }
      for_each_stmt(c.body(), [&](const Stmt& s) { grew |= stmt(s); });
    }
    bool changed = add_all(marked_[node], marks_);
    changed |= add_all(returns_[node], ret_);
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i].mode != ParamMode::kRef) continue;
      const int pos = c.first_param_position() + static_cast<int>(i);
      changed |= add_all(rebinds_[node][pos], env_[params[i].name]);
    }
    return changed;
  }

  bool stmt(const Stmt& s) {
    bool grew = false;
    if (const auto* let = s.as<LetStmt>()) {
      grew |= visit_calls(*let->init);
      grew |= add_all(env_[let->name], roots(*let->init));
    } else if (const auto* as = s.as<AssignStmt>()) {
      grew |= visit_calls(*as->target);
      grew |= visit_calls(*as->value);
      const Roots value = roots(*as->value);
      if (const auto* v = as->target->as<VarRef>()) {
        if (v->kind == VarKind::kField) {
          grew |= mark(env_["this"]);
          grew |= add_all(env_["this"], value);
        } else {
          if (v->kind == VarKind::kParam && v->mode == ParamMode::kRef) {
            grew |= mark({ref_pos_.at(v->name)});
          }
          grew |= add_all(env_[v->name], value);
        }
      } else if (const auto* fa = as->target->as<FieldAccess>()) {
        grew |= mark(roots(*fa->object));
        if (const std::string* base = base_variable(*fa->object)) {
          grew |= add_all(env_[*base], value);
        }
      }
    } else if (const auto* r = s.as<ReturnStmt>()) {
      if (r->value) {
        grew |= visit_calls(*r->value);
        grew |= add_all(ret_, roots(*r->value));
      }
    } else if (const auto* i = s.as<IfStmt>()) {
      grew |= visit_calls(*i->cond);
    } else if (const auto* w = s.as<WhileStmt>()) {
      grew |= visit_calls(*w->cond);
    } else if (const auto* a = s.as<AssertStmt>()) {
      grew |= visit_calls(*a->cond);
    } else if (const auto* e = s.as<ExprStmt>()) {
      grew |= visit_calls(*e->expr);
    }
    return grew;
  }

  // Name of the variable an access path starts from ("this" for fields).
  const std::string* base_variable(const Expr& e) {
    static const std::string kThis = "this";
    if (const auto* fa = e.as<FieldAccess>()) return base_variable(*fa->object);
    if (const auto* v = e.as<VarRef>()) {
      if (v->kind == VarKind::kThis || v->kind == VarKind::kField) {
        return &kThis;
      }
      return &v->name;
    }
    return nullptr;
  }

  bool mark(const Roots& roots) { return add_all(marks_, roots); }

  bool visit_calls(const Expr& root) {
    bool grew = false;
    for_each_expr(root, [&](const Expr& e) {
      if (const auto* mc = e.as<MethodCall>()) {
        std::vector<const Expr*> args;
        for (const ExprPtr& a : mc->args) args.push_back(a.get());
        grew |= apply_call(&e, mc->receiver.get(), args, true);
      } else if (const auto* fc = e.as<FunCall>()) {
        std::vector<const Expr*> args;
        for (const ExprPtr& a : fc->args) args.push_back(a.get());
        grew |= apply_call(&e, nullptr, args, false);
      } else if (const auto* nw = e.as<NewObject>()) {
        std::vector<const Expr*> args;
        for (const ExprPtr& a : nw->args) args.push_back(a.get());
        grew |= apply_call(&e, nullptr, args, false);
      }
    });
    return grew;
  }

  // Roots of the argument at callee position `pos`. For method calls the
  // receiver is position 0 and a missing receiver means `this`.
  Roots arg_roots(const Callable& callee, const Expr* receiver,
                  const std::vector<const Expr*>& args, bool method, int pos) {
    if (pos == 0 && callee.kind != CallableKind::kFunction) {
      if (!method) return {};
      return receiver ? roots(*receiver) : env_["this"];
    }
    const int i = pos - callee.first_param_position();
    if (i < 0 || i >= static_cast<int>(args.size())) return {};
    return roots(*args[i]);
  }

  bool apply_call(const void* site, const Expr* receiver,
                  const std::vector<const Expr*>& args, bool method) {
    bool grew = false;
    for (int t : graph_.targets(site)) {
      const Callable& callee = graph_.nodes()[t];
      for (int pos : marked_[t]) {
        grew |= mark(arg_roots(callee, receiver, args, method, pos));
      }
      const auto& params = callee.params();
      for (std::size_t i = 0; i < params.size() && i < args.size(); ++i) {
        if (params[i].mode != ParamMode::kRef) continue;
        const std::string* var = base_variable(*args[i]);
        if (var == nullptr || args[i]->as<FieldAccess>()) continue;
        const int pos = callee.first_param_position() + static_cast<int>(i);
        Roots held;
        for (int from : rebinds_[t][pos]) {
          add_all(held, arg_roots(callee, receiver, args, method, from));
        }
        grew |= add_all(env_[*var], held);
      }
    }
    return grew;
  }

  Roots roots(const Expr& e) {
    if (const auto* v = e.as<VarRef>()) {
      if (v->kind == VarKind::kParam && v->mode == ParamMode::kRef) {
        return env_[v->name];
      }
    }
    if (e.static_type.is_primitive()) return {};
    if (const auto* v = e.as<VarRef>()) {
      if (v->kind == VarKind::kThis || v->kind == VarKind::kField) {
        return env_["this"];
      }
      return env_[v->name];
    }
    if (const auto* fa = e.as<FieldAccess>()) return roots(*fa->object);
    if (const auto* b = e.as<BuiltinCall>()) {
      Roots out;
      for (const ExprPtr& a : b->args) add_all(out, roots(*a));
      return out;
    }
    if (const auto* nw = e.as<NewObject>()) {
      Roots out;
      for (const ExprPtr& a : nw->args) add_all(out, roots(*a));
      return out;
    }
    const Expr* receiver = nullptr;
    std::vector<const Expr*> args;
    bool method = false;
    if (const auto* mc = e.as<MethodCall>()) {
      receiver = mc->receiver.get();
      method = true;
      for (const ExprPtr& a : mc->args) args.push_back(a.get());
    } else if (const auto* fc = e.as<FunCall>()) {
      for (const ExprPtr& a : fc->args) args.push_back(a.get());
    } else {
      return {};
    }
    Roots out;
    for (int t : graph_.targets(&e)) {
      for (int pos : returns_[t]) {
        add_all(out, arg_roots(graph_.nodes()[t], receiver, args, method, pos));
      }
    }
    return out;
  }

  const CallGraph& graph_;
  std::vector<Roots> marked_;
  std::vector<Roots> returns_;
  // Per node: ref parameter position -> positions whose roots the
  // parameter's slot may hold on exit.
  std::vector<std::map<int, Roots>> rebinds_;
  std::map<std::string, Roots> env_;
  Roots marks_;
  Roots ret_;
  std::map<std::string, int> ref_pos_;
};

}  // namespace

MutationSummary mutation_summaries(const ResolvedProgram&,
                                   const CallGraph& graph) {
  return Analyzer(graph).run();
}

}  // namespace minioo
