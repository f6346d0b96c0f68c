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

#include "minioo/checker/rules.h"

#include "minioo/frontend/visit.h"

namespace minioo {
namespace {

template <typename F>
void for_each_class(const ResolvedProgram& program, F&& fn) {
  for (const Decl& d : program.program().decls) {
    if (const auto* cls = std::get_if<ClassDecl>(&d)) fn(*cls);
  }
}

void strict_in_block(const Block& body, const std::string& subject,
                     std::vector<Diagnostic>& out) {
  for_each_stmt(body, [&](const Stmt& s) {
    const auto* as = s.as<AssignStmt>();
    if (as == nullptr) return;
    std::string target;
    if (const auto* v = as->target->as<VarRef>()) {
      target = v->kind == VarKind::kField ? "field '" + v->name + "'"
                                          : "'" + v->name + "'";
    } else {
      target = "field '" + as->target->as<FieldAccess>()->field + "'";
    }
    out.push_back({RuleId::kR3SNoMutation, s.span, subject,
                   "assignment to " + target + " in '" + subject + "'"});
  });
}

bool has_assignment(const Block& body) {
  bool found = false;
  for_each_stmt(body, [&](const Stmt& s) {
    if (s.as<AssignStmt>()) found = true;
  });
  return found;
}

}  // namespace

std::vector<Diagnostic> check_r1(const ResolvedProgram& program) {
  std::vector<Diagnostic> out;
  for_each_class(program, [&](const ClassDecl& cls) {
    for (const MethodDecl& m : cls.methods) {
      if (!m.is_virtual) continue;
      const std::string subject = cls.name + "::" + m.name;
      out.push_back({RuleId::kR1NoVirtual, m.virtual_span.value_or(m.span),
                     subject,
                     "method '" + subject + "' is declared virtual"});
    }
  });
  return out;
}

std::vector<Diagnostic> check_r2(const ResolvedProgram& program) {
  std::vector<Diagnostic> out;
  for_each_class(program, [&](const ClassDecl& cls) {
    if (!cls.exported) return;
    for (const FieldDecl& f : cls.fields) {
      if (f.visibility != Visibility::kPublic) continue;
      out.push_back({RuleId::kR2OpaqueExports, f.span, cls.name + "::" + f.name,
                     "exported class '" + cls.name + "' has public field '" +
                         f.name + "'"});
    }
    for (const MethodDecl& m : cls.methods) {
      if (m.visibility != Visibility::kPublic) continue;
      out.push_back({RuleId::kR2OpaqueExports, m.span, cls.name + "::" + m.name,
                     "exported class '" + cls.name + "' has public method '" +
                         m.name + "'"});
    }
  });
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_r3_strict(const ResolvedProgram& program) {
  std::vector<Diagnostic> out;
  for (const Decl& d : program.program().decls) {
    if (const auto* fn = std::get_if<FunDecl>(&d)) {
      strict_in_block(fn->body, fn->name, out);
      continue;
    }
    const auto& cls = std::get<ClassDecl>(d);
    for (const MethodDecl& m : cls.methods) {
      strict_in_block(m.body, cls.name + "::" + m.name, out);
    }
    for (const CtorDecl& c : cls.ctors) {
      strict_in_block(c.body, cls.name + "::" + cls.name, out);
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_r3_relaxed(const ResolvedProgram& program,
                                         const CallGraph& graph,
                                         const MutationSummary& summaries) {
  (void)program;
  std::vector<Diagnostic> out;
  for (std::size_t n = 0; n < graph.nodes().size(); ++n) {
    const Callable& c = graph.nodes()[n];
    std::string names;
    for (int pos : summaries.of(static_cast<int>(n))) {
      std::string name;
      if (pos == 0 && c.kind != CallableKind::kFunction) {
        if (c.kind == CallableKind::kCtor) continue;
        name = "this";
      } else {
        name = c.params()[pos - c.first_param_position()].name;
      }
      names += names.empty() ? "" : ", ";
      names += "'" + name + "'";
    }
    if (names.empty()) continue;
    out.push_back({RuleId::kR3RNoArgMutation, c.span(), c.name,
                   "'" + c.name + "' may mutate its argument(s) " + names});
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_r3_relaxed(const ResolvedProgram& program) {
  const CallGraph graph = build_call_graph(program);
  return check_r3_relaxed(program, graph, mutation_summaries(program, graph));
}

std::vector<Diagnostic> check_r4(const ResolvedProgram& program) {
  std::vector<Diagnostic> out;
  for_each_class(program, [&](const ClassDecl& cls) {
    if (!cls.base) return;
    const std::string subject = cls.name + "::" + cls.name;
    for (const CtorDecl& c : cls.ctors) {
      if (!c.base_init) {
        out.push_back({RuleId::kR4CtorDelegation, c.span, subject,
                       "constructor of derived class '" + cls.name +
                           "' does not invoke a constructor of '" +
                           *cls.base + "'"});
      }
      if (has_assignment(c.body)) {
        out.push_back({RuleId::kR4CtorDelegation, c.span, subject,
                       "constructor of derived class '" + cls.name +
                           "' assigns in its body"});
      }
    }
  });
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_all(const ResolvedProgram& program,
                                  const CheckConfig& config) {
  std::vector<Diagnostic> out;
  auto append = [&](std::vector<Diagnostic> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  };
  for (RuleId rule : config.enabled()) {
    switch (rule) {
      case RuleId::kR1NoVirtual: append(check_r1(program)); break;
      case RuleId::kR2OpaqueExports: append(check_r2(program)); break;
      case RuleId::kR3SNoMutation: append(check_r3_strict(program)); break;
      case RuleId::kR3RNoArgMutation: append(check_r3_relaxed(program)); break;
      case RuleId::kR4CtorDelegation: append(check_r4(program)); break;
    }
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace minioo
