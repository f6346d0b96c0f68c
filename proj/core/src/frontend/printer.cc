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

#include "minioo/frontend/printer.h"

#include <optional>
#include <sstream>
#include <type_traits>

namespace minioo {
namespace {

constexpr int kPrecPostfix = 8;
constexpr int kPrecUnary = 7;

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 6;
  }
  return 0;
}

class Printer {
 public:
  std::string str() const { return out_.str(); }

  void program(const Program& p) {
    for (std::size_t i = 0; i < p.decls.size(); ++i) {
      if (i > 0) out_ << "\n";
      std::visit([&](const auto& d) { decl(d); }, p.decls[i]);
    }
  }

  void expr(const Expr& e, int min_prec = 0) {
    std::visit([&](const auto& n) { node(n, min_prec); }, e.node);
  }

 private:
  void indent(int level) { out_ << std::string(2 * level, ' '); }

  void type(const TypeRef& t) { out_ << to_string(t.type); }

  void params(const std::vector<Param>& ps) {
    out_ << "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) out_ << ", ";
      if (ps[i].mode == ParamMode::kRef) out_ << "ref ";
      if (ps[i].mode == ParamMode::kConstRef) out_ << "constref ";
      type(ps[i].type);
      out_ << " " << ps[i].name;
    }
    out_ << ")";
  }

  void args(const ExprList& as) {
    out_ << "(";
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (i) out_ << ", ";
      expr(*as[i]);
    }
    out_ << ")";
  }

  void block(const Block& b, int level) {
    out_ << "{\n";
    for (const Stmt& s : b) stmt(s, level + 1);
    indent(level);
    out_ << "}";
  }

  void decl(const FunDecl& fn) {
    type(fn.return_type);
    out_ << " " << fn.name;
    params(fn.params);
    out_ << " ";
    block(fn.body, 0);
    out_ << "\n";
  }

  void decl(const ClassDecl& cls) {
    if (cls.exported) out_ << "export ";
    out_ << "class " << cls.name;
    if (cls.base) out_ << " : " << *cls.base;
    out_ << " {\n";
    std::optional<Visibility> current;
    auto label = [&](Visibility v) {
      if (current == v) return;
      current = v;
      indent(1);
      out_ << (v == Visibility::kPublic ? "public:" : "private:") << "\n";
    };
    for (const FieldDecl& f : cls.fields) {
      label(f.visibility);
      indent(2);
      type(f.type);
      out_ << " " << f.name << ";\n";
    }
    for (const MethodDecl& m : cls.methods) {
      label(m.visibility);
      indent(2);
      if (m.is_virtual) out_ << "virtual ";
      type(m.return_type);
      out_ << " " << m.name;
      params(m.params);
      out_ << " ";
      block(m.body, 2);
      out_ << "\n";
    }
    for (const CtorDecl& c : cls.ctors) {
      indent(1);
      out_ << cls.name;
      params(c.params);
      bool first = true;
      auto sep = [&] {
        out_ << (first ? " : " : ", ");
        first = false;
      };
      if (c.base_init) {
        sep();
        out_ << c.base_init->class_name;
        args(c.base_init->args);
      }
      for (const FieldInit& fi : c.field_inits) {
        sep();
        out_ << fi.field << "(";
        expr(*fi.value);
        out_ << ")";
      }
      out_ << " ";
      block(c.body, 1);
      out_ << "\n";
    }
    for (const FriendDecl& f : cls.friends) {
      indent(1);
      out_ << "friend " << f.name << ";\n";
    }
    out_ << "}\n";
  }

  void stmt(const Stmt& s, int level) {
    indent(level);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            out_ << "let " << n.name << " = ";
            expr(*n.init);
            out_ << ";";
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            expr(*n.target);
            out_ << " = ";
            expr(*n.value);
            out_ << ";";
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            out_ << "if (";
            expr(*n.cond);
            out_ << ") ";
            block(n.then_block, level);
            if (n.else_block) {
              out_ << " else ";
              block(*n.else_block, level);
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            out_ << "while (";
            expr(*n.cond);
            out_ << ") ";
            block(n.body, level);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            out_ << "return";
            if (n.value) {
              out_ << " ";
              expr(*n.value);
            }
            out_ << ";";
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            out_ << "assert(";
            expr(*n.cond);
            out_ << ");";
          } else {
            expr(*n.expr);
            out_ << ";";
          }
        },
        s.node);
    out_ << "\n";
  }

  void node(const IntLit& n, int) { out_ << n.value; }
  void node(const BoolLit& n, int) { out_ << (n.value ? "true" : "false"); }
  void node(const NilLit&, int) { out_ << "nil"; }
  void node(const VarRef& n, int) { out_ << n.name; }

  void node(const FieldAccess& n, int) {
    expr(*n.object, kPrecPostfix);
    out_ << "." << n.field;
  }

  void node(const MethodCall& n, int) {
    if (n.qualifier) {
      out_ << *n.qualifier << "::";
    } else if (n.receiver) {
      expr(*n.receiver, kPrecPostfix);
      out_ << ".";
    }
    out_ << n.method;
    args(n.args);
  }

  void node(const FunCall& n, int) {
    out_ << n.name;
    args(n.args);
  }

  void node(const NewObject& n, int) {
    out_ << "new " << n.class_name;
    args(n.args);
  }

  void node(const BuiltinCall& n, int) {
    out_ << to_string(n.op);
    args(n.args);
  }

  void node(const Binary& n, int min_prec) {
    const int p = precedence(n.op);
    const bool parens = p < min_prec;
    if (parens) out_ << "(";
    expr(*n.lhs, p);
    out_ << " " << to_string(n.op) << " ";
    expr(*n.rhs, p + 1);
    if (parens) out_ << ")";
  }

  void node(const Unary& n, int min_prec) {
    const bool parens = kPrecUnary < min_prec;
    if (parens) out_ << "(";
    out_ << to_string(n.op);
    expr(*n.operand, kPrecUnary);
    if (parens) out_ << ")";
  }

  std::ostringstream out_;
};

// Structural comparison ----------------------------------------------------

bool eq(const Expr& a, const Expr& b);

bool eq(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return eq(*a, *b);
}

bool eq(const ExprList& a, const ExprList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

bool eq_node(const IntLit& a, const IntLit& b) { return a.value == b.value; }
bool eq_node(const BoolLit& a, const BoolLit& b) { return a.value == b.value; }
bool eq_node(const NilLit&, const NilLit&) { return true; }
bool eq_node(const VarRef& a, const VarRef& b) { return a.name == b.name; }
bool eq_node(const FieldAccess& a, const FieldAccess& b) {
  return a.field == b.field && eq(a.object, b.object);
}
bool eq_node(const MethodCall& a, const MethodCall& b) {
  return a.method == b.method && a.qualifier == b.qualifier &&
         eq(a.receiver, b.receiver) && eq(a.args, b.args);
}
bool eq_node(const FunCall& a, const FunCall& b) {
  return a.name == b.name && eq(a.args, b.args);
}
bool eq_node(const NewObject& a, const NewObject& b) {
  return a.class_name == b.class_name && eq(a.args, b.args);
}
bool eq_node(const BuiltinCall& a, const BuiltinCall& b) {
  return a.op == b.op && eq(a.args, b.args);
}
bool eq_node(const Binary& a, const Binary& b) {
  return a.op == b.op && eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs);
}
bool eq_node(const Unary& a, const Unary& b) {
  return a.op == b.op && eq(a.operand, b.operand);
}

bool eq(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        return eq_node(na, std::get<T>(b.node));
      },
      a.node);
}

bool eq(const Block& a, const Block& b);

bool eq_stmt(const LetStmt& a, const LetStmt& b) {
  return a.name == b.name && eq(a.init, b.init);
}
bool eq_stmt(const AssignStmt& a, const AssignStmt& b) {
  return eq(a.target, b.target) && eq(a.value, b.value);
}
bool eq_stmt(const IfStmt& a, const IfStmt& b) {
  if (a.else_block.has_value() != b.else_block.has_value()) return false;
  return eq(a.cond, b.cond) && eq(a.then_block, b.then_block) &&
         (!a.else_block || eq(*a.else_block, *b.else_block));
}
bool eq_stmt(const WhileStmt& a, const WhileStmt& b) {
  return eq(a.cond, b.cond) && eq(a.body, b.body);
}
bool eq_stmt(const ReturnStmt& a, const ReturnStmt& b) {
  return eq(a.value, b.value);
}
bool eq_stmt(const AssertStmt& a, const AssertStmt& b) {
  return eq(a.cond, b.cond);
}
bool eq_stmt(const ExprStmt& a, const ExprStmt& b) {
  return eq(a.expr, b.expr);
}

bool eq(const Block& a, const Block& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].node.index() != b[i].node.index()) return false;
    const bool same = std::visit(
        [&](const auto& sa) {
          using T = std::decay_t<decltype(sa)>;
          return eq_stmt(sa, std::get<T>(b[i].node));
        },
        a[i].node);
    if (!same) return false;
  }
  return true;
}

bool eq(const std::vector<Param>& a, const std::vector<Param>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].mode != b[i].mode ||
        a[i].type.type != b[i].type.type) {
      return false;
    }
  }
  return true;
}

bool eq_decl(const FunDecl& a, const FunDecl& b) {
  return a.name == b.name && a.return_type.type == b.return_type.type &&
         eq(a.params, b.params) && eq(a.body, b.body);
}

bool eq_decl(const ClassDecl& a, const ClassDecl& b) {
  if (a.name != b.name || a.exported != b.exported || a.base != b.base ||
      a.fields.size() != b.fields.size() ||
      a.methods.size() != b.methods.size() ||
      a.ctors.size() != b.ctors.size() ||
      a.friends.size() != b.friends.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.fields.size(); ++i) {
    const FieldDecl& x = a.fields[i];
    const FieldDecl& y = b.fields[i];
    if (x.name != y.name || x.visibility != y.visibility ||
        x.type.type != y.type.type) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    const MethodDecl& x = a.methods[i];
    const MethodDecl& y = b.methods[i];
    if (x.name != y.name || x.is_virtual != y.is_virtual ||
        x.visibility != y.visibility ||
        x.return_type.type != y.return_type.type || !eq(x.params, y.params) ||
        !eq(x.body, y.body)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.ctors.size(); ++i) {
    const CtorDecl& x = a.ctors[i];
    const CtorDecl& y = b.ctors[i];
    if (!eq(x.params, y.params) || !eq(x.body, y.body) ||
        x.base_init.has_value() != y.base_init.has_value() ||
        x.field_inits.size() != y.field_inits.size()) {
      return false;
    }
    if (x.base_init && (x.base_init->class_name != y.base_init->class_name ||
                        !eq(x.base_init->args, y.base_init->args))) {
      return false;
    }
    for (std::size_t j = 0; j < x.field_inits.size(); ++j) {
      if (x.field_inits[j].field != y.field_inits[j].field ||
          !eq(x.field_inits[j].value, y.field_inits[j].value)) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.friends.size(); ++i) {
    if (a.friends[i].name != b.friends[i].name) return false;
  }
  return true;
}

}  // namespace

std::string pretty_print(const Program& program) {
  Printer p;
  p.program(program);
  return p.str();
}

std::string pretty_print(const Expr& expr) {
  Printer p;
  p.expr(expr);
  return p.str();
}

bool structurally_equal(const Expr& a, const Expr& b) { return eq(a, b); }

bool structurally_equal(const Program& a, const Program& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (a.decls[i].index() != b.decls[i].index()) return false;
    const bool same = std::visit(
        [&](const auto& da) {
          using T = std::decay_t<decltype(da)>;
          return eq_decl(da, std::get<T>(b.decls[i]));
        },
        a.decls[i]);
    if (!same) return false;
  }
  return true;
}

}  // namespace minioo
