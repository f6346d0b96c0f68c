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

#include "minioo/frontend/parser.h"

#include <charconv>
#include <utility>

namespace minioo {
namespace {

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::kEnd) return "end of input";
  return "'" + tok.text + "'";
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::kEnd) {
      throw ParseError(Span{}, {"end of input"}, "missing end-of-input token");
    }
  }

  Program parse() {
    Program program;
    while (!at_end()) program.decls.push_back(parse_decl());
    return program;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = std::min(pos_ + k, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::kEnd; }
  const Token& next() {
    const Token& tok = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return tok;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, std::move(expected), describe(peek()));
  }

  bool accept_punct(std::string_view p) {
    if (!peek().is_punct(p)) return false;
    next();
    return true;
  }
  bool accept_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) return false;
    next();
    return true;
  }
  const Token& expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) fail({"'" + std::string(p) + "'"});
    return next();
  }
  const Token& expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) fail({"'" + std::string(k) + "'"});
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != TokenKind::kIdentifier) fail({"identifier"});
    return next();
  }

  bool at_type() const {
    const Token& t = peek();
    return t.kind == TokenKind::kIdentifier || t.is_keyword("int") ||
           t.is_keyword("bool") || t.is_keyword("unit") ||
           t.is_keyword("list");
  }

  TypeRef parse_type() {
    const Token& t = peek();
    if (t.is_keyword("int")) return {Type::Int(), next().span};
    if (t.is_keyword("bool")) return {Type::Bool(), next().span};
    if (t.is_keyword("unit")) return {Type::Unit(), next().span};
    if (t.is_keyword("list")) return {Type::List(), next().span};
    if (t.kind == TokenKind::kIdentifier) {
      return {Type::Class(t.text), next().span};
    }
    fail({"type"});
  }

  Decl parse_decl() {
    if (peek().is_keyword("export") || peek().is_keyword("class")) {
      return parse_class();
    }
    if (!at_type()) fail({"'class'", "'export'", "type"});
    return parse_function();
  }

  ClassDecl parse_class() {
    ClassDecl cls;
    cls.exported = accept_keyword("export");
    expect_keyword("class");
    const Token& name = expect_ident();
    cls.name = name.text;
    cls.span = name.span;
    if (accept_punct(":")) {
      const Token& base = expect_ident();
      cls.base = base.text;
      cls.base_span = base.span;
    }
    expect_punct("{");
    Visibility vis = Visibility::kPrivate;
    while (!peek().is_punct("}")) {
      if (peek().is_keyword("public") || peek().is_keyword("private")) {
        vis = next().text == "public" ? Visibility::kPublic
                                      : Visibility::kPrivate;
        expect_punct(":");
        continue;
      }
      if (accept_keyword("friend")) {
        const Token& f = expect_ident();
        cls.friends.push_back({f.text, f.span});
        expect_punct(";");
        continue;
      }
      if (peek().kind == TokenKind::kIdentifier && peek().text == cls.name &&
          peek(1).is_punct("(")) {
        cls.ctors.push_back(parse_ctor(cls));
        continue;
      }
      if (!at_type() && !peek().is_keyword("virtual")) {
        fail({"'}'", "'public'", "'private'", "'friend'", "'virtual'",
              "constructor", "type"});
      }
      std::optional<Span> virtual_span;
      if (peek().is_keyword("virtual")) virtual_span = next().span;
      TypeRef type = parse_type();
      const Token& member = expect_ident();
      if (peek().is_punct("(")) {
        MethodDecl m;
        m.name = member.text;
        m.span = member.span;
        m.return_type = std::move(type);
        m.is_virtual = virtual_span.has_value();
        m.virtual_span = virtual_span;
        m.visibility = vis;
        m.params = parse_params();
        m.body = parse_block();
        cls.methods.push_back(std::move(m));
      } else {
        if (virtual_span) {
          throw ParseError(*virtual_span, {"method"}, "'virtual' on a field");
        }
        expect_punct(";");
        cls.fields.push_back({member.text, std::move(type), vis, member.span});
      }
    }
    expect_punct("}");
    return cls;
  }

  CtorDecl parse_ctor(const ClassDecl& cls) {
    CtorDecl ctor;
    ctor.span = next().span;
    ctor.params = parse_params();
    if (accept_punct(":")) {
      bool first = true;
      do {
        const Token& name = expect_ident();
        const Span open = expect_punct("(").span;
        ExprList args = parse_args_after_open();
        if (cls.base && name.text == *cls.base) {
          if (!first) {
            throw ParseError(name.span, {"field initializer"},
                             "base initializer after field initializers");
          }
          ctor.base_init = BaseInit{name.text, std::move(args), name.span, -1};
        } else {
          if (args.size() != 1) {
            throw ParseError(open, {"exactly one initializer expression"},
                             std::to_string(args.size()) + " arguments");
          }
          ctor.field_inits.push_back(
              FieldInit{name.text, std::move(args[0]), name.span});
        }
        first = false;
      } while (accept_punct(","));
    }
    ctor.body = parse_block();
    return ctor;
  }

  FunDecl parse_function() {
    FunDecl fn;
    fn.return_type = parse_type();
    const Token& name = expect_ident();
    fn.name = name.text;
    fn.span = name.span;
    fn.params = parse_params();
    fn.body = parse_block();
    return fn;
  }

  std::vector<Param> parse_params() {
    expect_punct("(");
    std::vector<Param> params;
    if (accept_punct(")")) return params;
    do {
      Param p;
      if (accept_keyword("ref")) {
        p.mode = ParamMode::kRef;
      } else if (accept_keyword("constref")) {
        p.mode = ParamMode::kConstRef;
      }
      if (!at_type()) fail({"'ref'", "'constref'", "type"});
      p.type = parse_type();
      const Token& name = expect_ident();
      p.name = name.text;
      p.span = name.span;
      params.push_back(std::move(p));
    } while (accept_punct(","));
    expect_punct(")");
    return params;
  }

  Block parse_block() {
    expect_punct("{");
    Block block;
    while (!peek().is_punct("}")) {
      if (at_end()) fail({"'}'"});
      block.push_back(parse_stmt());
    }
    next();
    return block;
  }

  Stmt parse_stmt() {
    const Token& first = peek();
    const Span span = first.span;
    if (accept_keyword("let")) {
      const Token& name = expect_ident();
      expect_punct("=");
      ExprPtr init = parse_expr();
      expect_punct(";");
      return {span, LetStmt{name.text, std::move(init)}};
    }
    if (accept_keyword("if")) {
      expect_punct("(");
      ExprPtr cond = parse_expr();
      expect_punct(")");
      Block then_block = parse_block();
      std::optional<Block> else_block;
      if (accept_keyword("else")) else_block = parse_block();
      return {span, IfStmt{std::move(cond), std::move(then_block),
                           std::move(else_block)}};
    }
    if (accept_keyword("while")) {
      expect_punct("(");
      ExprPtr cond = parse_expr();
      expect_punct(")");
      return {span, WhileStmt{std::move(cond), parse_block()}};
    }
    if (accept_keyword("return")) {
      ExprPtr value;
      if (!peek().is_punct(";")) value = parse_expr();
      expect_punct(";");
      return {span, ReturnStmt{std::move(value)}};
    }
    if (accept_keyword("assert")) {
      expect_punct("(");
      ExprPtr cond = parse_expr();
      expect_punct(")");
      expect_punct(";");
      return {span, AssertStmt{std::move(cond)}};
    }
    ExprPtr expr = parse_expr();
    if (peek().is_punct("=")) {
      const Span eq = next().span;
      if (!expr->as<VarRef>() && !expr->as<FieldAccess>()) {
        throw ParseError(expr->span, {"variable", "field access"},
                         "non-lvalue assignment target");
      }
      ExprPtr value = parse_expr();
      expect_punct(";");
      return {eq, AssignStmt{std::move(expr), std::move(value)}};
    }
    expect_punct(";");
    return {span, ExprStmt{std::move(expr)}};
  }

  // Expressions, lowest precedence first.

  ExprPtr parse_expr() { return parse_or(); }

  template <typename Next>
  ExprPtr parse_left_assoc(
      Next next_level,
      std::initializer_list<std::pair<std::string_view, BinaryOp>> ops) {
    ExprPtr lhs = (this->*next_level)();
    for (;;) {
      const BinaryOp* found = nullptr;
      for (const auto& [text, op] : ops) {
        if (peek().is_punct(text)) {
          found = &op;
          break;
        }
      }
      if (!found) return lhs;
      const Span span = next().span;
      ExprPtr rhs = (this->*next_level)();
      lhs = make_expr(span, Binary{*found, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr parse_or() {
    return parse_left_assoc(&Parser::parse_and, {{"||", BinaryOp::kOr}});
  }
  ExprPtr parse_and() {
    return parse_left_assoc(&Parser::parse_eq, {{"&&", BinaryOp::kAnd}});
  }
  ExprPtr parse_eq() {
    return parse_left_assoc(&Parser::parse_rel, {{"==", BinaryOp::kEq},
                                                 {"!=", BinaryOp::kNe}});
  }
  ExprPtr parse_rel() {
    return parse_left_assoc(&Parser::parse_add,
                            {{"<=", BinaryOp::kLe},
                             {">=", BinaryOp::kGe},
                             {"<", BinaryOp::kLt},
                             {">", BinaryOp::kGt}});
  }
  ExprPtr parse_add() {
    return parse_left_assoc(&Parser::parse_mul, {{"+", BinaryOp::kAdd},
                                                 {"-", BinaryOp::kSub}});
  }
  ExprPtr parse_mul() {
    return parse_left_assoc(&Parser::parse_unary, {{"*", BinaryOp::kMul},
                                                   {"/", BinaryOp::kDiv},
                                                   {"%", BinaryOp::kMod}});
  }

  ExprPtr parse_unary() {
    if (peek().is_punct("!") || peek().is_punct("-")) {
      const Token& op = next();
      const UnaryOp kind = op.text == "!" ? UnaryOp::kNot : UnaryOp::kNeg;
      const Span span = op.span;
      return make_expr(span, Unary{kind, parse_unary()});
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr expr = parse_primary();
    while (peek().is_punct(".")) {
      next();
      const Token& name = expect_ident();
      if (accept_punct("(")) {
        MethodCall call;
        call.receiver = std::move(expr);
        call.method = name.text;
        call.args = parse_args_after_open();
        expr = make_expr(name.span, std::move(call));
      } else {
        FieldAccess access;
        access.object = std::move(expr);
        access.field = name.text;
        access.field_span = name.span;
        expr = make_expr(name.span, std::move(access));
      }
    }
    return expr;
  }

  // Parses `args? ")"` after an already consumed "(".
  ExprList parse_args_after_open() {
    ExprList args;
    if (accept_punct(")")) return args;
    do {
      args.push_back(parse_expr());
    } while (accept_punct(","));
    expect_punct(")");
    return args;
  }

  ExprPtr parse_primary() {
    const Token& tok = peek();
    const Span span = tok.span;
    switch (tok.kind) {
      case TokenKind::kIntLiteral: {
        std::int64_t value = 0;
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                        value);
        next();
        return make_expr(span, IntLit{value});
      }
      case TokenKind::kIdentifier: {
        std::string name = next().text;
        if (accept_punct("::")) {
          const Token& method = expect_ident();
          expect_punct("(");
          MethodCall call;
          call.qualifier = std::move(name);
          call.method = method.text;
          call.args = parse_args_after_open();
          return make_expr(span, std::move(call));
        }
        if (accept_punct("(")) {
          FunCall call;
          call.name = std::move(name);
          call.args = parse_args_after_open();
          return make_expr(span, std::move(call));
        }
        VarRef var;
        var.name = std::move(name);
        return make_expr(span, std::move(var));
      }
      case TokenKind::kKeyword: {
        if (accept_keyword("true")) return make_expr(span, BoolLit{true});
        if (accept_keyword("false")) return make_expr(span, BoolLit{false});
        if (accept_keyword("nil")) return make_expr(span, NilLit{});
        if (accept_keyword("new")) {
          const Token& cls = expect_ident();
          expect_punct("(");
          NewObject obj;
          obj.class_name = cls.text;
          obj.args = parse_args_after_open();
          return make_expr(span, std::move(obj));
        }
        static constexpr std::pair<std::string_view, BuiltinOp> kBuiltins[] =
            {{"cons", BuiltinOp::kCons},
             {"head", BuiltinOp::kHead},
             {"tail", BuiltinOp::kTail},
             {"is_nil", BuiltinOp::kIsNil}};
        for (const auto& [text, op] : kBuiltins) {
          if (!tok.is_keyword(text)) continue;
          next();
          const Span open = expect_punct("(").span;
          ExprList args = parse_args_after_open();
          const std::size_t want = op == BuiltinOp::kCons ? 2 : 1;
          if (args.size() != want) {
            throw ParseError(open,
                             {std::to_string(want) + " argument(s) to " +
                              std::string(text)},
                             std::to_string(args.size()) + " argument(s)");
          }
          return make_expr(span, BuiltinCall{op, std::move(args)});
        }
        break;
      }
      case TokenKind::kPunct:
        if (accept_punct("(")) {
          ExprPtr inner = parse_expr();
          expect_punct(")");
          return inner;
        }
        break;
      default:
        break;
    }
    fail({"expression"});
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(Span span, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error(to_string(span) + ": parse error: expected " +
                         join_expected(expected) + ", found " + found),
      span_(std::move(span)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Program parse_program(std::span<const Token> tokens) {
  return Parser(tokens).parse();
}

Program parse_source(std::string_view source, std::string_view file) {
  const std::vector<Token> tokens = tokenize(source, file);
  return parse_program(tokens);
}

}  // namespace minioo
