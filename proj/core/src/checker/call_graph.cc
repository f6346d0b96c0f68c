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

#include "minioo/checker/call_graph.h"

#include <algorithm>

#include "minioo/frontend/visit.h"

namespace minioo {

const std::vector<Param>& Callable::params() const {
  switch (kind) {
    case CallableKind::kFunction: return function->params;
    case CallableKind::kMethod: return method->params;
    case CallableKind::kCtor: return ctor->params;
  }
  return function->params;
}

const Block& Callable::body() const {
  switch (kind) {
    case CallableKind::kFunction: return function->body;
    case CallableKind::kMethod: return method->body;
    case CallableKind::kCtor: return ctor->body;
  }
  return function->body;
}

const Span& Callable::span() const {
  switch (kind) {
    case CallableKind::kFunction: return function->span;
    case CallableKind::kMethod: return method->span;
    case CallableKind::kCtor: return ctor->span;
  }
  return function->span;
}

int CallGraph::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& CallGraph::targets(const void* site) const {
  static const std::vector<int> kNone;
  auto it = sites_.find(site);
  return it == sites_.end() ? kNone : it->second;
}

std::vector<std::pair<std::string, std::string>> CallGraph::edge_keys()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [from, to] : edges_) {
    out.emplace_back(nodes_[from].key, nodes_[to].key);
  }
  return out;
}

namespace {

std::string function_key(const std::string& name, std::size_t arity) {
  return name + "/" + std::to_string(arity);
}

std::string ctor_key(const std::string& cls, int index) {
  return cls + "::" + cls + "#" + std::to_string(index);
}

}  // namespace

CallGraph build_call_graph(const ResolvedProgram& program) {
  CallGraph g;
  auto add = [&](Callable c) {
    g.index_[c.key] = static_cast<int>(g.nodes_.size());
    g.nodes_.push_back(std::move(c));
  };
  for (const Decl& decl : program.program().decls) {
    if (const auto* fn = std::get_if<FunDecl>(&decl)) {
      Callable c{CallableKind::kFunction,
                 function_key(fn->name, fn->params.size()), fn->name};
      c.function = fn;
      add(std::move(c));
      continue;
    }
    const auto& cls = std::get<ClassDecl>(decl);
    const ClassInfo* info = program.find_class(cls.name);
    for (const MethodDecl& m : cls.methods) {
      Callable c{CallableKind::kMethod, cls.name + "::" + m.name,
                 cls.name + "::" + m.name};
      c.cls = info;
      c.method = &m;
      add(std::move(c));
    }
    for (std::size_t i = 0; i < cls.ctors.size(); ++i) {
      Callable c{CallableKind::kCtor, ctor_key(cls.name, static_cast<int>(i)),
                 cls.name + "::" + cls.name};
      c.cls = info;
      c.ctor = &cls.ctors[i];
      add(std::move(c));
    }
  }

  auto site_targets = [&](const Expr& e) -> std::vector<int> {
    std::vector<int> out;
    auto push = [&](const std::string& key) {
      int n = g.find(key);
      if (n >= 0 && std::find(out.begin(), out.end(), n) == out.end()) {
        out.push_back(n);
      }
    };
    if (const auto* mc = e.as<MethodCall>()) {
      push(mc->owner_class + "::" + mc->method);
      if (mc->is_virtual) {
        for (const MethodRef& r : program.overrides_below(
                 program.find_class(mc->static_class), mc->method)) {
          push(r.owner->name() + "::" + mc->method);
        }
      }
    } else if (const auto* fc = e.as<FunCall>()) {
      if (fc->kind == CallKind::kFunction) {
        push(function_key(fc->name, fc->args.size()));
      }
    } else if (const auto* nw = e.as<NewObject>()) {
      if (nw->ctor_index >= 0) push(ctor_key(nw->class_name, nw->ctor_index));
    }
    return out;
  };

  std::vector<std::pair<int, int>> edges;
  for (std::size_t caller = 0; caller < g.nodes_.size(); ++caller) {
    const Callable& c = g.nodes_[caller];
    auto visit = [&](const Expr& e) {
      std::vector<int> t = site_targets(e);
      if (t.empty()) return;
      for (int callee : t) edges.emplace_back(static_cast<int>(caller), callee);
      g.sites_[&e] = std::move(t);
    };
    if (c.kind == CallableKind::kCtor) {
      if (c.ctor->base_init) {
        const BaseInit& b = *c.ctor->base_init;
        for (const ExprPtr& a : b.args) for_each_expr(*a, visit);
        if (b.ctor_index >= 0) {
          int callee = g.find(ctor_key(b.class_name, b.ctor_index));
          if (callee >= 0) {
            edges.emplace_back(static_cast<int>(caller), callee);
            g.sites_[&b] = {callee};
          }
        }
      }
      for (const FieldInit& fi : c.ctor->field_inits) {
        for_each_expr(*fi.value, visit);
      }
    }
    for_each_expr(c.body(), visit);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  return g;
}

}  // namespace minioo
