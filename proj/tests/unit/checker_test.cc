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

#include <algorithm>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "corpus.h"
#include "json.hpp"
#include "minioo/checker/call_graph.h"
#include "minioo/checker/mutation.h"
#include "minioo/checker/report.h"
#include "minioo/checker/rules.h"
#include "minioo/frontend/source.h"

namespace minioo {
namespace {

using testing::load_corpus;

ResolvedProgram load_text(const std::string& text) {
  LoadResult r = load_program({{"t.moo", text}});
  if (!r.ok()) throw std::runtime_error(r.errors.front());
  return std::move(*r.program);
}

int count_rule(const std::vector<Diagnostic>& diags, RuleId rule) {
  return static_cast<int>(std::count_if(
      diags.begin(), diags.end(),
      [&](const Diagnostic& d) { return d.rule == rule; }));
}

// Source text at a diagnostic's span.
std::string text_at(const Span& span) {
  std::ifstream in(testing::corpus_dir() + "/" + span.file);
  std::string line;
  for (int i = 0; i < span.line; ++i) std::getline(in, line);
  return line.substr(static_cast<std::size_t>(span.col - 1),
                     static_cast<std::size_t>(span.length));
}

ResolvedProgram corpus(const std::vector<std::string>& files) {
  // Spans then read "src/NAME", which text_at resolves.
  return load_corpus(files);
}

std::set<int> summary_of(const ResolvedProgram& p, const std::string& key) {
  CallGraph g = build_call_graph(p);
  MutationSummary s = mutation_summaries(p, g);
  const int node = g.find(key);
  EXPECT_GE(node, 0) << key;
  return node < 0 ? std::set<int>{} : s.of(node);
}

TEST(RuleR1, CbagHasThreeVirtualMethods) {
  auto diags = check_r1(corpus({"cbag.moo"}));
  ASSERT_EQ(diags.size(), 3u);
  for (const Diagnostic& d : diags) {
    EXPECT_EQ(d.rule, RuleId::kR1NoVirtual);
    EXPECT_EQ(text_at(d.span), "virtual");
  }
  EXPECT_EQ(diags[0].subject, "CBag::put");
}

TEST(RuleR1, FbagHasNone) { EXPECT_TRUE(check_r1(corpus({"fbag.moo"})).empty()); }

TEST(RuleR1, EmptyProgram) { EXPECT_TRUE(check_r1(load_text("")).empty()); }

TEST(RuleR2, CbagPublishesFiveMethods) {
  auto diags = check_r2(corpus({"cbag.moo"}));
  ASSERT_EQ(diags.size(), 5u);
  std::vector<std::string> names;
  for (const Diagnostic& d : diags) names.push_back(text_at(d.span));
  EXPECT_EQ(names, (std::vector<std::string>{"size", "count", "put", "del",
                                             "clone"}));
}

TEST(RuleR2, FbagPublishesOnlyConstructors) {
  EXPECT_TRUE(check_r2(corpus({"fbag.moo"})).empty());
}

TEST(RuleR2, NonExportedClassIsUnconstrained) {
  EXPECT_TRUE(check_r2(load_text("class A { public: int x; A() : x(0) {} }"))
                  .empty());
}

TEST(RuleR2, ExportedPublicFieldIsReported) {
  auto diags =
      check_r2(load_text("export class A { public: int x; A() : x(0) {} }"));
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].span.col, 30);
}

TEST(RuleR3Strict, CbagPutAssignsItsList) {
  auto diags = check_r3_strict(corpus({"cbag.moo", "cset.moo"}));
  auto put = std::find_if(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.subject == "CBag::put";
  });
  ASSERT_NE(put, diags.end());
  EXPECT_EQ(text_at(put->span), "=");
}

TEST(RuleR3Strict, FunctionalPackagesHaveNoAssignments) {
  EXPECT_TRUE(check_r3_strict(corpus({"fbag.moo", "fset.moo"})).empty());
}

TEST(RuleR3Strict, LetIsNotAnAssignment) {
  EXPECT_TRUE(
      check_r3_strict(load_text("int f() { let x = 5; return x; }")).empty());
}

TEST(RuleR3Strict, InitializerListIsNotAnAssignment) {
  EXPECT_TRUE(
      check_r3_strict(load_text("class A { public: int x; A() : x(0) {} }"))
          .empty());
}

TEST(RuleR3Strict, LocalRebindingCounts) {
  EXPECT_EQ(
      check_r3_strict(load_text("int f() { let x = 5; x = 6; return x; }"))
          .size(),
      1u);
}

TEST(CallGraph, VirtualFanOut) {
  ResolvedProgram p = corpus({"cbag.moo", "cset.moo"});
  CallGraph g = build_call_graph(p);
  auto edges = g.edge_keys();
  auto has = [&](const std::string& a, const std::string& b) {
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) !=
           edges.end();
  };
  EXPECT_TRUE(has("foo2/3", "merge_into/2"));
  EXPECT_TRUE(has("merge_into/2", "CBag::put"));
  EXPECT_TRUE(has("merge_into/2", "CSet::put"));
  EXPECT_TRUE(has("CSet::put", "CBag::put"));
}

TEST(CallGraph, NoCallsNoEdges) {
  CallGraph g = build_call_graph(load_text("int f() { return 1; }"));
  EXPECT_EQ(g.nodes().size(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(CallGraph, RecursionIsASelfEdge) {
  CallGraph g = build_call_graph(
      load_text("int f(int n) { if (n > 0) { return f(n - 1); } return 0; }"));
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], std::make_pair(0, 0));
}

TEST(CallGraph, EdgesAreSortedAndUnique) {
  CallGraph g = build_call_graph(corpus({"cbag.moo", "cset.moo"}));
  auto edges = g.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  EXPECT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
}

TEST(Mutation, MergeIntoMarksTarget) {
  EXPECT_EQ(summary_of(corpus({"cbag.moo", "cset.moo"}), "merge_into/2"),
            std::set<int>{0});
}

TEST(Mutation, ReceiverOfPutIsMarked) {
  ResolvedProgram p = corpus({"cbag.moo", "cset.moo"});
  EXPECT_EQ(summary_of(p, "CBag::put"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "CSet::put"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "CBag::count"), std::set<int>{});
}

TEST(Mutation, FooKeepsArgumentsIntact) {
  ResolvedProgram p = corpus({"cbag.moo", "cset.moo"});
  EXPECT_TRUE(summary_of(p, "foo1/3").empty());
  EXPECT_TRUE(summary_of(p, "foo2/3").empty());
}

TEST(Mutation, PureFbagFunctions) {
  ResolvedProgram p = corpus({"fbag.moo"});
  for (const char* key : {"size/1", "count/2", "put/2", "del/2", "merge/2"}) {
    EXPECT_TRUE(summary_of(p, key).empty()) << key;
  }
}

TEST(Mutation, RecursiveCycleReachesFixpoint) {
  ResolvedProgram p = load_text(
      "class C { public: int v; C() : v(0) {} }\n"
      "unit a(C x, int n) { if (n > 0) { b(x, n - 1); } }\n"
      "unit b(C x, int n) { if (n > 0) { c(x, n - 1); } else { x.v = 1; } }\n"
      "unit c(C x, int n) { a(x, n); }\n"
      "unit d(C x, C y) { a(y, 3); }\n");
  EXPECT_EQ(summary_of(p, "a/2"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "b/2"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "c/2"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "d/2"), std::set<int>{1});
}

TEST(Mutation, AliasThroughLocalAndField) {
  ResolvedProgram p = load_text(
      "class N { public: int v; N next; N(int a) : v(a), next(this) {} }\n"
      "unit f(N a, N b) { let t = a; t.next.v = 2; }\n"
      "unit g(N a, N b) { a.next = b; a.next.v = 3; }\n");
  EXPECT_EQ(summary_of(p, "f/2"), std::set<int>{0});
  EXPECT_EQ(summary_of(p, "g/2"), (std::set<int>{0, 1}));
}

TEST(Mutation, RefParameterRebindingMarksIt) {
  ResolvedProgram p = load_text(
      "class N { public: int v; N(int a) : v(a) {} }\n"
      "unit swap_in(ref N r, N other) { r = other; }\n"
      "unit poke(N a, N b) { let t = a; swap_in(t, b); t.v = 1; }\n");
  EXPECT_EQ(summary_of(p, "swap_in/2"), std::set<int>{0});
  // t may hold b after the call, so both arguments are reachable from t.
  EXPECT_EQ(summary_of(p, "poke/2"), (std::set<int>{0, 1}));
}

TEST(Mutation, ValuePrimitivesAreNeverMarked) {
  ResolvedProgram p = load_text("int f(int n) { n = n + 1; return n; }");
  EXPECT_TRUE(summary_of(p, "f/1").empty());
}

TEST(Mutation, ReturnedAliasIsFollowed) {
  ResolvedProgram p = load_text(
      "class N { public: int v; N(int a) : v(a) {} }\n"
      "N same(N x) { return x; }\n"
      "unit h(N a) { same(a).v = 4; }\n");
  EXPECT_EQ(summary_of(p, "h/1"), std::set<int>{0});
  EXPECT_TRUE(summary_of(p, "same/1").empty());
}

TEST(RuleR3Relaxed, MergeIntoFlaggedFooNot) {
  auto diags = check_r3_relaxed(corpus({"cbag.moo", "cset.moo"}));
  auto flagged = [&](const std::string& subject) {
    return std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& d) {
      return d.subject == subject;
    });
  };
  EXPECT_TRUE(flagged("merge_into"));
  EXPECT_FALSE(flagged("foo1"));
  EXPECT_FALSE(flagged("foo2"));
}

TEST(RuleR3Relaxed, FbagFunctionsAreClean) {
  EXPECT_TRUE(check_r3_relaxed(corpus({"fbag.moo", "fset.moo"})).empty());
}

TEST(RuleR3Relaxed, LocalMutationIsPermitted) {
  ResolvedProgram p = load_text(
      "class N { public: int v; N(int a) : v(a) {} }\n"
      "int f(int k) { let n = new N(k); n.v = 2; return n.v; }\n");
  EXPECT_TRUE(check_r3_relaxed(p).empty());
  EXPECT_EQ(check_r3_strict(p).size(), 1u);
}

TEST(RuleR4, CoercingConstructorPasses) {
  EXPECT_TRUE(check_r4(corpus({"fbag.moo", "fset.moo"})).empty());
}

TEST(RuleR4, MissingBaseAndAssigningBody) {
  const std::string derived =
      "class D : B { public: int y; D() : y(1) { this.x = 2; } }";
  ResolvedProgram p =
      load_text("class B { public: int x; B() : x(0) {} }\n" + derived);
  auto diags = check_r4(p);
  ASSERT_EQ(diags.size(), 2u);
  for (const Diagnostic& d : diags) {
    EXPECT_EQ(d.span.line, 2);
    EXPECT_EQ(d.span.col, static_cast<int>(derived.find("D()")) + 1);
  }
}

TEST(RuleR4, BaseClassesAreNeverFlagged) {
  EXPECT_TRUE(
      check_r4(load_text("class B { public: int x; B() : x(0) { x = 1; } }"))
          .empty());
}

TEST(CheckAll, CbagCsetHitsR1R2R3S) {
  auto diags =
      check_all(corpus({"cbag.moo", "cset.moo"}), CheckConfig::all());
  EXPECT_GT(count_rule(diags, RuleId::kR1NoVirtual), 0);
  EXPECT_GT(count_rule(diags, RuleId::kR2OpaqueExports), 0);
  EXPECT_GT(count_rule(diags, RuleId::kR3SNoMutation), 0);
}

TEST(CheckAll, FbagFsetConforms) {
  EXPECT_TRUE(
      check_all(corpus({"fbag.moo", "fset.moo"}), CheckConfig::all()).empty());
  EXPECT_TRUE(check_all(corpus({"fbag.moo", "fset.moo"}),
                        CheckConfig::all(MutationForm::kRelaxed))
                  .empty());
}

TEST(CheckAll, ShapesBrulesConformsShapesOopDoesNot) {
  EXPECT_TRUE(
      check_all(corpus({"shapes_brules.moo"}), CheckConfig::all()).empty());
  EXPECT_GT(count_rule(check_all(corpus({"shapes_oop.moo"}), CheckConfig::all()),
                       RuleId::kR1NoVirtual),
            0);
}

TEST(CheckAll, NoRulesNoDiagnostics) {
  EXPECT_TRUE(
      check_all(corpus({"cbag.moo", "cset.moo"}), CheckConfig::none()).empty());
}

TEST(CheckAll, SortedByFileLineColRule) {
  auto diags = check_all(corpus({"cbag.moo", "cset.moo"}),
                         CheckConfig::all(MutationForm::kRelaxed));
  auto key = [](const Diagnostic& d) {
    return std::make_tuple(d.span.file, d.span.line, d.span.col,
                           std::string(to_string(d.rule)));
  };
  for (std::size_t i = 1; i < diags.size(); ++i) {
    EXPECT_LE(key(diags[i - 1]), key(diags[i]));
  }
}

TEST(CheckAll, Deterministic) {
  ResolvedProgram p = corpus({"cbag.moo", "cset.moo"});
  EXPECT_EQ(format_text(check_all(p, CheckConfig::all())),
            format_text(check_all(p, CheckConfig::all())));
}

TEST(CheckAll, MoreRulesNeverRemoveDiagnostics) {
  ResolvedProgram p = corpus({"cbag.moo", "cset.moo"});
  const std::string all = format_text(check_all(p, CheckConfig::all()));
  for (const char* flags : {"r1", "r2", "r3", "r4", "r1,r3", "r2,r4"}) {
    for (const Diagnostic& d :
         check_all(p, *CheckConfig::from_flags(flags, MutationForm::kStrict))) {
      EXPECT_NE(all.find(to_string(d)), std::string::npos) << flags;
    }
  }
}

TEST(Config, FlagParsing) {
  EXPECT_TRUE(CheckConfig::from_flags("all", MutationForm::kStrict));
  auto some = CheckConfig::from_flags("r1,r3", MutationForm::kRelaxed);
  ASSERT_TRUE(some);
  EXPECT_EQ(some->enabled(), (std::vector<RuleId>{RuleId::kR1NoVirtual,
                                                  RuleId::kR3RNoArgMutation}));
  EXPECT_FALSE(CheckConfig::from_flags("r5", MutationForm::kStrict));
  EXPECT_FALSE(CheckConfig::from_flags("", MutationForm::kStrict));
}

TEST(Report, TextLineFormat) {
  auto diags = check_r1(corpus({"cbag.moo"}));
  EXPECT_EQ(to_string(diags[0]),
            "src/cbag.moo:12:5: R1_NO_VIRTUAL: method 'CBag::put' is declared "
            "virtual");
}

TEST(Report, JsonDocument) {
  auto config = CheckConfig::all();
  auto diags = check_all(corpus({"cbag.moo", "cset.moo"}), config);
  auto doc = nlohmann::json::parse(format_json(diags, config));
  EXPECT_EQ(doc["version"], 1);
  EXPECT_EQ(doc["diagnostics"].size(), diags.size());
  EXPECT_EQ(doc["summary"]["violation_count"], diags.size());
  EXPECT_EQ(doc["summary"]["checked_rules"].size(), 4u);
  const auto& first = doc["diagnostics"][0];
  for (const char* field : {"rule", "file", "line", "col", "subject", "message"}) {
    EXPECT_TRUE(first.contains(field)) << field;
  }
}

}  // namespace
}  // namespace minioo
