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

#include <gtest/gtest.h>

#include "corpus.h"
#include "json.hpp"
#include "minioo/harness/diff.h"
#include "minioo/harness/iso.h"
#include "minioo/harness/property.h"
#include "minioo/harness/soundness.h"
#include "minioo/harness/suite.h"
#include "minioo/interp/interpreter.h"

namespace minioo {
namespace {

using testing::load_corpus;
using testing::load_corpus_with;
using testing::load_suite;

Value ints(const Multiset& xs) {
  std::vector<Value> items;
  for (std::int64_t x : xs) items.push_back(Value::Int(x));
  return Value::ListOf(items);
}

std::vector<std::string> failing(const SubstitutionReport& r) {
  std::vector<std::string> out;
  for (const SubstitutionCase& c : r.cases) {
    if (c.base.passed && !c.derived.passed) out.push_back(c.name);
  }
  return out;
}

TEST(Suite, ParsesDirectivesAndComments) {
  ContractSuite s = parse_suite(
      "# bag contracts\n\nbase CBag\nfactory make_cbag\n"
      "case fnb bag_fnb\n  case size bag_size_empty  \n");
  EXPECT_EQ(s.base_class, "CBag");
  EXPECT_EQ(s.factory, "make_cbag");
  ASSERT_EQ(s.cases.size(), 2u);
  EXPECT_EQ(s.cases[1].name, "size");
  EXPECT_EQ(s.cases[1].driver, "bag_size_empty");
}

TEST(Suite, MalformedSuites) {
  EXPECT_THROW(parse_suite("factory f\n"), SuiteError);
  EXPECT_THROW(parse_suite("base A\n"), SuiteError);
  EXPECT_THROW(parse_suite("base A\nfactory f\ncase x\n"), SuiteError);
  EXPECT_THROW(parse_suite("base A\nfactory f\nbogus y\n"), SuiteError);
  EXPECT_THROW(parse_suite("base A\nfactory f\ncase x d\ncase x e\n"),
               SuiteError);
  try {
    parse_suite("base A\nfactory f\nwhat\n");
  } catch (const SuiteError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(RunSuite, BagSuiteUnderCbagPasses) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  for (const CaseResult& r : run_suite(p, load_suite("bag.suite"), "make_cbag")) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.note;
  }
}

TEST(RunSuite, FbagSuiteUnderFbagPasses) {
  ResolvedProgram p = load_corpus({"fbag.moo", "fset.moo"});
  auto results = run_suite(p, load_suite("fbag.suite"), "make_fbag");
  EXPECT_EQ(results.size(), 8u);
  for (const CaseResult& r : results) EXPECT_TRUE(r.passed) << r.name;
}

TEST(RunSuite, EmptySuiteIsVacuous) {
  ResolvedProgram p = load_corpus({"fbag.moo", "fset.moo"});
  EXPECT_TRUE(run_suite(p, load_suite("empty.suite"), "make_fbag").empty());
}

TEST(RunSuite, RuntimeErrorBecomesAFailedCase) {
  ResolvedProgram p = load_corpus_with(
      {"fbag.moo"}, "bool boom(FBag b) { return head(nil) == 1; }\n");
  ContractSuite s = parse_suite("base FBag\nfactory make_fbag\ncase boom boom\n");
  auto results = run_suite(p, s, "make_fbag");
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_NE(results[0].note.find("runtime error"), std::string::npos);
}

TEST(RunSuite, FailedAssertionFailsTheCase) {
  ResolvedProgram p = load_corpus_with(
      {"fbag.moo"}, "bool sly(FBag b) { assert(false); return true; }\n");
  ContractSuite s = parse_suite("base FBag\nfactory make_fbag\ncase sly sly\n");
  EXPECT_FALSE(run_suite(p, s, "make_fbag")[0].passed);
}

TEST(RunSuite, UnknownDriverIsAConfigError) {
  ResolvedProgram p = load_corpus({"fbag.moo"});
  ContractSuite s = parse_suite("base FBag\nfactory make_fbag\ncase x nope\n");
  EXPECT_THROW(run_suite(p, s, "make_fbag"), ConfigError);
}

TEST(Substitution, CsetBreaksTheBagSuiteOnFnbOnly) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  SubstitutionReport r =
      substitution_test(p, load_suite("bag.suite"), "make_cset");
  EXPECT_FALSE(r.substitutable);
  EXPECT_EQ(failing(r), std::vector<std::string>{"fnb"});
}

TEST(Substitution, CbagBreaksTheSetSuiteOnFns) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  SubstitutionReport r =
      substitution_test(p, load_suite("set.suite"), "make_cbag");
  EXPECT_FALSE(r.substitutable);
  EXPECT_EQ(failing(r), std::vector<std::string>{"fns"});
}

TEST(Substitution, FsetIsAnFbag) {
  ResolvedProgram p = load_corpus({"fbag.moo", "fset.moo"});
  SubstitutionReport r =
      substitution_test(p, load_suite("fbag.suite"), "make_fset");
  EXPECT_TRUE(r.substitutable);
  for (const SubstitutionCase& c : r.cases) {
    EXPECT_TRUE(c.base.passed && c.derived.passed) << c.name;
  }
}

TEST(Substitution, ReflexiveFactoryGivesIdenticalResults) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  SubstitutionReport r =
      substitution_test(p, load_suite("bag.suite"), "make_cbag");
  EXPECT_TRUE(r.substitutable);
  for (const SubstitutionCase& c : r.cases) {
    EXPECT_EQ(c.base.passed, c.derived.passed);
    EXPECT_EQ(c.base.note, c.derived.note);
  }
}

TEST(Substitution, CaseOrderFollowsTheSuite) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  ContractSuite suite = load_suite("bag.suite");
  SubstitutionReport r = substitution_test(p, suite, "make_cset");
  ASSERT_EQ(r.cases.size(), suite.cases.size());
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    EXPECT_EQ(r.cases[i].name, suite.cases[i].name);
  }
}

TEST(Substitution, UnrelatedFactoryIsAConfigError) {
  ResolvedProgram p = load_corpus_with(
      {"fbag.moo"},
      "class Other { Other() {} }\nOther make_other() { return new Other(); }\n");
  EXPECT_THROW(substitution_test(p, load_suite("fbag.suite"), "make_other"),
               ConfigError);
}

TEST(Substitution, BaseFactoryOfWrongClassIsAConfigError) {
  ResolvedProgram p = load_corpus({"fbag.moo", "fset.moo"});
  ContractSuite s = load_suite("fbag.suite");
  s.factory = "make_fset";
  EXPECT_THROW(substitution_test(p, s, "make_fset"), ConfigError);
}

TEST(Substitution, JsonReport) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  auto doc = nlohmann::json::parse(
      format_json(substitution_test(p, load_suite("bag.suite"), "make_cset")));
  EXPECT_EQ(doc["version"], 1);
  EXPECT_EQ(doc["cases"].size(), 8u);
  EXPECT_EQ(doc["verdict"], "not_substitutable");
}

TEST(Enumerate, OrderedBySizeThenLexicographically) {
  EXPECT_EQ(enumerate_multisets({2, 1}, 2),
            (std::vector<Multiset>{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}}));
  EXPECT_EQ(enumerate_multisets({1}, 0), (std::vector<Multiset>{{}}));
  EXPECT_EQ(enumerate_multisets({1, 2, 3}, 3).size(), 20u);
}

TEST(Diff, FooAgreesOnBags) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  EXPECT_FALSE(differential_search(p, {"foo1", "foo2", {1, 2}, 2, "make_cbag"}));
}

TEST(Diff, FooDivergesOnSets) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  auto w = differential_search(p, {"foo1", "foo2", {1}, 1, "make_cset"});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->args, (std::vector<Multiset>{{1}, {1}, {1}}));
  EXPECT_EQ(w->a.result, "true");
  EXPECT_EQ(w->b.result, "false");
}

TEST(Diff, SameEntryHasNoWitness) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  EXPECT_FALSE(differential_search(p, {"foo2", "foo2", {1, 2}, 2, "make_cset"}));
}

TEST(Diff, FirstWitnessInEnumerationOrder) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  auto w = differential_search(p, {"foo1", "foo2", {1, 2}, 2, "make_cset"});
  ASSERT_TRUE(w);
  // Smaller tuples agree: any empty argument makes both sides equal.
  EXPECT_EQ(w->args, (std::vector<Multiset>{{1}, {1}, {1}}));
}

TEST(Diff, RuntimeErrorsAreOutcomes) {
  ResolvedProgram p = load_corpus_with(
      {"fbag.moo"},
      "int ok(FBag b) { return size(b); }\n"
      "int bad(FBag b) { if (size(b) > 1) { return head(nil); } "
      "return size(b); }\n");
  auto w = differential_search(p, {"ok", "bad", {1}, 2, "make_fbag"});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->args, (std::vector<Multiset>{{1, 1}}));
  EXPECT_EQ(w->b.error, RuntimeErrorKind::kNilList);
}

TEST(Diff, ArityMismatchIsAConfigError) {
  ResolvedProgram p = load_corpus({"fbag.moo"});
  EXPECT_THROW(differential_search(p, {"size", "count", {1}, 1, "make_fbag"}),
               ConfigError);
}

TEST(Iso, EncodeExamples) {
  UfEncoding enc = UfEncoding::identity({42, 43});
  EXPECT_EQ(encode_bag({42, 43}, enc), 1806);
  EXPECT_EQ(encode_bag({42, 42, 43}, enc), 75852);
  EXPECT_EQ(encode_bag({}, enc), 1);
  EXPECT_THROW(encode_bag({7}, enc), EncodingError);
}

TEST(Iso, OverflowIsDetected) {
  UfEncoding enc = UfEncoding::identity({1000003});
  EXPECT_THROW(encode_bag(Multiset(4, 1000003), enc), EncodingError);
}

TEST(Iso, EncodingValidation) {
  EXPECT_FALSE(UfEncoding::identity({42, 43}).validate());
  EXPECT_TRUE(UfEncoding::identity({4}).validate());      // not squarefree
  EXPECT_TRUE(UfEncoding::identity({6, 10}).validate());  // not coprime
  EXPECT_TRUE(UfEncoding::identity({1}).validate());
  UfEncoding primes = UfEncoding::primes({9, 3, 5});
  EXPECT_EQ(primes.codes.at(3), 2);
  EXPECT_EQ(primes.codes.at(5), 3);
  EXPECT_EQ(primes.codes.at(9), 5);
}

TEST(Iso, ReferenceTable) {
  IsoReport r =
      check_isomorphism(UfEncoding::identity({42, 43}), {42, 43}, 3);
  EXPECT_TRUE(r.counterexamples.empty());
  ASSERT_EQ(r.table.size(), 6u);
  const std::int64_t want[] = {1806, 75852, 5753525904, 42, 1764, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.table[i].encoded, want[i]) << r.table[i].expression;
    EXPECT_EQ(r.table[i].arithmetic_value, want[i]) << r.table[i].arithmetic;
  }
  EXPECT_EQ(r.pairs, 100);
}

TEST(Iso, RandomPrimeEncodingsHaveNoCounterexamples) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::int64_t> universe;
    for (int i = 0; i < n; ++i) universe.push_back(100 + 7 * i);
    IsoReport r = check_isomorphism(UfEncoding::primes(universe), universe, 3);
    EXPECT_TRUE(r.counterexamples.empty()) << n;
    EXPECT_EQ(r.overflows, 0);
  }
}

TEST(Iso, SubtractIsReduce) {
  EXPECT_EQ(reduce(75852, 43), 1764);
  EXPECT_EQ(reduce(1806, 43), 42);
  EXPECT_EQ(bag_subtract({42, 42, 43}, {42, 43, 43}), (Multiset{42}));
  EXPECT_EQ(radical(75852), 1806);
  EXPECT_TRUE(is_squarefree(1806));
  EXPECT_FALSE(is_squarefree(75852));
}

TEST(Invariants, FnsPassesForSetsAndFailsForBags) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  ContractSuite set = load_suite("set.suite");
  auto by_name = [](const std::vector<CaseResult>& rs, const std::string& n) {
    for (const CaseResult& r : rs) {
      if (r.name == n) return r.passed;
    }
    ADD_FAILURE() << n;
    return false;
  };
  EXPECT_TRUE(by_name(run_suite(p, set, "make_cset"), "fns"));
  EXPECT_FALSE(by_name(run_suite(p, set, "make_cbag"), "fns"));
  ContractSuite bag = load_suite("bag.suite");
  EXPECT_TRUE(by_name(run_suite(p, bag, "make_cbag"), "fnb"));
  EXPECT_FALSE(by_name(run_suite(p, bag, "make_cset"), "fnb"));
}

constexpr const char* kProbes = R"(
bool set_self_merge(list xs) {
  let s = make_fset(xs);
  return bag_eq(new FSet(merge(s, s)), s);
}
bool bag_self_merge(list xs) {
  let b = make_fbag(xs);
  return bag_eq(merge(b, b), b);
}
FSet coerce(FBag b) {
  return new FSet(b);
}
bool union_is_bag(list xs, list ys) {
  return verify(merge(make_fset(xs), make_fbag(ys)));
}
)";

TEST(Invariants, SelfMergeIsIdentityForSetsOnly) {
  ResolvedProgram p = load_corpus_with({"fbag.moo", "fset.moo"}, kProbes);
  for (const Multiset& m : enumerate_multisets({1, 2, 3}, 3)) {
    EXPECT_EQ(evaluate_function(p, "set_self_merge", {ints(m)}).rendered,
              "true")
        << format_multiset(m);
  }
  EXPECT_EQ(evaluate_function(p, "bag_self_merge", {ints({1})}).rendered,
            "false");
}

TEST(Invariants, RecoercionIsIdempotent) {
  ResolvedProgram p = load_corpus_with({"fbag.moo", "fset.moo"}, kProbes);
  for (const Multiset& m : enumerate_multisets({1, 2, 3}, 3)) {
    Interpreter interp(p);
    Value once = *interp.call_function("make_fset", {ints(m)}).result;
    Value twice = *interp.call_function("coerce", {once}).result;
    EXPECT_EQ(interp.snapshot(once), interp.snapshot(twice))
        << format_multiset(m);
  }
}

TEST(Invariants, UnionOfSetAndBagIsABag) {
  ResolvedProgram p = load_corpus_with({"fbag.moo", "fset.moo"}, kProbes);
  const auto all = enumerate_multisets({1, 5}, 2);
  for (const Multiset& a : all) {
    for (const Multiset& b : all) {
      ExecOutcome out =
          evaluate_function(p, "union_is_bag", {ints(a), ints(b)});
      EXPECT_TRUE(out.ok());
      EXPECT_EQ(out.rendered, "true");
    }
  }
}

TEST(Soundness, CorpusSummariesAreSound) {
  for (auto files : std::vector<std::vector<std::string>>{
           {"cbag.moo", "cset.moo"}, {"fbag.moo", "fset.moo"}}) {
    SoundnessReport r =
        check_summary_soundness(load_corpus(files), {1, 2}, 2);
    EXPECT_TRUE(r.violations.empty()) << format_text(r);
    EXPECT_GT(r.probes, 0);
  }
}

TEST(Soundness, DetectsAnUnsoundSummary) {
  ResolvedProgram p = load_corpus({"cbag.moo", "cset.moo"});
  CallGraph graph = build_call_graph(p);
  MutationSummary nothing;
  nothing.marked.resize(graph.nodes().size());
  SoundnessReport r = check_summary_soundness(p, graph, nothing, {1, 2}, 1);
  std::set<std::string> caught;
  for (const SoundnessViolation& v : r.violations) caught.insert(v.callable);
  EXPECT_TRUE(caught.count("CBag::put"));
  EXPECT_TRUE(caught.count("CSet::put"));
  EXPECT_TRUE(caught.count("merge_into/2"));
  EXPECT_FALSE(caught.count("CBag::count"));
  EXPECT_FALSE(caught.count("foo2/3"));
}

TEST(Soundness, ClassesWithoutGeneratorsAreSkipped) {
  SoundnessReport r =
      check_summary_soundness(load_corpus({"shapes_oop.moo"}), {1, 2}, 2);
  EXPECT_FALSE(r.skipped.empty());
  EXPECT_TRUE(r.violations.empty());
}

TEST(Property, HoldsForConformingFamilies) {
  ResolvedProgram f = load_corpus({"fbag.moo", "fset.moo"});
  PropertyResult r = evaluate_property(
      f, {load_suite("fbag.suite"), load_suite("fset.suite")}, property_rules());
  EXPECT_TRUE(r.premise);
  EXPECT_TRUE(r.holds());
  EXPECT_TRUE(r.failures.empty());
}

TEST(Property, NonConformingFamilyIsVacuous) {
  ResolvedProgram c = load_corpus({"cbag.moo", "cset.moo"});
  PropertyResult r = evaluate_property(
      c, {load_suite("bag.suite"), load_suite("set.suite")}, property_rules());
  EXPECT_FALSE(r.premise);
  EXPECT_TRUE(r.holds());
}

TEST(Property, EmptyRuleSetExposesCbagAndCset) {
  ResolvedProgram c = load_corpus({"cbag.moo", "cset.moo"});
  PropertyResult r = evaluate_property(
      c, {load_suite("bag.suite"), load_suite("set.suite")}, CheckConfig::none());
  EXPECT_TRUE(r.premise);
  EXPECT_FALSE(r.holds());
}

TEST(Property, ConstructorSkippingDedupBreaksIt) {
  ResolvedProgram n = load_corpus({"fbag.moo", "fset_nodedup.moo"});
  PropertyResult r = evaluate_property(
      n, {load_suite("fbag.suite"), load_suite("fset.suite")}, property_rules());
  EXPECT_TRUE(r.premise);
  EXPECT_FALSE(r.holds());
}

TEST(Property, FactoryNames) {
  EXPECT_EQ(factory_name("FSet"), "make_fset");
  EXPECT_EQ(factory_name("Square"), "make_square");
}

}  // namespace
}  // namespace minioo
