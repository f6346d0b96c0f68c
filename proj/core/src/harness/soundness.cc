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

#include "minioo/harness/soundness.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "minioo/harness/diff.h"
#include "minioo/harness/property.h"
#include "minioo/interp/interpreter.h"

namespace minioo {
namespace {

constexpr std::int64_t kMaxProbesPerCallable = 20000;

// How to build one argument inside a fresh interpreter.
struct Recipe {
  Value literal;
  std::string factory;  // empty: use literal
  Multiset items;
  std::string label;
};

Value list_value(const Multiset& m) {
  std::vector<Value> items;
  for (std::int64_t x : m) items.push_back(Value::Int(x));
  return Value::ListOf(items);
}

std::optional<std::vector<Recipe>> domain(const ResolvedProgram& program,
                                          const Type& type,
                                          const std::vector<std::int64_t>& ints,
                                          const std::vector<Multiset>& bags,
                                          std::string* reason) {
  std::vector<Recipe> out;
  switch (type.kind) {
    case TypeKind::kInt:
      for (std::int64_t x : ints) {
        out.push_back({Value::Int(x), "", {}, std::to_string(x)});
      }
      return out;
    case TypeKind::kBool:
      out.push_back({Value::Bool(false), "", {}, "false"});
      out.push_back({Value::Bool(true), "", {}, "true"});
      return out;
    case TypeKind::kUnit:
      out.push_back({Value::Unit(), "", {}, "()"});
      return out;
    case TypeKind::kList:
      for (const Multiset& m : bags) {
        out.push_back({list_value(m), "", {}, format_multiset(m)});
      }
      return out;
    case TypeKind::kClass: {
      const std::string f = factory_name(type.class_name);
      if (!program.find_function(f, 1)) {
        *reason = "no generator for " + type.class_name;
        return std::nullopt;
      }
      for (const Multiset& m : bags) {
        out.push_back({Value::Unit(), f, m, f + format_multiset(m)});
      }
      return out;
    }
    case TypeKind::kAny:
      *reason = "no generator for an untyped parameter";
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

SoundnessReport check_summary_soundness(
    const ResolvedProgram& program, const std::vector<std::int64_t>& universe,
    int max_size) {
  const CallGraph graph = build_call_graph(program);
  return check_summary_soundness(program, graph,
                                 mutation_summaries(program, graph), universe,
                                 max_size);
}

SoundnessReport check_summary_soundness(
    const ResolvedProgram& program, const CallGraph& graph,
    const MutationSummary& summaries,
    const std::vector<std::int64_t>& universe, int max_size) {
  SoundnessReport report;
  std::vector<std::int64_t> ints = universe;
  std::sort(ints.begin(), ints.end());
  ints.erase(std::unique(ints.begin(), ints.end()), ints.end());
  const std::vector<Multiset> bags = enumerate_multisets(ints, max_size);
  Limits limits;
  limits.max_steps = 200'000;

  for (std::size_t node = 0; node < graph.nodes().size(); ++node) {
    const Callable& c = graph.nodes()[node];
    if (c.kind == CallableKind::kCtor) continue;
    if (c.kind == CallableKind::kFunction && c.params().empty()) continue;

    std::vector<std::vector<Recipe>> domains;
    std::string reason;
    bool ok = true;
    if (c.kind == CallableKind::kMethod) {
      Type receiver;
      receiver.kind = TypeKind::kClass;
      receiver.class_name = c.cls->name();
      auto d = domain(program, receiver, ints, bags, &reason);
      if (d) {
        domains.push_back(std::move(*d));
      } else {
        ok = false;
      }
    }
    for (const Param& p : c.params()) {
      if (!ok) break;
      auto d = domain(program, p.type.type, ints, bags, &reason);
      if (d) {
        domains.push_back(std::move(*d));
      } else {
        ok = false;
      }
    }
    std::int64_t total = 1;
    for (const auto& d : domains) {
      total *= static_cast<std::int64_t>(d.size());
      if (total > kMaxProbesPerCallable) break;
    }
    if (ok && total > kMaxProbesPerCallable) {
      ok = false;
      reason = "argument space too large";
    }
    if (!ok) {
      report.skipped.push_back(c.key + ": " + reason);
      continue;
    }
    ++report.callables_probed;
    if (total == 0) continue;

    const std::set<int>& marked = summaries.of(static_cast<int>(node));
    std::vector<std::size_t> index(domains.size(), 0);
    bool done = false;
    while (!done) {
      ++report.probes;
      Interpreter interp(program, limits);
      std::vector<Value> args;
      std::string label;
      bool built = true;
      for (std::size_t i = 0; i < domains.size(); ++i) {
        const Recipe& r = domains[i][index[i]];
        if (i) label += " ";
        label += r.label;
        if (r.factory.empty()) {
          args.push_back(r.literal);
          continue;
        }
        ExecOutcome made = interp.call_function(r.factory, {list_value(r.items)});
        if (!made.result) {
          built = false;
          break;
        }
        args.push_back(*made.result);
      }
      if (built) {
        std::vector<std::string> before;
        for (const Value& v : args) before.push_back(interp.snapshot(v));
        if (c.kind == CallableKind::kMethod) {
          Value receiver = args.front();
          std::vector<Value> rest(args.begin() + 1, args.end());
          interp.call_method(receiver, c.method->name, std::move(rest));
        } else {
          interp.call_function(c.function->name, args);
        }
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (marked.count(static_cast<int>(i))) continue;
          std::string after = interp.snapshot(args[i]);
          if (after != before[i]) {
            report.violations.push_back(
                {c.key, static_cast<int>(i), label, before[i], after});
          }
        }
      }
      std::size_t pos = domains.size();
      while (pos > 0 && ++index[pos - 1] == domains[pos - 1].size()) {
        index[pos - 1] = 0;
        --pos;
      }
      done = pos == 0;
    }
  }
  return report;
}

std::string format_text(const SoundnessReport& report) {
  std::ostringstream out;
  out << "callables probed: " << report.callables_probed << "\n";
  out << "probes: " << report.probes << "\n";
  for (const std::string& s : report.skipped) out << "skipped " << s << "\n";
  for (const SoundnessViolation& v : report.violations) {
    out << "unsound " << v.callable << " position " << v.position << " on ("
        << v.args << "): " << v.before << " -> " << v.after << "\n";
  }
  return out.str();
}

}  // namespace minioo
