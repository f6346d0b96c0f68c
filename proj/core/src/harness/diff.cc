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

#include "minioo/harness/diff.h"

#include <algorithm>
#include <sstream>

#include "minioo/harness/suite.h"

namespace minioo {
namespace {

void extend(const std::vector<std::int64_t>& universe, std::size_t from,
            int remaining, Multiset& prefix, std::vector<Multiset>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < universe.size(); ++i) {
    prefix.push_back(universe[i]);
    extend(universe, i, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

Observation observe(const ResolvedProgram& program, const DiffSpec& spec,
                    const std::string& entry,
                    const std::vector<Multiset>& tuple) {
  Interpreter interp(program);
  Observation obs;
  std::vector<Value> args;
  for (const Multiset& m : tuple) {
    std::vector<Value> items;
    for (std::int64_t x : m) items.push_back(Value::Int(x));
    ExecOutcome made = interp.call_function(spec.factory, {Value::ListOf(items)});
    if (!made.result) {
      throw ConfigError("factory '" + spec.factory + "' failed on " +
                        format_multiset(m));
    }
    args.push_back(*made.result);
  }
  ExecOutcome out = interp.call_function(entry, std::move(args));
  obs.result = out.rendered;
  obs.output = out.output;
  if (out.error) obs.error = out.error->kind;
  obs.assertion_failed = !out.assertions_failed.empty();
  return obs;
}

}  // namespace

std::vector<Multiset> enumerate_multisets(std::vector<std::int64_t> universe,
                                          int max_size) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::vector<Multiset> out;
  Multiset prefix;
  for (int size = 0; size <= max_size; ++size) {
    extend(universe, 0, size, prefix, out);
  }
  return out;
}

std::string to_string(const Observation& o) {
  std::ostringstream out;
  if (o.error) {
    out << "error " << to_string(*o.error);
  } else {
    out << "result " << o.result;
  }
  if (o.assertion_failed) out << ", assertion failed";
  out << ", output [";
  for (std::size_t i = 0; i < o.output.size(); ++i) {
    if (i) out << " | ";
    out << o.output[i];
  }
  out << "]";
  return out.str();
}

std::optional<Witness> differential_search(const ResolvedProgram& program,
                                           const DiffSpec& spec) {
  if (!program.find_function(spec.factory, 1)) {
    throw ConfigError("no one-argument factory '" + spec.factory + "'");
  }
  const FunDecl* a = nullptr;
  const FunDecl* b = nullptr;
  for (const FunDecl* fn : program.functions()) {
    if (fn->name == spec.entry_a && !a) a = fn;
    if (fn->name == spec.entry_b && !b) b = fn;
  }
  if (!a) throw ConfigError("unknown function '" + spec.entry_a + "'");
  if (!b) throw ConfigError("unknown function '" + spec.entry_b + "'");
  if (a->params.size() != b->params.size()) {
    throw ConfigError("'" + spec.entry_a + "' and '" + spec.entry_b +
                      "' differ in arity");
  }
  if (spec.max_size < 0) throw ConfigError("negative size bound");

  const std::vector<Multiset> domain =
      enumerate_multisets(spec.universe, spec.max_size);
  const std::size_t arity = a->params.size();
  if (domain.empty()) return std::nullopt;
  std::vector<std::size_t> index(arity, 0);
  while (true) {
    std::vector<Multiset> tuple;
    for (std::size_t i : index) tuple.push_back(domain[i]);
    Observation oa = observe(program, spec, spec.entry_a, tuple);
    Observation ob = observe(program, spec, spec.entry_b, tuple);
    if (!(oa == ob)) return Witness{tuple, oa, ob};
    std::size_t pos = arity;
    while (pos > 0 && ++index[pos - 1] == domain.size()) {
      index[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return std::nullopt;
  }
}

std::string format_multiset(const Multiset& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(m[i]);
  }
  return out + "}";
}

std::string format_text(const Witness& w, const DiffSpec& spec) {
  std::ostringstream out;
  out << "witness:";
  for (const Multiset& m : w.args) out << " " << format_multiset(m);
  out << "\n";
  out << spec.entry_a << ": " << to_string(w.a) << "\n";
  out << spec.entry_b << ": " << to_string(w.b) << "\n";
  return out.str();
}

}  // namespace minioo
