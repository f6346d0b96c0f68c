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

#include "minioo/harness/iso.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace minioo {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw EncodingError("product overflows 64 bits");
  }
  return r;
}

std::int64_t code_of(const UfEncoding& enc, std::int64_t element) {
  auto it = enc.codes.find(element);
  if (it == enc.codes.end()) {
    throw EncodingError("no code for element " + std::to_string(element));
  }
  return it->second;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

UfEncoding UfEncoding::identity(const std::vector<std::int64_t>& elements) {
  UfEncoding enc;
  for (std::int64_t e : elements) enc.codes[e] = e;
  return enc;
}

UfEncoding UfEncoding::primes(const std::vector<std::int64_t>& elements) {
  UfEncoding enc;
  std::int64_t candidate = 1;
  for (std::int64_t e : sorted_unique(elements)) {
    do {
      ++candidate;
    } while (radical(candidate) != candidate || !is_prime(candidate));
    enc.codes[e] = candidate;
  }
  return enc;
}

std::optional<std::string> UfEncoding::validate() const {
  for (auto [e, c] : codes) {
    if (c <= 1) {
      return "code of " + std::to_string(e) + " is not greater than 1";
    }
    if (!is_squarefree(c)) {
      return "code of " + std::to_string(e) + " is not squarefree";
    }
  }
  for (auto i = codes.begin(); i != codes.end(); ++i) {
    for (auto j = std::next(i); j != codes.end(); ++j) {
      if (std::gcd(i->second, j->second) != 1) {
        return "codes of " + std::to_string(i->first) + " and " +
               std::to_string(j->first) + " are not coprime";
      }
    }
  }
  return std::nullopt;
}

std::int64_t encode_bag(const Multiset& bag, const UfEncoding& enc) {
  std::int64_t n = 1;
  for (std::int64_t e : bag) n = checked_mul(n, code_of(enc, e));
  return n;
}

Multiset bag_merge(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Multiset bag_subtract(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Multiset bag_dedup(const Multiset& a) { return sorted_unique(a); }

bool is_set(const Multiset& a) {
  return std::adjacent_find(a.begin(), a.end()) == a.end();
}

bool is_squarefree(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return false;
    }
  }
  return true;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r *= d;
      while (n % d == 0) n /= d;
    }
  }
  return n > 1 ? r * n : r;
}

std::int64_t reduce(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b);
}

IsoReport check_isomorphism(const UfEncoding& enc,
                            const std::vector<std::int64_t>& universe,
                            int max_size) {
  if (auto bad = enc.validate()) throw EncodingError(*bad);
  for (std::int64_t e : universe) code_of(enc, e);

  IsoReport report;
  const std::vector<Multiset> all = enumerate_multisets(universe, max_size);
  report.multisets = static_cast<std::int64_t>(all.size());
  auto fail = [&](const std::string& what, const Multiset& a,
                  const Multiset* b) {
    std::string line = what + " " + format_multiset(a);
    if (b) line += " " + format_multiset(*b);
    report.counterexamples.push_back(line);
  };

  for (const Multiset& a : all) {
    std::int64_t ea = 0;
    try {
      ea = encode_bag(a, enc);
    } catch (const EncodingError&) {
      ++report.overflows;
      continue;
    }
    ++report.identities_checked;
    if (is_set(a) != is_squarefree(ea)) fail("set/squarefree", a, nullptr);
    ++report.identities_checked;
    if (encode_bag(bag_dedup(a), enc) != radical(ea)) {
      fail("coercion/radical", a, nullptr);
    }
    for (const Multiset& b : all) {
      ++report.pairs;
      try {
        const std::int64_t eb = encode_bag(b, enc);
        ++report.identities_checked;
        if (encode_bag(bag_subtract(a, b), enc) != reduce(ea, eb)) {
          fail("subtract/reduce", a, &b);
        }
        ++report.identities_checked;
        if (encode_bag(bag_merge(a, b), enc) != checked_mul(ea, eb)) {
          fail("merge/product", a, &b);
        }
      } catch (const EncodingError&) {
        ++report.overflows;
      }
    }
  }

  if (enc.codes.count(42) && enc.codes.count(43)) {
    const Multiset vb{42}, vc{43}, vd{42, 43}, ve{42, 42, 43};
    struct Op {
      const char* expression;
      const Multiset& a;
      const Multiset& b;
      bool merge;
    };
    const Op ops[] = {
        {"vB+vC", vb, vc, true},
        {"vB+vD", vb, vd, true},
        {"vE+vE", ve, ve, true},
        {"vD-vC", vd, vc, false},
        {"vE-vC", ve, vc, false},
        {"vE-vE", ve, ve, false},
    };
    for (const Op& op : ops) {
      TableRow row;
      row.expression = op.expression;
      row.bag = op.merge ? bag_merge(op.a, op.b) : bag_subtract(op.a, op.b);
      row.encoded = encode_bag(row.bag, enc);
      const std::int64_t ea = encode_bag(op.a, enc);
      const std::int64_t eb = encode_bag(op.b, enc);
      row.arithmetic = std::to_string(ea) + (op.merge ? "*" : "%") +
                       std::to_string(eb);
      row.arithmetic_value = op.merge ? checked_mul(ea, eb) : reduce(ea, eb);
      report.table.push_back(std::move(row));
    }
  }
  return report;
}

std::string format_text(const IsoReport& report) {
  std::ostringstream out;
  out << "multisets: " << report.multisets << "\n";
  out << "pairs: " << report.pairs << "\n";
  out << "identities checked: " << report.identities_checked << "\n";
  out << "overflows: " << report.overflows << "\n";
  for (const std::string& c : report.counterexamples) {
    out << "counterexample: " << c << "\n";
  }
  for (const TableRow& row : report.table) {
    out << row.expression << " = " << format_multiset(row.bag) << " -> "
        << row.encoded << "; " << row.arithmetic << " = "
        << row.arithmetic_value << "\n";
  }
  out << "verdict: "
      << (report.counterexamples.empty() ? "isomorphic" : "not isomorphic")
      << "\n";
  return out.str();
}

}  // namespace minioo
