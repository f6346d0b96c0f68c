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

#ifndef MINIOO_HARNESS_ISO_H_
#define MINIOO_HARNESS_ISO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minioo/harness/diff.h"

namespace minioo {

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element -> code. Codes are > 1, squarefree and pairwise coprime.
struct UfEncoding {
  std::map<std::int64_t, std::int64_t> codes;

  // Each element is its own code.
  static UfEncoding identity(const std::vector<std::int64_t>& elements);
  // The i-th element (in sorted order) gets the i-th prime.
  static UfEncoding primes(const std::vector<std::int64_t>& elements);

  // Empty if valid, otherwise a description of the first violation.
  std::optional<std::string> validate() const;
};

// Product of code^multiplicity. Throws EncodingError on a missing code or
// on 64-bit overflow.
std::int64_t encode_bag(const Multiset& bag, const UfEncoding& enc);

Multiset bag_merge(const Multiset& a, const Multiset& b);
Multiset bag_subtract(const Multiset& a, const Multiset& b);
Multiset bag_dedup(const Multiset& a);
bool is_set(const Multiset& a);

bool is_squarefree(std::int64_t n);
std::int64_t radical(std::int64_t n);
// a % b in the uf-integer reading: a / gcd(a, b).
std::int64_t reduce(std::int64_t a, std::int64_t b);

struct TableRow {
  std::string expression;  // e.g. "vB+vC"
  std::string arithmetic;  // e.g. "42*43"
  Multiset bag;            // result of the bag operation
  std::int64_t encoded = 0;     // encode_bag(bag)
  std::int64_t arithmetic_value = 0;  // the integer operation on the encodings
};

struct IsoReport {
  std::int64_t multisets = 0;
  std::int64_t pairs = 0;
  std::int64_t identities_checked = 0;
  std::int64_t overflows = 0;  // pairs skipped because a product overflowed
  std::vector<std::string> counterexamples;
  std::vector<TableRow> table;  // empty unless 42 and 43 are encoded
};

// For all multisets a, b over `universe` of size <= max_size checks that
// merge maps to multiplication, subtract to reduce, sets to squarefree
// integers and set coercion to the radical.
IsoReport check_isomorphism(const UfEncoding& enc,
                            const std::vector<std::int64_t>& universe,
                            int max_size);

std::string format_text(const IsoReport& report);

}  // namespace minioo

#endif  // MINIOO_HARNESS_ISO_H_
