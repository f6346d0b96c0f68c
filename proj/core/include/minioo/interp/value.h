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

#ifndef MINIOO_INTERP_VALUE_H_
#define MINIOO_INTERP_VALUE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace minioo {

struct ListCell;
using ListPtr = std::shared_ptr<const ListCell>;
using ObjectId = std::int64_t;

// A runtime value. Lists are persistent cons cells shared between values;
// objects are references into an ObjectStore. `readonly` is the dynamic
// constref taint: it travels with the value into everything read from it.
struct Value {
  enum class Kind { kInt, kBool, kUnit, kList, kObject };

  Kind kind = Kind::kUnit;
  std::int64_t i = 0;
  bool b = false;
  ListPtr list;  // null is nil
  ObjectId object = -1;
  bool readonly = false;

  static Value Int(std::int64_t v);
  static Value Bool(bool v);
  static Value Unit();
  static Value List(ListPtr cells, bool readonly = false);
  static Value Object(ObjectId id, bool readonly = false);
  // Builds a list from `items` in order.
  static Value ListOf(const std::vector<Value>& items);

  Value as_readonly() const;
  bool is_true() const { return kind == Kind::kBool && b; }
};

struct ListCell {
  Value head;
  ListPtr tail;
};

// Elements of a list value in order.
std::vector<Value> list_items(const Value& list);

// MiniOO `==`: numbers and booleans by value, lists element-wise, objects
// by identity.
bool values_equal(const Value& a, const Value& b);

// A mutable storage location: a variable or an object field.
struct Slot {
  std::optional<Value> value;  // empty for an uninitialized field
};
using SlotPtr = std::shared_ptr<Slot>;

struct Object {
  std::string class_name;
  std::map<std::string, SlotPtr> fields;
};

class ObjectStore {
 public:
  ObjectId create(std::string class_name, const std::vector<std::string>& fields);
  Object& at(ObjectId id) { return objects_.at(static_cast<std::size_t>(id)); }
  const Object& at(ObjectId id) const {
    return objects_.at(static_cast<std::size_t>(id));
  }
  std::size_t size() const { return objects_.size(); }

 private:
  std::vector<Object> objects_;
};

// Print format: decimal ints, true/false, (), [a b c], <Class>.
std::string render(const Value& value, const ObjectStore& store);

// Deep structural image of everything reachable from `value`: object
// identities are replaced by first-visit numbers, so two graphs with the
// same shape and contents have equal snapshots.
std::string structural_snapshot(const Value& value, const ObjectStore& store);

}  // namespace minioo

#endif  // MINIOO_INTERP_VALUE_H_
