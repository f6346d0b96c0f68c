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

#include "minioo/interp/value.h"

#include <map>

namespace minioo {

Value Value::Int(std::int64_t v) {
  Value out;
  out.kind = Kind::kInt;
  out.i = v;
  return out;
}

Value Value::Bool(bool v) {
  Value out;
  out.kind = Kind::kBool;
  out.b = v;
  return out;
}

Value Value::Unit() { return Value(); }

Value Value::List(ListPtr cells, bool readonly) {
  Value out;
  out.kind = Kind::kList;
  out.list = std::move(cells);
  out.readonly = readonly;
  return out;
}

Value Value::Object(ObjectId id, bool readonly) {
  Value out;
  out.kind = Kind::kObject;
  out.object = id;
  out.readonly = readonly;
  return out;
}

Value Value::ListOf(const std::vector<Value>& items) {
  ListPtr cells;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    cells = std::make_shared<const ListCell>(ListCell{*it, cells});
  }
  return List(std::move(cells));
}

Value Value::as_readonly() const {
  Value out = *this;
  out.readonly = true;
  return out;
}

std::vector<Value> list_items(const Value& list) {
  std::vector<Value> out;
  for (const ListCell* c = list.list.get(); c; c = c->tail.get()) {
    out.push_back(c->head);
  }
  return out;
}

bool values_equal(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::kInt: return a.i == b.i;
    case Value::Kind::kBool: return a.b == b.b;
    case Value::Kind::kUnit: return true;
    case Value::Kind::kObject: return a.object == b.object;
    case Value::Kind::kList: {
      const ListCell* x = a.list.get();
      const ListCell* y = b.list.get();
      for (; x && y; x = x->tail.get(), y = y->tail.get()) {
        if (x == y) return true;
        if (!values_equal(x->head, y->head)) return false;
      }
      return x == y;
    }
  }
  return false;
}

ObjectId ObjectStore::create(std::string class_name,
                             const std::vector<std::string>& fields) {
  Object obj;
  obj.class_name = std::move(class_name);
  for (const std::string& f : fields) {
    obj.fields[f] = std::make_shared<Slot>();
  }
  objects_.push_back(std::move(obj));
  return static_cast<ObjectId>(objects_.size() - 1);
}

std::string render(const Value& value, const ObjectStore& store) {
  switch (value.kind) {
    case Value::Kind::kInt: return std::to_string(value.i);
    case Value::Kind::kBool: return value.b ? "true" : "false";
    case Value::Kind::kUnit: return "()";
    case Value::Kind::kObject:
      return "<" + store.at(value.object).class_name + ">";
    case Value::Kind::kList: {
      std::string out = "[";
      bool first = true;
      for (const ListCell* c = value.list.get(); c; c = c->tail.get()) {
        if (!first) out += " ";
        first = false;
        out += render(c->head, store);
      }
      return out + "]";
    }
  }
  return "?";
}

namespace {

void snapshot_into(const Value& value, const ObjectStore& store,
                   std::map<ObjectId, int>& seen, std::string& out) {
  switch (value.kind) {
    case Value::Kind::kObject: {
      auto [it, fresh] =
          seen.emplace(value.object, static_cast<int>(seen.size()));
      out += "#" + std::to_string(it->second);
      if (!fresh) return;
      const Object& obj = store.at(value.object);
      out += obj.class_name + "{";
      for (const auto& [name, slot] : obj.fields) {
        out += name + "=";
        if (slot->value) {
          snapshot_into(*slot->value, store, seen, out);
        } else {
          out += "?";
        }
        out += ";";
      }
      out += "}";
      return;
    }
    case Value::Kind::kList: {
      out += "[";
      for (const ListCell* c = value.list.get(); c; c = c->tail.get()) {
        snapshot_into(c->head, store, seen, out);
        out += " ";
      }
      out += "]";
      return;
    }
    default:
      out += render(value, store);
  }
}

}  // namespace

std::string structural_snapshot(const Value& value, const ObjectStore& store) {
  std::map<ObjectId, int> seen;
  std::string out;
  snapshot_into(value, store, seen, out);
  return out;
}

}  // namespace minioo
