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

#include "random_program.h"

#include <random>
#include <sstream>
#include <vector>

namespace minioo::testing {
namespace {

class Generator {
 public:
  Generator(std::uint32_t seed, const RandomProgramOptions& options)
      : rng_(seed), options_(options) {}

  std::string run() {
    assignments_ = chance(options_.assignment_probability);
    functions_ = pick(1, options_.max_functions);
    const bool subclass = chance(0.5);
    out_ << "class Box {\n public:\n  int v;\n";
    out_ << "  " << (subclass ? "virtual " : "") << "int get(int k) {\n";
    out_ << "    return v + k;\n  }\n";
    out_ << "  int bump(int k) {\n";
    if (assignments_ && chance(0.5)) out_ << "    v = v + k;\n";
    out_ << "    return v;\n  }\n";
    out_ << "  Box(int a) : v(a) {}\n}\n\n";
    if (subclass) {
      out_ << "class Sub : Box {\n public:\n  int get(int k) {\n";
      if (assignments_ && chance(0.5)) out_ << "    this.v = k;\n";
      out_ << "    return k;\n  }\n  Sub(int a) : Box(a) {}\n}\n\n";
    }
    for (int f = 0; f < functions_; ++f) function(f, subclass);
    return out_.str();
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  template <typename T>
  const T& choose(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(pick(0, static_cast<int>(items.size()) - 1))];
  }

  std::string int_expr() {
    switch (pick(0, 4)) {
      case 0: return std::to_string(pick(0, 9));
      case 1: return choose(ints_);
      case 2: return choose(boxes_) + ".v";
      case 3: return choose(boxes_) + ".get(" + choose(ints_) + ")";
      default: return choose(ints_) + " + " + std::to_string(pick(1, 3));
    }
  }

  std::string box_expr(bool subclass) {
    switch (pick(0, 2)) {
      case 0:
        return std::string("new ") + (subclass && chance(0.5) ? "Sub" : "Box") +
               "(" + int_expr() + ")";
      default: return choose(boxes_);
    }
  }

  void statement(int depth, int self, bool subclass) {
    const std::string pad(2 * depth, ' ');
    const int kind = pick(0, assignments_ ? 8 : 4);
    switch (kind) {
      case 0: {
        const std::string name = "b" + std::to_string(locals_++);
        out_ << pad << "let " << name << " = " << box_expr(subclass) << ";\n";
        boxes_.push_back(name);
        break;
      }
      case 1: {
        const std::string name = "n" + std::to_string(locals_++);
        out_ << pad << "let " << name << " = " << int_expr() << ";\n";
        ints_.push_back(name);
        break;
      }
      case 2: {
        // Calls only reach earlier functions or recurse into this one.
        const int callee = pick(0, self);
        out_ << pad << "f" << callee << "(" << choose(boxes_) << ", "
             << choose(boxes_) << ", " << int_expr() << ");\n";
        break;
      }
      case 3:
        out_ << pad << choose(boxes_) << ".bump(" << int_expr() << ");\n";
        break;
      case 4:
        if (depth < 3) {
          out_ << pad << "if (" << int_expr() << " > " << pick(0, 5) << ") {\n";
          const std::size_t boxes = boxes_.size(), ints = ints_.size();
          statement(depth + 1, self, subclass);
          boxes_.resize(boxes);
          ints_.resize(ints);
          out_ << pad << "}\n";
        } else {
          out_ << pad << "print(" << int_expr() << ");\n";
        }
        break;
      case 5:
        out_ << pad << choose(boxes_) << ".v = " << int_expr() << ";\n";
        break;
      case 6:
        out_ << pad << "r = " << box_expr(subclass) << ";\n";
        break;
      case 7:
        out_ << pad << choose(ints_) << " = " << int_expr() << ";\n";
        break;
      default: {
        const int callee = pick(0, self);
        out_ << pad << "f" << callee << "(" << choose(boxes_) << ", r, "
             << int_expr() << ");\n";
        break;
      }
    }
  }

  void function(int index, bool subclass) {
    boxes_ = {"a", "r"};
    ints_ = {"k"};
    locals_ = 0;
    out_ << "int f" << index << "(Box a, ref Box r, int k) {\n";
    const int n = pick(1, options_.max_statements);
    for (int i = 0; i < n; ++i) statement(1, index, subclass);
    out_ << "  return " << int_expr() << ";\n}\n\n";
  }

  std::mt19937 rng_;
  RandomProgramOptions options_;
  std::ostringstream out_;
  bool assignments_ = false;
  int functions_ = 0;
  int locals_ = 0;
  std::vector<std::string> boxes_;
  std::vector<std::string> ints_;
};

}  // namespace

std::string random_program(std::uint32_t seed,
                           const RandomProgramOptions& options) {
  return Generator(seed, options).run();
}

}  // namespace minioo::testing
