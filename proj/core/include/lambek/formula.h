/* Copyright 2026 The Lambek Brackets Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Formulas of the Lambek calculus with brackets and the unit constant.
//
// Formulas are hash-consed: every distinct tree is stored exactly once in a
// process-wide table, so a Formula is a single pointer, copying is free and
// equality is pointer equality. Nodes are never released.

#ifndef LAMBEK_FORMULA_H_
#define LAMBEK_FORMULA_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>

namespace lambek {

enum class Connective : std::uint8_t {
  kVar,
  kUnit,
  kUnder,       // A\B
  kOver,        // B/A
  kProd,        // A*B
  kDiamond,     // <>A
  kBracketInv,  // []^-1 A
};

class Formula {
 public:
  static Formula Var(int index);
  static Formula Unit();
  // a\b: `a` is the denominator, `b` the result.
  static Formula Under(Formula a, Formula b);
  // b/a: `b` is the result, `a` the denominator.
  static Formula Over(Formula b, Formula a);
  static Formula Prod(Formula a, Formula b);
  static Formula Diamond(Formula body);
  static Formula BracketInv(Formula body);

  Connective kind() const;
  bool is_var() const { return kind() == Connective::kVar; }
  bool is_unit() const { return kind() == Connective::kUnit; }
  bool is_atomic() const { return is_var() || is_unit(); }
  bool is_binary() const;
  bool is_unary() const;

  // Variable index; only meaningful for kVar.
  int var() const;

  // Children as written: for A\B left()=A, right()=B; for B/A left()=B,
  // right()=A; for A*B left()=A, right()=B. Unary connectives use body().
  Formula left() const;
  Formula right() const;
  Formula body() const;

  // Atom occurrences plus connective occurrences.
  std::size_t size() const;
  // Maximum nesting of <> and []^-1 along a root-to-leaf path.
  int modality_depth() const;
  // Number of <> and []^-1 occurrences.
  int modality_count() const;
  bool contains_unit() const;
  bool contains_var(int index) const;
  // Largest variable index occurring, 0 if none.
  int max_var() const;

  // Position in the intern table; stable for the lifetime of the process.
  std::uint32_t id() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }
  // Structural order: by size, then connective, then children. Independent of
  // interning order, so sorted output is reproducible across runs.
  friend std::strong_ordering operator<=>(Formula a, Formula b);

  struct Node;

 private:
  explicit Formula(const Node* node) : node_(node) {}

  const Node* node_;
};

std::size_t size(Formula f);
int modality_depth(Formula f);

// Every variable index occurring in `f`.
std::set<int> variables(Formula f);

// Replaces every occurrence of variable `index` by `replacement`.
Formula substitute(Formula f, int index, Formula replacement);

}  // namespace lambek

template <>
struct std::hash<lambek::Formula> {
  std::size_t operator()(lambek::Formula f) const noexcept { return f.id(); }
};

#endif  // LAMBEK_FORMULA_H_
