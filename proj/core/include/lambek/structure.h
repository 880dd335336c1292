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

// Bracketed antecedent structures (meta-formulas), sequents and
// one-hole contexts.
//
// A Structure is a flat sequence of items; comma is not a node, so Γ,Λ and
// Γ are the same value. An Item is either a formula or a bracketed group
// holding a nested Structure. Groups may be empty ([Λ]).

#ifndef LAMBEK_STRUCTURE_H_
#define LAMBEK_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

#include "lambek/formula.h"

namespace lambek {

class Item;

struct Structure {
  std::vector<Item> items;

  Structure() = default;
  Structure(std::initializer_list<Item> init);
  explicit Structure(std::vector<Item> v);

  bool empty() const { return items.empty(); }
  std::size_t length() const { return items.size(); }

  // Sum of formula sizes over every atom, at every nesting level.
  std::size_t formula_size() const;
  // Number of groups at every nesting level.
  std::size_t group_count() const;
  bool contains_unit() const;
  int max_var() const;

  friend bool operator==(const Structure&, const Structure&);
};

class Item {
 public:
  static Item Atom(Formula f) { return Item(f); }
  static Item Group(Structure inner) { return Item(std::move(inner)); }

  // Implicit so that `Structure{f1, f2}` reads naturally.
  Item(Formula f) : formula_(f) {}  // NOLINT

  bool is_atom() const { return formula_.has_value(); }
  bool is_group() const { return !formula_.has_value(); }

  // Precondition: is_atom().
  Formula formula() const { return *formula_; }
  // Precondition: is_group().
  const Structure& inner() const { return inner_; }
  Structure& mutable_inner() { return inner_; }

  friend bool operator==(const Item& a, const Item& b) {
    return a.formula_ == b.formula_ && a.inner_ == b.inner_;
  }

 private:
  explicit Item(Structure inner) : inner_(std::move(inner)) {}

  std::optional<Formula> formula_;
  Structure inner_;
};

inline Structure Bracket(Structure inner) {
  return Structure{Item::Group(std::move(inner))};
}

// Concatenation; Λ is the unit.
Structure Concat(const Structure& a, const Structure& b);

struct Sequent {
  Structure antecedent;
  Formula succedent;

  std::size_t size() const {
    return antecedent.formula_size() + succedent.size();
  }
  bool contains_unit() const {
    return antecedent.contains_unit() || succedent.contains_unit();
  }
  int max_var() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// A structure with exactly one hole. The hole sits at position `slot` of the
// sequence reached by following `path` (indices of group items) from the top
// level of `frame`; `frame` itself contains no trace of the hole.
struct Context {
  Structure frame;
  std::vector<std::size_t> path;
  std::size_t slot = 0;

  // The identity context: just a hole.
  static Context Hole() { return Context{}; }

  friend bool operator==(const Context&, const Context&) = default;
};

// Splices the items of `s` into the hole.
Structure plug(const Context& c, const Structure& s);
inline Structure plug(const Context& c, const Item& item) {
  return plug(c, Structure{item});
}

struct Occurrence {
  Context context;
  Item item;
};

// Every presentation of `s` as plug(c, item) for a single item, at every
// nesting level, in pre-order (an item precedes the items inside it, left
// precedes right).
std::vector<Occurrence> occurrences(const Structure& s);

// Every one-hole context whose plug with Λ gives back `s`: one per insertion
// point, at every nesting level, in pre-order.
std::vector<Context> slots(const Structure& s);

// Atoms in order with group boundaries erased.
std::vector<Formula> yield_of(const Structure& s);

std::set<int> variables(const Structure& s);
std::set<int> variables(const Sequent& s);

// Compact encoding of a sequent; two sequents are equal iff their keys are.
// Keys embed intern ids, so they are only comparable within one process.
using SequentKey = std::vector<std::uint32_t>;
SequentKey sequent_key(const Sequent& s);

struct SequentKeyHash {
  std::size_t operator()(const SequentKey& key) const noexcept;
};

// Applies `fn` to every atom.
template <typename Fn>
Structure map_atoms(const Structure& s, Fn&& fn) {
  Structure out;
  out.items.reserve(s.items.size());
  for (const Item& item : s.items) {
    if (item.is_atom()) {
      out.items.push_back(Item::Atom(fn(item.formula())));
    } else {
      out.items.push_back(Item::Group(map_atoms(item.inner(), fn)));
    }
  }
  return out;
}

}  // namespace lambek

#endif  // LAMBEK_STRUCTURE_H_
