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

#include "lambek/structure.h"

#include <algorithm>

namespace lambek {

Structure::Structure(std::initializer_list<Item> init) : items(init) {}

Structure::Structure(std::vector<Item> v) : items(std::move(v)) {}

std::size_t Structure::formula_size() const {
  std::size_t total = 0;
  for (const Item& item : items) {
    total += item.is_atom() ? item.formula().size()
                            : item.inner().formula_size();
  }
  return total;
}

std::size_t Structure::group_count() const {
  std::size_t total = 0;
  for (const Item& item : items) {
    if (item.is_group()) total += 1 + item.inner().group_count();
  }
  return total;
}

bool Structure::contains_unit() const {
  return std::any_of(items.begin(), items.end(), [](const Item& item) {
    return item.is_atom() ? item.formula().contains_unit()
                          : item.inner().contains_unit();
  });
}

int Structure::max_var() const {
  int m = 0;
  for (const Item& item : items) {
    m = std::max(m, item.is_atom() ? item.formula().max_var()
                                   : item.inner().max_var());
  }
  return m;
}

bool operator==(const Structure& a, const Structure& b) {
  return a.items == b.items;
}

int Sequent::max_var() const {
  return std::max(antecedent.max_var(), succedent.max_var());
}

Structure Concat(const Structure& a, const Structure& b) {
  Structure out = a;
  out.items.insert(out.items.end(), b.items.begin(), b.items.end());
  return out;
}

Structure plug(const Context& c, const Structure& s) {
  Structure out = c.frame;
  std::vector<Item>* level = &out.items;
  for (std::size_t index : c.path) {
    level = &(*level)[index].mutable_inner().items;
  }
  level->insert(level->begin() + static_cast<std::ptrdiff_t>(c.slot),
                s.items.begin(), s.items.end());
  return out;
}

namespace {

void CollectOccurrences(const Structure& root, const Structure& level,
                        std::vector<std::size_t>& path,
                        std::vector<Occurrence>& out) {
  for (std::size_t i = 0; i < level.items.size(); ++i) {
    Context c{root, path, i};
    // Remove item i from the copy of the root at the current path.
    std::vector<Item>* items = &c.frame.items;
    for (std::size_t index : path) {
      items = &(*items)[index].mutable_inner().items;
    }
    items->erase(items->begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(Occurrence{std::move(c), level.items[i]});

    if (level.items[i].is_group()) {
      path.push_back(i);
      CollectOccurrences(root, level.items[i].inner(), path, out);
      path.pop_back();
    }
  }
}

void CollectSlots(const Structure& root, const Structure& level,
                  std::vector<std::size_t>& path, std::vector<Context>& out) {
  for (std::size_t i = 0; i <= level.items.size(); ++i) {
    out.push_back(Context{root, path, i});
    if (i < level.items.size() && level.items[i].is_group()) {
      path.push_back(i);
      CollectSlots(root, level.items[i].inner(), path, out);
      path.pop_back();
    }
  }
}

void CollectYield(const Structure& s, std::vector<Formula>& out) {
  for (const Item& item : s.items) {
    if (item.is_atom()) {
      out.push_back(item.formula());
    } else {
      CollectYield(item.inner(), out);
    }
  }
}

void AppendKey(const Structure& s, SequentKey& key) {
  for (const Item& item : s.items) {
    if (item.is_atom()) {
      key.push_back(item.formula().id() + 3);
    } else {
      key.push_back(0);
      AppendKey(item.inner(), key);
      key.push_back(1);
    }
  }
}

}  // namespace

SequentKey sequent_key(const Sequent& s) {
  SequentKey key;
  AppendKey(s.antecedent, key);
  key.push_back(2);
  key.push_back(s.succedent.id() + 3);
  return key;
}

std::size_t SequentKeyHash::operator()(const SequentKey& key) const noexcept {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint32_t v : key) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<Occurrence> occurrences(const Structure& s) {
  std::vector<Occurrence> out;
  std::vector<std::size_t> path;
  CollectOccurrences(s, s, path, out);
  return out;
}

std::vector<Context> slots(const Structure& s) {
  std::vector<Context> out;
  std::vector<std::size_t> path;
  CollectSlots(s, s, path, out);
  return out;
}

std::vector<Formula> yield_of(const Structure& s) {
  std::vector<Formula> out;
  CollectYield(s, out);
  return out;
}

std::set<int> variables(const Structure& s) {
  std::set<int> out;
  for (Formula f : yield_of(s)) {
    std::set<int> vs = variables(f);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

std::set<int> variables(const Sequent& s) {
  std::set<int> out = variables(s.antecedent);
  std::set<int> vs = variables(s.succedent);
  out.insert(vs.begin(), vs.end());
  return out;
}

}  // namespace lambek
