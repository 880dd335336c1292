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

#include "lambek/enumerator.h"

#include <map>
#include <utility>

namespace lambek {
namespace {

class FormulaTable {
 public:
  explicit FormulaTable(const EnumSpec& spec) : spec_(spec) {}

  const std::vector<Formula>& OfSize(int n) {
    while (static_cast<int>(by_size_.size()) <= n) Grow();
    return by_size_[n];
  }

 private:
  void Grow() {
    const int n = static_cast<int>(by_size_.size());
    std::vector<Formula> out;
    if (n == 1) {
      for (int v = 1; v <= spec_.var_count; ++v) out.push_back(Formula::Var(v));
      if (spec_.allow_unit) out.push_back(Formula::Unit());
    } else if (n >= 2) {
      for (Formula f : by_size_[n - 1]) out.push_back(Formula::Diamond(f));
      for (Formula f : by_size_[n - 1]) out.push_back(Formula::BracketInv(f));
      for (int k = 0; k < 3; ++k) {
        for (int left = 1; left <= n - 2; ++left) {
          for (Formula a : by_size_[left]) {
            for (Formula b : by_size_[n - 1 - left]) {
              switch (k) {
                case 0: out.push_back(Formula::Under(a, b)); break;
                case 1: out.push_back(Formula::Over(a, b)); break;
                default: out.push_back(Formula::Prod(a, b)); break;
              }
            }
          }
        }
      }
    }
    by_size_.push_back(std::move(out));
  }

  EnumSpec spec_;
  std::vector<std::vector<Formula>> by_size_;
};

// Structures of an exact formula size, each tagged with its group count.
class StructureTable {
 public:
  explicit StructureTable(const EnumSpec& spec)
      : spec_(spec), formulas_(spec) {}

  using Tagged = std::vector<std::pair<Structure, int>>;

  // Sequences of exact size `size` using at most `groups` bracket pairs.
  const Tagged& Sequences(int size, int groups) {
    const auto key = std::make_pair(size, groups);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Tagged out;
    if (size == 0) out.emplace_back(Structure{}, 0);
    for (int first = 0; first <= size; ++first) {
      for (const auto& [item, used] : Items(first, groups)) {
        for (const auto& [rest, rest_used] :
             Sequences(size - first, groups - used)) {
          Structure s{item};
          s.items.insert(s.items.end(), rest.items.begin(), rest.items.end());
          out.emplace_back(std::move(s), used + rest_used);
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<std::pair<Item, int>> Items(int size, int groups) {
    std::vector<std::pair<Item, int>> out;
    if (size >= 1) {
      for (Formula f : formulas_.OfSize(size)) out.emplace_back(Item::Atom(f), 0);
    }
    if (spec_.allow_brackets && groups >= 1) {
      for (const auto& [inner, used] : Sequences(size, groups - 1)) {
        out.emplace_back(Item::Group(inner), used + 1);
      }
    }
    return out;
  }

  EnumSpec spec_;
  FormulaTable formulas_;
  std::map<std::pair<int, int>, Tagged> memo_;
};

int GroupBudget(const EnumSpec& spec) {
  return spec.allow_brackets ? spec.max_group_pairs : 0;
}

}  // namespace

std::vector<Formula> formulas_of_size(const EnumSpec& spec, int size) {
  if (size < 1) return {};
  FormulaTable table(spec);
  return table.OfSize(size);
}

std::vector<Formula> enumerate_formulas(const EnumSpec& spec) {
  FormulaTable table(spec);
  std::vector<Formula> out;
  for (int n = 1; n <= spec.max_size; ++n) {
    const auto& level = table.OfSize(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Structure> structures_of_size(const EnumSpec& spec, int size) {
  StructureTable table(spec);
  std::vector<Structure> out;
  for (const auto& [s, used] : table.Sequences(size, GroupBudget(spec))) {
    out.push_back(s);
  }
  return out;
}

std::vector<Sequent> enumerate_sequents(const EnumSpec& spec) {
  FormulaTable formulas(spec);
  StructureTable structures(spec);
  std::vector<Sequent> out;
  for (int total = 1; total <= spec.max_size; ++total) {
    for (int ante = 0; ante < total; ++ante) {
      const auto& antecedents = structures.Sequences(ante, GroupBudget(spec));
      const auto& succedents = formulas.OfSize(total - ante);
      for (const auto& [s, used] : antecedents) {
        for (Formula c : succedents) out.push_back(Sequent{s, c});
      }
    }
  }
  return out;
}

}  // namespace lambek
