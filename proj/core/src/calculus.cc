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

#include "lambek/calculus.h"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>

#include "lambek/errors.h"

namespace lambek {
namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "Ax",        "UnderL",       "UnderR",   "OverL",     "OverR",
    "ProdL",     "ProdR",        "DiamondL", "DiamondR",  "BracketInvL",
    "BracketInvR", "UnitL",      "UnitR",    "AxP",       "UnitRP",
    "DiamondRP", "BracketInvLP",
};

bool IsUnitAtom(const Item& item) {
  return item.is_atom() && item.formula().is_unit();
}

// If `items` is 1^k, x, 1^m with exactly one item x that is not a unit atom
// and satisfies `pred`, returns the index of x.
template <typename Pred>
std::optional<std::size_t> PaddedByUnits(const std::vector<Item>& items,
                                         Pred&& pred) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (IsUnitAtom(items[i])) continue;
    if (found || !pred(items[i])) return std::nullopt;
    found = i;
  }
  return found;
}

// Copy of `root` in which items [begin, end) of the sequence at `path` are
// replaced by `replacement`.
Structure Splice(const Structure& root, const std::vector<std::size_t>& path,
                 std::size_t begin, std::size_t end,
                 const std::vector<Item>& replacement) {
  Structure out = root;
  std::vector<Item>* level = &out.items;
  for (std::size_t index : path) level = &(*level)[index].mutable_inner().items;
  level->erase(level->begin() + static_cast<std::ptrdiff_t>(begin),
               level->begin() + static_cast<std::ptrdiff_t>(end));
  level->insert(level->begin() + static_cast<std::ptrdiff_t>(begin),
                replacement.begin(), replacement.end());
  return out;
}

Structure Slice(const std::vector<Item>& items, std::size_t begin,
                std::size_t end) {
  return Structure(std::vector<Item>(
      items.begin() + static_cast<std::ptrdiff_t>(begin),
      items.begin() + static_cast<std::ptrdiff_t>(end)));
}

class StepBuilder {
 public:
  StepBuilder(const Sequent& goal, CalculusId cal, RuleMask disabled)
      : goal_(goal), cal_(cal), disabled_(disabled) {}

  std::vector<Step> Build() {
    Axioms();
    RightRules();
    std::vector<std::size_t> path;
    LeftRules(goal_.antecedent, path);
    return std::move(steps_);
  }

 private:
  bool primed() const { return cal_ == CalculusId::kLbStarOnePrimed; }

  void Add(RuleId rule, std::vector<Sequent> premises) {
    if (disabled_.test(static_cast<std::size_t>(rule))) return;
    SequentKey key{static_cast<std::uint32_t>(rule)};
    for (const Sequent& p : premises) {
      SequentKey k = sequent_key(p);
      key.push_back(static_cast<std::uint32_t>(k.size()));
      key.insert(key.end(), k.begin(), k.end());
    }
    if (!seen_.insert(std::move(key)).second) return;
    steps_.push_back(Step{rule, std::move(premises)});
  }

  void Axioms() {
    const auto& items = goal_.antecedent.items;
    const Formula c = goal_.succedent;
    if (c.is_var()) {
      if (primed()) {
        auto is_c = [&](const Item& it) {
          return it.is_atom() && it.formula() == c;
        };
        if (PaddedByUnits(items, is_c)) Add(RuleId::kAxP, {});
      } else if (items.size() == 1 && items[0].is_atom() &&
                 items[0].formula() == c) {
        Add(RuleId::kAx, {});
      }
    }
    if (c.is_unit()) {
      if (primed()) {
        if (std::all_of(items.begin(), items.end(), IsUnitAtom)) {
          Add(RuleId::kUnitRP, {});
        }
      } else if (cal_ == CalculusId::kLbStarOne && items.empty()) {
        Add(RuleId::kUnitR, {});
      }
    }
  }

  void RightRules() {
    const Structure& ante = goal_.antecedent;
    const Formula c = goal_.succedent;
    switch (c.kind()) {
      case Connective::kUnder:  // Π -> A\B  from  A, Π -> B
        Add(RuleId::kUnderR,
            {Sequent{Concat(Structure{c.left()}, ante), c.right()}});
        break;
      case Connective::kOver:  // Π -> B/A  from  Π, A -> B
        Add(RuleId::kOverR,
            {Sequent{Concat(ante, Structure{c.right()}), c.left()}});
        break;
      case Connective::kProd:
        for (std::size_t i = 0; i <= ante.items.size(); ++i) {
          Add(RuleId::kProdR,
              {Sequent{Slice(ante.items, 0, i), c.left()},
               Sequent{Slice(ante.items, i, ante.items.size()), c.right()}});
        }
        break;
      case Connective::kDiamond:
        if (primed()) {
          auto group = PaddedByUnits(
              ante.items, [](const Item& it) { return it.is_group(); });
          if (group) {
            Add(RuleId::kDiamondRP,
                {Sequent{ante.items[*group].inner(), c.body()}});
          }
        } else if (ante.items.size() == 1 && ante.items[0].is_group()) {
          Add(RuleId::kDiamondR, {Sequent{ante.items[0].inner(), c.body()}});
        }
        break;
      case Connective::kBracketInv:
        Add(RuleId::kBracketInvR, {Sequent{Bracket(ante), c.body()}});
        break;
      default:
        break;
    }
  }

  Sequent WithAntecedent(Structure s) const {
    return Sequent{std::move(s), goal_.succedent};
  }

  void LeftRules(const Structure& level, std::vector<std::size_t>& path) {
    const Structure& root = goal_.antecedent;
    const auto& items = level.items;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& item = items[i];
      if (item.is_group()) {
        GroupRule(item.inner(), path, i);
        path.push_back(i);
        LeftRules(item.inner(), path);
        path.pop_back();
        continue;
      }
      const Formula f = item.formula();
      switch (f.kind()) {
        case Connective::kUnder:  // Δ(Π, A\B) -> C
          for (std::size_t begin = i + 1; begin-- > 0;) {
            Add(RuleId::kUnderL,
                {Sequent{Slice(items, begin, i), f.left()},
                 WithAntecedent(Splice(root, path, begin, i + 1,
                                       {Item::Atom(f.right())}))});
          }
          break;
        case Connective::kOver:  // Δ(B/A, Π) -> C
          for (std::size_t end = i + 1; end <= items.size(); ++end) {
            Add(RuleId::kOverL,
                {Sequent{Slice(items, i + 1, end), f.right()},
                 WithAntecedent(
                     Splice(root, path, i, end, {Item::Atom(f.left())}))});
          }
          break;
        case Connective::kProd:
          Add(RuleId::kProdL,
              {WithAntecedent(Splice(
                  root, path, i, i + 1,
                  {Item::Atom(f.left()), Item::Atom(f.right())}))});
          break;
        case Connective::kDiamond:
          Add(RuleId::kDiamondL,
              {WithAntecedent(Splice(root, path, i, i + 1,
                                     {Item::Group(Structure{f.body()})}))});
          break;
        case Connective::kUnit:
          if (cal_ == CalculusId::kLbStarOne) {
            Add(RuleId::kUnitL, {WithAntecedent(Splice(root, path, i, i + 1, {}))});
          }
          break;
        default:
          break;
      }
    }
  }

  // ([]^-1 ->) on the group at position `index` of the sequence at `path`.
  void GroupRule(const Structure& inner, const std::vector<std::size_t>& path,
                 std::size_t index) {
    auto is_inv = [](const Item& it) {
      return it.is_atom() && it.formula().kind() == Connective::kBracketInv;
    };
    std::optional<std::size_t> at;
    RuleId rule = RuleId::kBracketInvL;
    if (primed()) {
      at = PaddedByUnits(inner.items, is_inv);
      rule = RuleId::kBracketInvLP;
    } else if (inner.items.size() == 1 && is_inv(inner.items[0])) {
      at = 0;
    }
    if (!at) return;
    const Formula body = inner.items[*at].formula().body();
    Add(rule, {WithAntecedent(Splice(goal_.antecedent, path, index, index + 1,
                                     {Item::Atom(body)}))});
  }

  const Sequent& goal_;
  CalculusId cal_;
  RuleMask disabled_;
  std::vector<Step> steps_;
  std::unordered_set<SequentKey, SequentKeyHash> seen_;
};

bool CheckNode(const Derivation& d, CalculusId cal) {
  std::vector<Step> steps = backward_steps(d.conclusion, cal);
  const bool matched =
      std::any_of(steps.begin(), steps.end(), [&](const Step& step) {
        if (step.rule != d.rule || step.premises.size() != d.premises.size()) {
          return false;
        }
        for (std::size_t i = 0; i < step.premises.size(); ++i) {
          if (!(step.premises[i] == d.premises[i].conclusion)) return false;
        }
        return true;
      });
  if (!matched) return false;
  return std::all_of(d.premises.begin(), d.premises.end(),
                     [&](const Derivation& p) { return CheckNode(p, cal); });
}

void AddCounts(Formula f, int sign, std::map<int, int>& vars, int& brackets) {
  switch (f.kind()) {
    case Connective::kVar:
      vars[f.var()] += sign;
      return;
    case Connective::kUnit:
      return;
    case Connective::kUnder:
      AddCounts(f.left(), -sign, vars, brackets);
      AddCounts(f.right(), sign, vars, brackets);
      return;
    case Connective::kOver:
      AddCounts(f.left(), sign, vars, brackets);
      AddCounts(f.right(), -sign, vars, brackets);
      return;
    case Connective::kProd:
      AddCounts(f.left(), sign, vars, brackets);
      AddCounts(f.right(), sign, vars, brackets);
      return;
    case Connective::kDiamond:
      brackets -= sign;
      AddCounts(f.body(), sign, vars, brackets);
      return;
    case Connective::kBracketInv:
      brackets += sign;
      AddCounts(f.body(), sign, vars, brackets);
      return;
  }
}

void AddStructureCounts(const Structure& s, std::map<int, int>& vars,
                        int& brackets) {
  for (const Item& item : s.items) {
    if (item.is_atom()) {
      AddCounts(item.formula(), -1, vars, brackets);
    } else {
      brackets += 1;
      AddStructureCounts(item.inner(), vars, brackets);
    }
  }
}

}  // namespace

std::string_view rule_name(RuleId rule) {
  return kRuleNames[static_cast<std::size_t>(rule)];
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

std::string_view calculus_name(CalculusId cal) {
  switch (cal) {
    case CalculusId::kLbStar:
      return "lbstar";
    case CalculusId::kLbStarOne:
      return "lbstar1";
    case CalculusId::kLbStarOnePrimed:
      return "lbstar1p";
  }
  return "";
}

std::optional<CalculusId> calculus_from_name(std::string_view name) {
  if (name == "lbstar") return CalculusId::kLbStar;
  if (name == "lbstar1") return CalculusId::kLbStarOne;
  if (name == "lbstar1p") return CalculusId::kLbStarOnePrimed;
  return std::nullopt;
}

RuleMask rules_of(CalculusId cal) {
  RuleMask base = MaskOf({RuleId::kUnderL, RuleId::kUnderR, RuleId::kOverL,
                          RuleId::kOverR, RuleId::kProdL, RuleId::kProdR,
                          RuleId::kDiamondL, RuleId::kBracketInvR});
  switch (cal) {
    case CalculusId::kLbStar:
      return base | MaskOf({RuleId::kAx, RuleId::kDiamondR,
                            RuleId::kBracketInvL});
    case CalculusId::kLbStarOne:
      return base | MaskOf({RuleId::kAx, RuleId::kDiamondR,
                            RuleId::kBracketInvL, RuleId::kUnitL,
                            RuleId::kUnitR});
    case CalculusId::kLbStarOnePrimed:
      return base | MaskOf({RuleId::kAxP, RuleId::kUnitRP, RuleId::kDiamondRP,
                            RuleId::kBracketInvLP});
  }
  return base;
}

std::vector<Step> backward_steps(const Sequent& goal, CalculusId cal,
                                 RuleMask disabled) {
  if (cal == CalculusId::kLbStar && goal.contains_unit()) {
    throw InvalidInput("the unit constant 1 is not part of Lb*");
  }
  return StepBuilder(goal, cal, disabled).Build();
}

std::size_t Derivation::height() const {
  std::size_t h = 0;
  for (const Derivation& p : premises) h = std::max(h, p.height());
  return h + 1;
}

bool Derivation::uses(RuleId r) const {
  if (rule == r) return true;
  return std::any_of(premises.begin(), premises.end(),
                     [r](const Derivation& p) { return p.uses(r); });
}

bool check_derivation(const Derivation& d, CalculusId cal) {
  try {
    return CheckNode(d, cal);
  } catch (const InvalidInput&) {
    return false;
  }
}

Sequent cut_compose(const Sequent& left, const Sequent& right,
                    const Context& occ) {
  // Validate the hole address before plugging into it.
  const Structure* level = &occ.frame;
  for (std::size_t index : occ.path) {
    if (index >= level->items.size() || !level->items[index].is_group()) {
      throw InvalidCut("context path does not address a group");
    }
    level = &level->items[index].inner();
  }
  if (occ.slot > level->items.size()) {
    throw InvalidCut("context slot out of range");
  }
  if (!(plug(occ, Item::Atom(left.succedent)) == right.antecedent)) {
    throw InvalidCut("the designated occurrence is not the cut formula");
  }
  return Sequent{plug(occ, left.antecedent), right.succedent};
}

int bracket_balance(const Sequent& s) {
  std::map<int, int> vars;
  int brackets = 0;
  AddStructureCounts(s.antecedent, vars, brackets);
  AddCounts(s.succedent, +1, vars, brackets);
  return brackets;
}

bool variables_balanced(const Sequent& s) {
  std::map<int, int> vars;
  int brackets = 0;
  AddStructureCounts(s.antecedent, vars, brackets);
  AddCounts(s.succedent, +1, vars, brackets);
  return std::all_of(vars.begin(), vars.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

bool counts_balanced(const Sequent& s) {
  return bracket_balance(s) == 0 && variables_balanced(s);
}

}  // namespace lambek
