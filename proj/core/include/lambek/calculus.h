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

// Backward rule tables for Lb*, Lb*1 and the reformulated Lb*1'.
//
// backward_steps() is the single source of truth for what a rule instance
// is: the prover searches over it and check_derivation() validates against
// it.

#ifndef LAMBEK_CALCULUS_H_
#define LAMBEK_CALCULUS_H_

#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "lambek/structure.h"

namespace lambek {

enum class CalculusId {
  kLbStar,           // Lb*: no unit
  kLbStarOne,        // Lb*1: Lb* plus (1->) and (->1)
  kLbStarOnePrimed,  // Lb*1': units absorbed by primed axioms and rules
};

enum class RuleId {
  kAx,
  kUnderL,
  kUnderR,
  kOverL,
  kOverR,
  kProdL,
  kProdR,
  kDiamondL,
  kDiamondR,
  kBracketInvL,
  kBracketInvR,
  kUnitL,
  kUnitR,
  kAxP,
  kUnitRP,
  kDiamondRP,
  kBracketInvLP,
};

inline constexpr std::size_t kRuleCount = 17;

// Set of rules, indexed by RuleId.
using RuleMask = std::bitset<kRuleCount>;

inline RuleMask MaskOf(std::initializer_list<RuleId> rules) {
  RuleMask m;
  for (RuleId r : rules) m.set(static_cast<std::size_t>(r));
  return m;
}

// "Ax", "UnderL", ... as used in derivation dumps.
std::string_view rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);

// "lbstar", "lbstar1", "lbstar1p".
std::string_view calculus_name(CalculusId cal);
std::optional<CalculusId> calculus_from_name(std::string_view name);

// Rules that can occur in derivations of `cal`.
RuleMask rules_of(CalculusId cal);

struct Step {
  RuleId rule;
  std::vector<Sequent> premises;

  friend bool operator==(const Step&, const Step&) = default;
};

// Every rule instance of `cal` whose conclusion is exactly `goal`, without
// duplicates. Order: axioms, then the right rule for the succedent (product
// splits with the shortest left part first), then left rules by occurrence
// in pre-order (for divisions, the shortest argument sequence first).
// Rules in `disabled` are skipped.
//
// Throws InvalidInput if cal is Lb* and the goal mentions the unit.
std::vector<Step> backward_steps(const Sequent& goal, CalculusId cal,
                                 RuleMask disabled = {});

struct Derivation {
  RuleId rule;
  Sequent conclusion;
  std::vector<Derivation> premises;

  // Number of nodes on the longest branch.
  std::size_t height() const;
  // Whether `rule` labels any node.
  bool uses(RuleId rule) const;
};

// True iff every node is an instance of its rule in `cal`.
bool check_derivation(const Derivation& d, CalculusId cal);

// Cut: from Π -> A and Δ(A) -> C, where Δ(A) = plug(occ, A), builds
// Δ(Π) -> C. Throws InvalidCut if plug(occ, A) is not right's antecedent.
Sequent cut_compose(const Sequent& left, const Sequent& right,
                    const Context& occ);

// Necessary condition for derivability in all three calculi: for every
// variable, positive and negative occurrences balance, and the number of
// antecedent bracket pairs matches the bracket modalities (each pair is
// created or consumed by exactly one <> or []^-1 rule).
bool counts_balanced(const Sequent& s);
// The two halves of counts_balanced. bracket_balance is zero iff the bracket
// count matches; each extra antecedent group raises it by one.
int bracket_balance(const Sequent& s);
bool variables_balanced(const Sequent& s);

}  // namespace lambek

#endif  // LAMBEK_CALCULUS_H_
