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

#include "lambek/translate.h"

#include <string>

#include "lambek/errors.h"

namespace lambek {
namespace {

Formula QQ(FreshVar q) {
  const Formula v = Formula::Var(q.q);
  return Formula::Under(v, v);
}

// (q\q) * a * (q\q), associated to the left.
Formula Padded(Formula a, FreshVar q) {
  return Formula::Prod(Formula::Prod(QQ(q), a), QQ(q));
}

Formula Minus(Formula a, FreshVar q, TauTable t);

Formula Plus(Formula a, FreshVar q, TauTable t) {
  const bool mixed = t == TauTable::kMixedPolarity;
  switch (a.kind()) {
    case Connective::kUnit:
      return QQ(q);
    case Connective::kVar:
      return Padded(a, q);
    case Connective::kUnder:
      return Formula::Under(Minus(a.left(), q, t), Plus(a.right(), q, t));
    case Connective::kOver:
      return Formula::Over(Plus(a.left(), q, t),
                           mixed ? Plus(a.right(), q, t) : Minus(a.right(), q, t));
    case Connective::kProd:
      return Formula::Prod(Plus(a.left(), q, t), Plus(a.right(), q, t));
    case Connective::kDiamond:
      return Padded(Formula::Diamond(Plus(a.body(), q, t)), q);
    case Connective::kBracketInv:
      return Formula::BracketInv(mixed ? Minus(a.body(), q, t)
                                       : Plus(a.body(), q, t));
  }
  return a;
}

Formula Minus(Formula a, FreshVar q, TauTable t) {
  const bool mixed = t == TauTable::kMixedPolarity;
  switch (a.kind()) {
    case Connective::kUnit:
      return QQ(q);
    case Connective::kVar:
      return a;
    case Connective::kUnder:
      return Formula::Under(mixed ? Minus(a.left(), q, t) : Plus(a.left(), q, t),
                            Minus(a.right(), q, t));
    case Connective::kOver:
      return Formula::Over(Minus(a.left(), q, t), Plus(a.right(), q, t));
    case Connective::kProd:
      return Formula::Prod(Minus(a.left(), q, t), Minus(a.right(), q, t));
    case Connective::kDiamond:
      return Formula::Diamond(Minus(a.body(), q, t));
    case Connective::kBracketInv:
      return Formula::Over(
          Formula::Under(QQ(q), Formula::BracketInv(Minus(a.body(), q, t))),
          QQ(q));
  }
  return a;
}

void RequireFresh(Formula a, FreshVar q) {
  if (q.q < 1) throw NotFresh("q must be a positive variable index");
  if (a.contains_var(q.q)) {
    throw NotFresh("variable p" + std::to_string(q.q) +
                   " occurs in the input and cannot serve as q");
  }
}

}  // namespace

Formula tau_plus(Formula a, FreshVar q, TauTable table) {
  RequireFresh(a, q);
  return Plus(a, q, table);
}

Formula tau_minus(Formula a, FreshVar q, TauTable table) {
  RequireFresh(a, q);
  return Minus(a, q, table);
}

Structure tau_minus_structure(const Structure& s, FreshVar q, TauTable table) {
  return map_atoms(s, [q, table](Formula f) { return tau_minus(f, q, table); });
}

FreshVar fresh_q(const Sequent& s) {
  const std::set<int> used = variables(s);
  int q = 1;
  while (used.count(q)) ++q;
  return FreshVar{q};
}

Translation translate_sequent(const Sequent& s, TauTable table) {
  const FreshVar q = fresh_q(s);
  return Translation{translate_sequent(s, q, table), q};
}

Sequent translate_sequent(const Sequent& s, FreshVar q, TauTable table) {
  return Sequent{tau_minus_structure(s.antecedent, q, table),
                 tau_plus(s.succedent, q, table)};
}

Formula substitute_unit_for_var(Formula a, FreshVar q) {
  return substitute(a, q.q, Formula::Unit());
}

Structure substitute_unit_for_var(const Structure& s, FreshVar q) {
  return map_atoms(s, [q](Formula f) { return substitute_unit_for_var(f, q); });
}

Sequent substitute_unit_for_var(const Sequent& s, FreshVar q) {
  return Sequent{substitute_unit_for_var(s.antecedent, q),
                 substitute_unit_for_var(s.succedent, q)};
}

}  // namespace lambek
