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

// Elimination of the unit constant.
//
// Two mutually recursive translations replace 1 by q\q for a fresh variable
// q, padding positive occurrences of variables and <> with q\q on both
// sides and negative occurrences of []^-1 with q\q arguments. Every
// argument position flips polarity, every other position keeps it:
//
//   tau+(1)     = q\q                  tau-(1)     = q\q
//   tau+(p)     = (q\q) * p * (q\q)    tau-(p)     = p
//   tau+(A\B)   = tau-(A) \ tau+(B)    tau-(A\B)   = tau+(A) \ tau-(B)
//   tau+(B/A)   = tau+(B) / tau-(A)    tau-(B/A)   = tau-(B) / tau+(A)
//   tau+(A*B)   = tau+(A) * tau+(B)    tau-(A*B)   = tau-(A) * tau-(B)
//   tau+(<>A)   = (q\q) * <>tau+(A) * (q\q)
//                                      tau-(<>A)   = <>tau-(A)
//   tau+([]^-1 A) = []^-1 tau+(A)      tau-([]^-1 A) = ((q\q) \ []^-1 tau-(A)) / (q\q)
//
// A sequent Π -> C of Lb*1 is derivable iff tau-(Π) -> tau+(C) is derivable
// in Lb*, where tau- acts on structures atom by atom.
//
// TauTable::kMixedPolarity selects the older variant of the table with
// tau-(A\B) = tau-(A) \ tau-(B), tau+(B/A) = tau+(B) / tau+(A) and
// tau+([]^-1 A) = []^-1 tau-(A). It does not preserve derivability; for
// instance -> []^-1 <>(p1/p1) is derivable in Lb*1 but its image is not.

#ifndef LAMBEK_TRANSLATE_H_
#define LAMBEK_TRANSLATE_H_

#include "lambek/formula.h"
#include "lambek/structure.h"

namespace lambek {

// The variable index playing the role of q.
struct FreshVar {
  int q;

  friend bool operator==(FreshVar, FreshVar) = default;
};

enum class TauTable {
  kPolarityConsistent,
  kMixedPolarity,
};

// Both throw NotFresh if variable q occurs in `a`.
Formula tau_plus(Formula a, FreshVar q,
                 TauTable table = TauTable::kPolarityConsistent);
Formula tau_minus(Formula a, FreshVar q,
                  TauTable table = TauTable::kPolarityConsistent);

Structure tau_minus_structure(const Structure& s, FreshVar q,
                              TauTable table = TauTable::kPolarityConsistent);

// Smallest positive index that does not occur in `s`.
FreshVar fresh_q(const Sequent& s);

struct Translation {
  Sequent sequent;
  FreshVar q;
};

// tau-(Π) -> tau+(C) with q = fresh_q(s).
Translation translate_sequent(
    const Sequent& s, TauTable table = TauTable::kPolarityConsistent);
// Same with a caller-chosen q; throws NotFresh if q occurs in `s`.
Sequent translate_sequent(const Sequent& s, FreshVar q,
                          TauTable table = TauTable::kPolarityConsistent);

// Replaces every occurrence of variable q by 1.
Formula substitute_unit_for_var(Formula a, FreshVar q);
Structure substitute_unit_for_var(const Structure& s, FreshVar q);
Sequent substitute_unit_for_var(const Sequent& s, FreshVar q);

}  // namespace lambek

#endif  // LAMBEK_TRANSLATE_H_
