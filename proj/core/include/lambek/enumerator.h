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

// Exhaustive generators of formulas, structures and sequents by size.
//
// Output is ordered by size (total size for sequents), so the output for a
// bound n is a prefix of the output for n + 1.

#ifndef LAMBEK_ENUMERATOR_H_
#define LAMBEK_ENUMERATOR_H_

#include <cstddef>
#include <vector>

#include "lambek/formula.h"
#include "lambek/structure.h"

namespace lambek {

struct EnumSpec {
  // Bound on formula size, or on total sequent size (antecedent plus
  // succedent, brackets free).
  int max_size = 1;
  // Variables p1 .. p_var_count.
  int var_count = 1;
  bool allow_unit = false;
  bool allow_brackets = false;
  // Bound on bracket pairs per antecedent (ignored without brackets).
  // Empty groups count as pairs too.
  int max_group_pairs = 0;
};

// Atoms first (p1 .. pn, then 1), then by size; within a size: <>, []^-1,
// then \, /, * over every split of the remaining size.
std::vector<Formula> enumerate_formulas(const EnumSpec& spec);

// Formulas of exactly `size`, in the order above.
std::vector<Formula> formulas_of_size(const EnumSpec& spec, int size);

// Antecedent structures whose formula sizes sum to exactly `size`.
std::vector<Structure> structures_of_size(const EnumSpec& spec, int size);

// Sequents by total size; within a size by antecedent size, then
// antecedent, then succedent.
std::vector<Sequent> enumerate_sequents(const EnumSpec& spec);

}  // namespace lambek

#endif  // LAMBEK_ENUMERATOR_H_
