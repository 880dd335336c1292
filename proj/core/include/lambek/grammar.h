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

// Categorial grammars over a finite alphabet.
//
// A word a1..an is s-accepted if some lexical assignment a_i |> A_i makes the
// bracket-free sequent A1, ..., An -> H derivable, and t-accepted if some
// bracketing Π of A1, ..., An (a structure whose yield is A1..An) makes
// Π -> H derivable.
//
// Grammar files are JSON:
//
//   {"alphabet": ["a", "b"],
//    "lexicon":  [["a", "np"], ["b", "np \\ s"]],
//    "target":   "s",
//    "calculus": "lbstar1"}
//
// Formula strings share one symbol table across the whole file.

#ifndef LAMBEK_GRAMMAR_H_
#define LAMBEK_GRAMMAR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambek/calculus.h"
#include "lambek/prover.h"
#include "lambek/text_io.h"
#include "lambek/translate.h"

namespace lambek {

struct Grammar {
  std::vector<std::string> alphabet;
  // The |> relation, in file order.
  std::vector<std::pair<std::string, Formula>> lexicon;
  Formula target;
  CalculusId calculus = CalculusId::kLbStarOne;
  // Display names for variables, filled by load_grammar().
  SymbolTable symbols;

  bool has_symbol(const std::string& symbol) const;
  std::vector<Formula> entries_for(const std::string& symbol) const;
  // Every variable index in the lexicon and the target.
  std::set<int> variables() const;
};

struct BracketBudget {
  // Absolute cap on bracket pairs. When unset, the cap is the number of <>
  // and []^-1 occurrences in the chosen lexical formulas and the target,
  // plus `extra_pairs`.
  std::optional<std::size_t> max_pairs;
  std::size_t extra_pairs = 0;
  bool allow_empty_groups = false;

  std::size_t resolve(std::size_t modalities) const {
    return max_pairs ? *max_pairs : modalities + extra_pairs;
  }
};

// Throws UnknownSymbol if a word symbol is not in the alphabet. When
// `prover` is given it must be a session for g.calculus; its memo is reused.
bool s_accepts(const Grammar& g, const std::vector<std::string>& word,
               Prover* prover = nullptr);
bool t_accepts(const Grammar& g, const std::vector<std::string>& word,
               const BracketBudget& budget = {}, Prover* prover = nullptr);

// Every structure with yield exactly `formulas` and at most the budgeted
// number of bracket pairs (the default cap counts modalities in `formulas`).
// Without empty groups, every group holds at least one formula.
std::vector<Structure> enumerate_bracketings(
    const std::vector<Formula>& formulas, const BracketBudget& budget = {});

// tau- on every lexical formula, tau+ on the target, calculus Lb*. q is the
// smallest index fresh for the whole grammar unless given. Requires
// g.calculus == Lb*1 (throws InvalidInput otherwise).
Grammar translate_grammar(const Grammar& g);
Grammar translate_grammar(const Grammar& g, FreshVar q);

// Throws Error (with a description) on malformed JSON or schema violations
// and SyntaxError on malformed formulas.
Grammar load_grammar(std::string_view json_text);
Grammar read_grammar_file(const std::string& path);
std::string grammar_to_json(const Grammar& g);

// Splits a command-line word: whitespace-separated symbols; a single token
// that is not itself a symbol is read one character per symbol.
std::vector<std::string> split_word(const Grammar& g, std::string_view text);

}  // namespace lambek

#endif  // LAMBEK_GRAMMAR_H_
