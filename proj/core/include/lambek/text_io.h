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

// ASCII syntax for formulas, structures and sequents.
//
//   atoms        1   p1 p2 ...   or any other identifier (q, np, s_1, ...)
//   unary        <>A   []^-1 A   (alias []-1 A)          tightest
//   product      A * B                                    left-assoc
//   divisions    A \ B   B / A   (equal precedence)       left-assoc, loosest
//   structures   comma-separated formulas and [ ... ] groups
//   sequents     STRUCTURE -> FORMULA   (empty antecedent: "-> A")
//
// `pN` always denotes variable N. Other identifiers are bound through a
// SymbolTable to the smallest indices not taken by any `pN` in the text.

#ifndef LAMBEK_TEXT_IO_H_
#define LAMBEK_TEXT_IO_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "lambek/errors.h"
#include "lambek/formula.h"
#include "lambek/structure.h"

namespace lambek {

class SymbolTable {
 public:
  // Marks every `pN` mentioned in `text` as taken, so that bare names parsed
  // later (from any text) avoid them. Throws SyntaxError on lexical errors.
  void reserve_from(std::string_view text);
  void reserve(int index) { reserved_.insert(index); }

  // Index bound to a bare name, allocating the smallest free one if new.
  int bind(const std::string& name);
  std::optional<int> lookup(const std::string& name) const;

  // Display name: the bare name bound to `index`, or "p<index>".
  std::string name(int index) const;

  bool empty() const { return by_name_.empty(); }

 private:
  std::map<std::string, int> by_name_;
  std::map<int, std::string> by_index_;
  std::set<int> reserved_;
};

Formula parse_formula(std::string_view text);
Formula parse_formula(std::string_view text, SymbolTable& symbols);

Structure parse_structure(std::string_view text);
Structure parse_structure(std::string_view text, SymbolTable& symbols);

Sequent parse_sequent(std::string_view text);
Sequent parse_sequent(std::string_view text, SymbolTable& symbols);

// Printers. Without a symbol table every variable prints as pN. Divisions
// nested directly under a division are always parenthesized; everything
// else gets the minimal parentheses the precedence rules require.
std::string format_formula(Formula f, const SymbolTable* symbols = nullptr);
std::string format_structure(const Structure& s,
                             const SymbolTable* symbols = nullptr);
std::string format_sequent(const Sequent& s,
                           const SymbolTable* symbols = nullptr);

}  // namespace lambek

#endif  // LAMBEK_TEXT_IO_H_
