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

#include "lambek/text_io.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

namespace lambek {
namespace {

enum class Tok {
  kIdent,
  kUnit,
  kDiamond,
  kBracketInv,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kBackslash,
  kSlash,
  kStar,
  kComma,
  kArrow,
  kEnd,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto starts_with = [&](std::size_t at, std::string_view s) {
    return text.substr(at, s.size()) == s;
  };
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (IsIdentStart(c)) {
      while (i < n && IsIdentChar(text[i])) ++i;
      out.push_back({Tok::kIdent, start, std::string(text.substr(start, i - start))});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && IsIdentChar(text[i])) ++i;
      if (text.substr(start, i - start) != "1") {
        throw SyntaxError(start, "unexpected number '" +
                                     std::string(text.substr(start, i - start)) +
                                     "' (only the unit 1 is a numeric atom)");
      }
      out.push_back({Tok::kUnit, start, "1"});
      continue;
    }
    if (starts_with(i, "[]^-1")) {
      out.push_back({Tok::kBracketInv, start, "[]^-1"});
      i += 5;
      continue;
    }
    if (starts_with(i, "[]-1")) {
      out.push_back({Tok::kBracketInv, start, "[]-1"});
      i += 4;
      continue;
    }
    if (starts_with(i, "<>")) {
      out.push_back({Tok::kDiamond, start, "<>"});
      i += 2;
      continue;
    }
    if (starts_with(i, "->")) {
      out.push_back({Tok::kArrow, start, "->"});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '\\': kind = Tok::kBackslash; break;
      case '/': kind = Tok::kSlash; break;
      case '*': kind = Tok::kStar; break;
      case ',': kind = Tok::kComma; break;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::kEnd, n, ""});
  return out;
}

// Index of a `pN` identifier, or nullopt for a bare name.
std::optional<int> ExplicitIndex(const Token& t) {
  if (t.text.size() < 2 || t.text[0] != 'p') return std::nullopt;
  for (std::size_t i = 1; i < t.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return std::nullopt;
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data() + 1,
                                   t.text.data() + t.text.size(), value);
  if (ec != std::errc() || value < 1) {
    throw SyntaxError(t.pos, "variable index out of range in '" + t.text + "'");
  }
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, SymbolTable& symbols)
      : tokens_(Lex(text)), symbols_(symbols) {
    for (const Token& t : tokens_) {
      if (t.kind == Tok::kIdent) {
        if (auto index = ExplicitIndex(t)) symbols_.reserve(*index);
      }
    }
  }

  Formula ParseWholeFormula() {
    Formula f = ParseFormula();
    Expect(Tok::kEnd, "end of input");
    return f;
  }

  Structure ParseWholeStructure() {
    Structure s = ParseSequence();
    Expect(Tok::kEnd, "end of input");
    return s;
  }

  Sequent ParseWholeSequent() {
    Structure antecedent;
    if (Peek().kind != Tok::kArrow) antecedent = ParseSequence();
    Expect(Tok::kArrow, "'->'");
    Formula succedent = ParseFormula();
    Expect(Tok::kEnd, "end of input");
    return Sequent{std::move(antecedent), succedent};
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  void Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      throw SyntaxError(Peek().pos, std::string("expected ") + what + Found());
    }
    ++pos_;
  }

  std::string Found() const {
    const Token& t = Peek();
    if (t.kind == Tok::kEnd) return ", found end of input";
    return ", found '" + t.text + "'";
  }

  Formula ParseFormula() {
    Formula f = ParseProduct();
    while (Peek().kind == Tok::kBackslash || Peek().kind == Tok::kSlash) {
      const bool under = Next().kind == Tok::kBackslash;
      Formula rhs = ParseProduct();
      f = under ? Formula::Under(f, rhs) : Formula::Over(f, rhs);
    }
    return f;
  }

  Formula ParseProduct() {
    Formula f = ParseUnary();
    while (Peek().kind == Tok::kStar) {
      Next();
      f = Formula::Prod(f, ParseUnary());
    }
    return f;
  }

  Formula ParseUnary() {
    switch (Peek().kind) {
      case Tok::kDiamond:
        Next();
        return Formula::Diamond(ParseUnary());
      case Tok::kBracketInv:
        Next();
        return Formula::BracketInv(ParseUnary());
      default:
        return ParsePrimary();
    }
  }

  Formula ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kUnit:
        Next();
        return Formula::Unit();
      case Tok::kIdent: {
        Next();
        if (auto index = ExplicitIndex(t)) {
          if (auto bound = symbols_.name(*index);
              bound != "p" + std::to_string(*index)) {
            throw SyntaxError(t.pos, "'" + t.text + "' is already bound to '" +
                                         bound + "'");
          }
          return Formula::Var(*index);
        }
        return Formula::Var(symbols_.bind(t.text));
      }
      case Tok::kLParen: {
        Next();
        Formula f = ParseFormula();
        Expect(Tok::kRParen, "')'");
        return f;
      }
      default:
        throw SyntaxError(t.pos, "expected a formula" + Found());
    }
  }

  // Possibly empty; stops before ']', '->' or end of input.
  Structure ParseSequence() {
    Structure s;
    const Tok first = Peek().kind;
    if (first == Tok::kRBracket || first == Tok::kArrow || first == Tok::kEnd) {
      return s;
    }
    s.items.push_back(ParseItem());
    while (Peek().kind == Tok::kComma) {
      Next();
      s.items.push_back(ParseItem());
    }
    return s;
  }

  Item ParseItem() {
    if (Peek().kind == Tok::kLBracket) {
      const std::size_t open = Peek().pos;
      Next();
      Structure inner = ParseSequence();
      if (Peek().kind != Tok::kRBracket) {
        throw SyntaxError(Peek().pos, "unmatched '[' opened at " +
                                          std::to_string(open) + Found());
      }
      Next();
      return Item::Group(std::move(inner));
    }
    if (Peek().kind == Tok::kRBracket) {
      throw SyntaxError(Peek().pos, "unmatched ']'");
    }
    return Item::Atom(ParseFormula());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SymbolTable& symbols_;
};

enum class Prec { kDivision = 0, kProduct = 1, kUnary = 2, kAtom = 3 };

Prec PrecOf(Formula f) {
  switch (f.kind()) {
    case Connective::kUnder:
    case Connective::kOver:
      return Prec::kDivision;
    case Connective::kProd:
      return Prec::kProduct;
    case Connective::kDiamond:
    case Connective::kBracketInv:
      return Prec::kUnary;
    default:
      return Prec::kAtom;
  }
}

void Format(Formula f, const SymbolTable* symbols, std::string& out);

void FormatWrapped(Formula f, bool wrap, const SymbolTable* symbols,
                   std::string& out) {
  if (wrap) out += '(';
  Format(f, symbols, out);
  if (wrap) out += ')';
}

void Format(Formula f, const SymbolTable* symbols, std::string& out) {
  switch (f.kind()) {
    case Connective::kVar:
      out += symbols ? symbols->name(f.var()) : "p" + std::to_string(f.var());
      return;
    case Connective::kUnit:
      out += '1';
      return;
    case Connective::kDiamond:
      out += "<>";
      FormatWrapped(f.body(), PrecOf(f.body()) < Prec::kUnary, symbols, out);
      return;
    case Connective::kBracketInv:
      out += "[]^-1 ";
      FormatWrapped(f.body(), PrecOf(f.body()) < Prec::kUnary, symbols, out);
      return;
    case Connective::kProd:
      FormatWrapped(f.left(), PrecOf(f.left()) < Prec::kProduct, symbols, out);
      out += " * ";
      FormatWrapped(f.right(), PrecOf(f.right()) <= Prec::kProduct, symbols,
                    out);
      return;
    case Connective::kUnder:
    case Connective::kOver: {
      const bool spaced = !f.left().is_atomic() || !f.right().is_atomic();
      FormatWrapped(f.left(), PrecOf(f.left()) == Prec::kDivision, symbols,
                    out);
      const char* op = f.kind() == Connective::kUnder ? "\\" : "/";
      if (spaced) {
        out += ' ';
        out += op;
        out += ' ';
      } else {
        out += op;
      }
      FormatWrapped(f.right(), PrecOf(f.right()) == Prec::kDivision, symbols,
                    out);
      return;
    }
  }
}

void FormatStructure(const Structure& s, const SymbolTable* symbols,
                     std::string& out) {
  bool first = true;
  for (const Item& item : s.items) {
    if (!first) out += ", ";
    first = false;
    if (item.is_atom()) {
      Format(item.formula(), symbols, out);
    } else {
      out += '[';
      FormatStructure(item.inner(), symbols, out);
      out += ']';
    }
  }
}

}  // namespace

void SymbolTable::reserve_from(std::string_view text) {
  for (const Token& t : Lex(text)) {
    if (t.kind != Tok::kIdent) continue;
    if (auto index = ExplicitIndex(t)) reserve(*index);
  }
}

int SymbolTable::bind(const std::string& name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  int index = 1;
  while (reserved_.count(index) || by_index_.count(index)) ++index;
  by_name_.emplace(name, index);
  by_index_.emplace(index, name);
  return index;
}

std::optional<int> SymbolTable::lookup(const std::string& name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  return std::nullopt;
}

std::string SymbolTable::name(int index) const {
  if (auto it = by_index_.find(index); it != by_index_.end()) return it->second;
  return "p" + std::to_string(index);
}

Formula parse_formula(std::string_view text) {
  SymbolTable symbols;
  return parse_formula(text, symbols);
}

Formula parse_formula(std::string_view text, SymbolTable& symbols) {
  return Parser(text, symbols).ParseWholeFormula();
}

Structure parse_structure(std::string_view text) {
  SymbolTable symbols;
  return parse_structure(text, symbols);
}

Structure parse_structure(std::string_view text, SymbolTable& symbols) {
  return Parser(text, symbols).ParseWholeStructure();
}

Sequent parse_sequent(std::string_view text) {
  SymbolTable symbols;
  return parse_sequent(text, symbols);
}

Sequent parse_sequent(std::string_view text, SymbolTable& symbols) {
  return Parser(text, symbols).ParseWholeSequent();
}

std::string format_formula(Formula f, const SymbolTable* symbols) {
  std::string out;
  Format(f, symbols, out);
  return out;
}

std::string format_structure(const Structure& s, const SymbolTable* symbols) {
  std::string out;
  FormatStructure(s, symbols, out);
  return out;
}

std::string format_sequent(const Sequent& s, const SymbolTable* symbols) {
  std::string out = format_structure(s.antecedent, symbols);
  out += out.empty() ? "-> " : " -> ";
  Format(s.succedent, symbols, out);
  return out;
}

}  // namespace lambek
