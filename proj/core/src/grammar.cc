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

#include "lambek/grammar.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "lambek/errors.h"

namespace lambek {

bool Grammar::has_symbol(const std::string& symbol) const {
  return std::find(alphabet.begin(), alphabet.end(), symbol) != alphabet.end();
}

std::vector<Formula> Grammar::entries_for(const std::string& symbol) const {
  std::vector<Formula> out;
  for (const auto& [s, f] : lexicon) {
    if (s == symbol) out.push_back(f);
  }
  return out;
}

std::set<int> Grammar::variables() const {
  std::set<int> out = lambek::variables(target);
  for (const auto& [s, f] : lexicon) {
    std::set<int> vs = lambek::variables(f);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

namespace {

// Per-position candidate lists for a word; empty result if some symbol has
// no lexical entry.
std::vector<std::vector<Formula>> Candidates(
    const Grammar& g, const std::vector<std::string>& word) {
  std::vector<std::vector<Formula>> out;
  out.reserve(word.size());
  for (const std::string& symbol : word) {
    if (!g.has_symbol(symbol)) {
      throw UnknownSymbol("symbol '" + symbol + "' is not in the alphabet");
    }
    out.push_back(g.entries_for(symbol));
  }
  return out;
}

// Calls `fn` on every lexical assignment until it returns true.
template <typename Fn>
bool AnyAssignment(const std::vector<std::vector<Formula>>& candidates,
                   Fn&& fn) {
  for (const auto& c : candidates) {
    if (c.empty()) return false;
  }
  std::vector<std::size_t> choice(candidates.size(), 0);
  std::vector<Formula> formulas;
  while (true) {
    formulas.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      formulas.push_back(candidates[i][choice[i]]);
    }
    if (fn(formulas)) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == candidates[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) return false;
  }
}

Prover& SessionFor(const Grammar& g, Prover* given,
                   std::unique_ptr<Prover>& local) {
  if (given) {
    if (given->calculus() != g.calculus) {
      throw std::invalid_argument("prover session is for a different calculus");
    }
    return *given;
  }
  local = std::make_unique<Prover>(g.calculus);
  return *local;
}

std::size_t Modalities(const std::vector<Formula>& formulas) {
  std::size_t n = 0;
  for (Formula f : formulas) n += static_cast<std::size_t>(f.modality_count());
  return n;
}

class Bracketer {
 public:
  Bracketer(const std::vector<Formula>& formulas, bool allow_empty)
      : formulas_(formulas), allow_empty_(allow_empty) {}

  using Tagged = std::vector<std::pair<Structure, std::size_t>>;

  // Structures with yield formulas_[begin, end) and at most `budget` groups.
  Tagged AtMost(std::size_t begin, std::size_t end, std::size_t budget) {
    Tagged out;
    for (std::size_t g = 0; g <= budget; ++g) {
      const Tagged& exact = Exact(begin, end, g);
      out.insert(out.end(), exact.begin(), exact.end());
    }
    return out;
  }

  // Structures with yield formulas_[begin, end) and exactly `groups` groups.
  const Tagged& Exact(std::size_t begin, std::size_t end, std::size_t groups) {
    const auto key = std::make_tuple(begin, end, groups);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Tagged out;
    if (begin == end && groups == 0) out.emplace_back(Structure{}, 0);
    if (begin < end) {
      for (const auto& [rest, used] : Exact(begin + 1, end, groups)) {
        Structure s{formulas_[begin]};
        s.items.insert(s.items.end(), rest.items.begin(), rest.items.end());
        out.emplace_back(std::move(s), groups);
      }
    }
    if (groups >= 1) {
      for (std::size_t split = allow_empty_ ? begin : begin + 1; split <= end;
           ++split) {
        for (std::size_t inner_groups = 0; inner_groups < groups;
             ++inner_groups) {
          const Tagged& inners = Exact(begin, split, inner_groups);
          if (inners.empty()) continue;
          const Tagged& rests = Exact(split, end, groups - 1 - inner_groups);
          for (const auto& [inner, inner_used] : inners) {
            for (const auto& [rest, rest_used] : rests) {
              Structure s{Item::Group(inner)};
              s.items.insert(s.items.end(), rest.items.begin(),
                             rest.items.end());
              out.emplace_back(std::move(s), groups);
            }
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const std::vector<Formula>& formulas_;
  bool allow_empty_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Tagged> memo_;
};

Formula ParseField(const std::string& text, SymbolTable& symbols,
                   const std::string& where) {
  try {
    return parse_formula(text, symbols);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.position(), where + ": " + e.message());
  }
}

}  // namespace

bool s_accepts(const Grammar& g, const std::vector<std::string>& word,
               Prover* prover) {
  const auto candidates = Candidates(g, word);
  std::unique_ptr<Prover> local;
  Prover& session = SessionFor(g, prover, local);
  return AnyAssignment(candidates, [&](const std::vector<Formula>& formulas) {
    Structure ante;
    for (Formula f : formulas) ante.items.push_back(Item::Atom(f));
    return session.derivable(Sequent{std::move(ante), g.target});
  });
}

bool t_accepts(const Grammar& g, const std::vector<std::string>& word,
               const BracketBudget& budget, Prover* prover) {
  const auto candidates = Candidates(g, word);
  std::unique_ptr<Prover> local;
  Prover& session = SessionFor(g, prover, local);
  const std::size_t target_modalities =
      static_cast<std::size_t>(g.target.modality_count());
  return AnyAssignment(candidates, [&](const std::vector<Formula>& formulas) {
    const std::size_t cap =
        budget.resolve(Modalities(formulas) + target_modalities);
    Bracketer bracketer(formulas, budget.allow_empty_groups);
    auto any = [&](const Bracketer::Tagged& structures) {
      for (const auto& [pi, used] : structures) {
        if (session.derivable(Sequent{pi, g.target})) return true;
      }
      return false;
    };
    if (!session.config().count_pruning) {
      return any(bracketer.AtMost(0, formulas.size(), cap));
    }
    // Counts do not depend on the bracketing, and each group shifts the
    // bracket balance by one, so only one group count can succeed.
    Structure flat;
    for (Formula f : formulas) flat.items.push_back(Item::Atom(f));
    const Sequent s{std::move(flat), g.target};
    if (!variables_balanced(s)) return false;
    const int groups = -bracket_balance(s);
    if (groups < 0 || static_cast<std::size_t>(groups) > cap) return false;
    return any(bracketer.Exact(0, formulas.size(),
                               static_cast<std::size_t>(groups)));
  });
}

std::vector<Structure> enumerate_bracketings(
    const std::vector<Formula>& formulas, const BracketBudget& budget) {
  Bracketer bracketer(formulas, budget.allow_empty_groups);
  std::vector<Structure> out;
  for (const auto& [s, used] :
       bracketer.AtMost(0, formulas.size(),
                        budget.resolve(Modalities(formulas)))) {
    out.push_back(s);
  }
  return out;
}

Grammar translate_grammar(const Grammar& g) {
  const std::set<int> used = g.variables();
  int q = 1;
  while (used.count(q)) ++q;
  return translate_grammar(g, FreshVar{q});
}

Grammar translate_grammar(const Grammar& g, FreshVar q) {
  if (g.calculus != CalculusId::kLbStarOne) {
    throw InvalidInput("only Lb*1 grammars are translated");
  }
  Grammar out{g.alphabet, {}, tau_plus(g.target, q), CalculusId::kLbStar,
              g.symbols};
  out.lexicon.reserve(g.lexicon.size());
  for (const auto& [symbol, f] : g.lexicon) {
    out.lexicon.emplace_back(symbol, tau_minus(f, q));
  }
  return out;
}

Grammar load_grammar(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("grammar is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("grammar must be a JSON object");

  auto require = [&](const char* field) -> const nlohmann::json& {
    if (!doc.contains(field)) {
      throw Error(std::string("grammar is missing \"") + field + "\"");
    }
    return doc.at(field);
  };

  const auto& alphabet = require("alphabet");
  const auto& lexicon = require("lexicon");
  const auto& target = require("target");
  if (!alphabet.is_array()) throw Error("\"alphabet\" must be a list");
  if (!lexicon.is_array()) throw Error("\"lexicon\" must be a list");
  if (!target.is_string()) throw Error("\"target\" must be a formula string");

  CalculusId calculus = CalculusId::kLbStarOne;
  if (doc.contains("calculus")) {
    const auto& c = doc.at("calculus");
    std::optional<CalculusId> id;
    if (c.is_string()) id = calculus_from_name(c.get<std::string>());
    if (!id || *id == CalculusId::kLbStarOnePrimed) {
      throw Error("\"calculus\" must be \"lbstar\" or \"lbstar1\"");
    }
    calculus = *id;
  }

  std::vector<std::string> symbols;
  for (const auto& a : alphabet) {
    if (!a.is_string()) throw Error("alphabet entries must be strings");
    symbols.push_back(a.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& e : lexicon) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw Error("lexicon entries must be [symbol, formula] pairs");
    }
    entries.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }

  SymbolTable table;
  const std::string target_text = target.get<std::string>();
  table.reserve_from(target_text);
  for (const auto& [s, text] : entries) table.reserve_from(text);

  Grammar g{std::move(symbols), {},
            ParseField(target_text, table, "target"), calculus, {}};
  for (const auto& [s, text] : entries) {
    if (!g.has_symbol(s)) {
      throw Error("lexicon symbol '" + s + "' is not in the alphabet");
    }
    g.lexicon.emplace_back(s, ParseField(text, table, "lexicon entry for '" + s + "'"));
  }
  g.symbols = std::move(table);

  if (calculus == CalculusId::kLbStar) {
    bool unit = g.target.contains_unit();
    for (const auto& [s, f] : g.lexicon) unit = unit || f.contains_unit();
    if (unit) throw Error("an lbstar grammar cannot mention the unit 1");
  }
  return g;
}

Grammar read_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grammar file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_grammar(buffer.str());
}

std::string grammar_to_json(const Grammar& g) {
  nlohmann::json doc;
  doc["alphabet"] = g.alphabet;
  doc["lexicon"] = nlohmann::json::array();
  for (const auto& [s, f] : g.lexicon) {
    doc["lexicon"].push_back({s, format_formula(f, &g.symbols)});
  }
  doc["target"] = format_formula(g.target, &g.symbols);
  doc["calculus"] = std::string(calculus_name(g.calculus));
  return doc.dump();
}

std::vector<std::string> split_word(const Grammar& g, std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1 && !g.has_symbol(tokens[0])) {
    std::vector<std::string> chars;
    for (char c : tokens[0]) chars.emplace_back(1, c);
    return chars;
  }
  return tokens;
}

}  // namespace lambek
