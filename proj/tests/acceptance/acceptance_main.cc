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

// Acceptance gate. Each criterion is checked exhaustively at its stated
// scale and reported on one line; the exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lambek/calculus.h"
#include "lambek/enumerator.h"
#include "lambek/grammar.h"
#include "lambek/prover.h"
#include "lambek/text_io.h"
#include "lambek/translate.h"

namespace lambek {
namespace {

struct Outcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void Check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
};

// ---------------------------------------------------------------------------
// 1-7: exhaustive equivalences.

Outcome UnitElimination() {
  Outcome o;
  Prover lb(CalculusId::kLbStar);
  Prover lb1(CalculusId::kLbStarOne);
  for (const Sequent& s : enumerate_sequents({6, 1, true, true, 2})) {
    const Sequent t = translate_sequent(s).sequent;
    o.Check(lb1.derivable(s) == lb.derivable(t),
            [&] { return format_sequent(s) + "  =>  " + format_sequent(t); });
  }
  return o;
}

Outcome PrimedCalculus() {
  Outcome o;
  Prover lb1(CalculusId::kLbStarOne);
  Prover lb1p(CalculusId::kLbStarOnePrimed);
  for (const Sequent& s : enumerate_sequents({6, 1, true, true, 2})) {
    o.Check(lb1.derivable(s) == lb1p.derivable(s),
            [&] { return format_sequent(s); });
  }
  return o;
}

Outcome UnitLeftAdmissible() {
  Outcome o;
  Prover lb1p(CalculusId::kLbStarOnePrimed);
  const Item unit = Item::Atom(Formula::Unit());
  for (const Sequent& s : enumerate_sequents({5, 1, true, true, 2})) {
    if (!lb1p.derivable(s)) continue;
    for (const Context& slot : slots(s.antecedent)) {
      const Sequent bigger{plug(slot, unit), s.succedent};
      o.Check(lb1p.derivable(bigger), [&] {
        return format_sequent(s) + "  +1  " + format_sequent(bigger);
      });
    }
  }
  return o;
}

bool BracketFree(const Sequent& s) {
  if (s.antecedent.group_count() > 0) return false;
  if (s.succedent.modality_count() > 0) return false;
  for (Formula f : yield_of(s.antecedent)) {
    if (f.modality_count() > 0) return false;
  }
  return true;
}

Outcome Conservativity() {
  Outcome o;
  Prover lb(CalculusId::kLbStar);
  Prover lb1(CalculusId::kLbStarOne);
  const RuleId bracket_rules[] = {RuleId::kDiamondL, RuleId::kDiamondR,
                                  RuleId::kBracketInvL, RuleId::kBracketInvR};
  for (const Sequent& s : enumerate_sequents({6, 2, false, true, 2})) {
    const bool in_lb = lb.derivable(s);
    o.Check(in_lb == lb1.derivable(s), [&] { return format_sequent(s); });
    if (!in_lb || !BracketFree(s)) continue;
    for (Prover* p : {&lb, &lb1}) {
      const auto d = p->prove(s);
      bool clean = d.has_value();
      for (RuleId r : bracket_rules) clean = clean && !d->uses(r);
      o.Check(clean, [&] { return "bracket rule in proof of " + format_sequent(s); });
    }
  }
  return o;
}

void CutPairs(CalculusId cal, const EnumSpec& spec, Outcome& o) {
  Prover prover(cal);
  std::unordered_map<Formula, std::vector<Sequent>> by_succedent;
  std::vector<Sequent> provable;
  for (const Sequent& s : enumerate_sequents(spec)) {
    if (!prover.derivable(s)) continue;
    provable.push_back(s);
    by_succedent[s.succedent].push_back(s);
  }
  for (const Sequent& right : provable) {
    for (const Occurrence& occ : occurrences(right.antecedent)) {
      if (!occ.item.is_atom()) continue;
      auto it = by_succedent.find(occ.item.formula());
      if (it == by_succedent.end()) continue;
      for (const Sequent& left : it->second) {
        const Sequent conclusion = cut_compose(left, right, occ.context);
        o.Check(prover.derivable(conclusion), [&] {
          return format_sequent(left) + " ; " + format_sequent(right) +
                 "  =>  " + format_sequent(conclusion);
        });
      }
    }
  }
}

Outcome CutAdmissible() {
  Outcome o;
  CutPairs(CalculusId::kLbStarOne, {4, 1, true, true, 2}, o);
  CutPairs(CalculusId::kLbStar, {4, 2, false, true, 2}, o);
  return o;
}

Outcome RoundTrip() {
  Outcome o;
  Prover lb1(CalculusId::kLbStarOne);
  for (int vars = 1; vars <= 2; ++vars) {
    for (Formula b : enumerate_formulas({4, vars, true, true, 0})) {
      const FreshVar q{b.max_var() + 1};
      for (Formula t : {tau_plus(b, q), tau_minus(b, q)}) {
        const Formula back = substitute_unit_for_var(t, q);
        o.Check(lb1.derivable(Sequent{{back}, b}) &&
                    lb1.derivable(Sequent{{b}, back}),
                [&] { return format_formula(b) + " vs " + format_formula(back); });
      }
    }
  }
  return o;
}

Outcome LinearBounds() {
  Outcome o;
  for (int vars = 1; vars <= 2; ++vars) {
    for (Formula a : enumerate_formulas({6, vars, true, true, 0})) {
      const FreshVar q{a.max_var() + 1};
      for (Formula t : {tau_plus(a, q), tau_minus(a, q)}) {
        o.Check(t.size() <= 9 * a.size() &&
                    t.modality_depth() == a.modality_depth(),
                [&] { return format_formula(a) + " -> " + format_formula(t); });
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 8: language agreement for pocket grammars.
//
// A grammar over {a, b} gives each symbol a set of at most two formulas of
// size <= 3 (26 candidates) and has a target of size <= 3. Acceptance of a
// word is existential over lexical assignments, so it is computed from a
// table of per-assignment results obtained with the library's s_accepts and
// t_accepts on one-entry-per-position grammars, for the original grammar
// and for its translation with q = 1 and q = 2 (translate_grammar picks q = 1
// exactly when p1 does not occur). Every grammar and word is then decided
// from the table, and a random sample of whole grammars is re-decided
// through the public API end to end.

class PocketGrammars {
 public:
  PocketGrammars() : formulas_(enumerate_formulas({3, 1, true, false, 0})) {
    const int n = static_cast<int>(formulas_.size());
    sets_.push_back({});
    for (int i = 0; i < n; ++i) sets_.push_back({i});
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) sets_.push_back({i, j});
    }
    for (int len = 0; len <= 3; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> w;
        for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1);
        words_.push_back(w);
      }
    }
  }

  std::size_t formula_count() const { return formulas_.size(); }
  std::size_t grammar_count() const {
    return sets_.size() * sets_.size() * formulas_.size();
  }

  void BuildTables(Outcome& o) {
    Prover lb(CalculusId::kLbStar);
    Prover lb1(CalculusId::kLbStarOne);
    const int n = static_cast<int>(formulas_.size());
    for (int h = 0; h < n; ++h) {
      for (int len = 0; len <= 3; ++len) {
        int tuples = 1;
        for (int i = 0; i < len; ++i) tuples *= n;
        auto& table = table_[{h, len}];
        table.assign(static_cast<std::size_t>(tuples), 0);
        for (int code = 0; code < tuples; ++code) {
          Grammar g{{}, {}, formulas_[h], CalculusId::kLbStarOne, {}};
          std::vector<std::string> word;
          int c = code;
          for (int i = 0; i < len; ++i) {
            const std::string symbol = "x" + std::to_string(i);
            g.alphabet.push_back(symbol);
            g.lexicon.emplace_back(symbol, formulas_[c % n]);
            word.push_back(symbol);
            c /= n;
          }
          std::uint8_t bits = 0;
          if (s_accepts(g, word, &lb1)) bits |= kS;
          if (t_accepts(g, word, {}, &lb1)) bits |= kT;
          for (int q = 1; q <= 2; ++q) {
            if (g.variables().count(q)) continue;
            const Grammar t = translate_grammar(g, FreshVar{q});
            if (s_accepts(t, word, &lb)) bits |= Bit(kS, q);
            if (t_accepts(t, word, {}, &lb)) bits |= Bit(kT, q);
          }
          table[static_cast<std::size_t>(code)] = bits;
          ++o.checked;
        }
      }
    }
  }

  void CheckAllGrammars(Outcome& o) {
    const Formula p1 = Formula::Var(1);
    for (std::size_t a = 0; a < sets_.size(); ++a) {
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        for (int h = 0; h < static_cast<int>(formulas_.size()); ++h) {
          bool has_p1 = formulas_[h].contains_var(p1.var());
          for (std::size_t s : {a, b}) {
            for (int f : sets_[s]) has_p1 = has_p1 || formulas_[f].contains_var(1);
          }
          const int q = has_p1 ? 2 : 1;
          for (const auto& w : words_) {
            const std::uint8_t r = Decide(a, b, h, w, q);
            const bool s_ok = ((r & kS) != 0) == ((r & Bit(kS, q)) != 0);
            const bool t_ok = ((r & kT) != 0) == ((r & Bit(kT, q)) != 0);
            o.Check(s_ok && t_ok, [&] { return Describe(a, b, h, w); });
          }
        }
      }
    }
  }

  void CheckSample(Outcome& o, int samples) {
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<std::size_t> pick_set(0, sets_.size() - 1);
    std::uniform_int_distribution<int> pick_target(
        0, static_cast<int>(formulas_.size()) - 1);
    Prover lb(CalculusId::kLbStar);
    Prover lb1(CalculusId::kLbStarOne);
    for (int i = 0; i < samples; ++i) {
      const std::size_t a = pick_set(rng);
      const std::size_t b = pick_set(rng);
      const int h = pick_target(rng);
      const Grammar g = Make(a, b, h);
      const Grammar t = translate_grammar(g);
      const int q = g.variables().count(1) ? 2 : 1;
      for (const auto& w : words_) {
        std::vector<std::string> word;
        for (int s : w) word.push_back(s == 0 ? "a" : "b");
        const std::uint8_t r = Decide(a, b, h, w, q);
        const bool s1 = s_accepts(g, word, &lb1);
        const bool t1 = t_accepts(g, word, {}, &lb1);
        const bool s2 = s_accepts(t, word, &lb);
        const bool t2 = t_accepts(t, word, {}, &lb);
        const bool table_ok = s1 == ((r & kS) != 0) && t1 == ((r & kT) != 0) &&
                              s2 == ((r & Bit(kS, q)) != 0) &&
                              t2 == ((r & Bit(kT, q)) != 0);
        o.Check(table_ok && s1 == s2 && t1 == t2,
                [&] { return "sampled " + Describe(a, b, h, w); });
      }
    }
  }

 private:
  static constexpr std::uint8_t kS = 1;
  static constexpr std::uint8_t kT = 2;
  static std::uint8_t Bit(std::uint8_t base, int q) {
    return static_cast<std::uint8_t>(base << (2 * q));
  }

  // OR of the table entries over every assignment of the word.
  std::uint8_t Decide(std::size_t a, std::size_t b, int h,
                      const std::vector<int>& w, int q) const {
    const auto& table = table_.at({h, static_cast<int>(w.size())});
    const int n = static_cast<int>(formulas_.size());
    const std::uint8_t mask = static_cast<std::uint8_t>(kS | kT | Bit(kS, q) | Bit(kT, q));
    std::uint8_t out = 0;
    std::function<void(std::size_t, int, int)> go = [&](std::size_t pos, int code,
                                                        int scale) {
      if (pos == w.size()) {
        out |= table[static_cast<std::size_t>(code)];
        return;
      }
      for (int f : sets_[w[pos] == 0 ? a : b]) go(pos + 1, code + f * scale, scale * n);
    };
    go(0, 0, 1);
    return out & mask;
  }

  Grammar Make(std::size_t a, std::size_t b, int h) const {
    Grammar g{{"a", "b"}, {}, formulas_[h], CalculusId::kLbStarOne, {}};
    for (int f : sets_[a]) g.lexicon.emplace_back("a", formulas_[f]);
    for (int f : sets_[b]) g.lexicon.emplace_back("b", formulas_[f]);
    return g;
  }

  std::string Describe(std::size_t a, std::size_t b, int h,
                       const std::vector<int>& w) const {
    std::ostringstream os;
    const Grammar g = Make(a, b, h);
    for (const auto& [s, f] : g.lexicon) os << s << " |> " << format_formula(f) << "; ";
    os << "H = " << format_formula(g.target) << "; word \"";
    for (int s : w) os << (s == 0 ? 'a' : 'b');
    os << "\"";
    return os.str();
  }

  std::vector<Formula> formulas_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> words_;
  std::map<std::pair<int, int>, std::vector<std::uint8_t>> table_;
};

Outcome PocketLanguages(std::string& note) {
  Outcome tables;
  PocketGrammars pocket;
  pocket.BuildTables(tables);
  Outcome o;
  pocket.CheckAllGrammars(o);
  pocket.CheckSample(o, 400);
  note = std::to_string(pocket.grammar_count()) + " grammars x 15 words, " +
         std::to_string(tables.checked) + " assignment/target pairs";
  return o;
}

// ---------------------------------------------------------------------------
// 9: displayed sequents and derivations.

Formula QQ(int q) {
  const Formula v = Formula::Var(q);
  return Formula::Under(v, v);
}

Structure Repeat(Formula f, int k) {
  Structure s;
  for (int i = 0; i < k; ++i) s.items.push_back(Item::Atom(f));
  return s;
}

Derivation Proof(const Sequent& s, CalculusId cal) {
  auto d = prove(s, cal);
  if (!d) throw std::runtime_error("no proof of " + format_sequent(s));
  return *d;
}

Outcome Displays() {
  Outcome o;
  const auto lb = CalculusId::kLbStar;
  const auto lb1p = CalculusId::kLbStarOnePrimed;
  const Formula p = Formula::Var(1);
  const Formula one = Formula::Unit();
  const Formula qq = QQ(2);
  const FreshVar q{2};

  for (int k = 0; k <= 3; ++k) {
    const Sequent units{Repeat(qq, k), qq};
    o.Check(derivable(units, lb), [&] { return format_sequent(units); });
    const Sequent ones{Repeat(one, k), one};
    o.Check(derivable(ones, lb1p), [&] { return format_sequent(ones); });
  }
  for (int k = 0; k <= 2; ++k) {
    for (int m = 0; m <= 2; ++m) {
      const Sequent ax{Concat(Concat(Repeat(qq, k), Structure{p}), Repeat(qq, m)),
                       tau_plus(p, q)};
      o.Check(derivable(ax, lb), [&] { return format_sequent(ax); });
      const Sequent axp{Concat(Concat(Repeat(one, k), Structure{p}), Repeat(one, m)),
                        p};
      o.Check(derivable(axp, lb1p), [&] { return format_sequent(axp); });
    }
  }

  // The (->⟨⟩)' case: (q\q)^k, [τ-(Π)], (q\q)^m -> (q\q)·⟨⟩τ+(A)·(q\q) by
  // (->·) twice over (q\q)^k -> q\q, (->⟨⟩) and (q\q)^m -> q\q.
  const std::vector<std::pair<const char*, const char*>> diamond_cases = {
      {"p1", "p1"}, {"p1, p1\\p1", "p1"}, {"[]^-1 p1, 1", "[]^-1 p1"}};
  for (const auto& [pi_text, a_text] : diamond_cases) {
    const Structure pi = parse_structure(pi_text);
    const Formula a = parse_formula(a_text);
    for (int k = 0; k <= 2; ++k) {
      for (int m = 0; m <= 2; ++m) {
        const Sequent original{
            Concat(Concat(Repeat(one, k), Bracket(pi)), Repeat(one, m)),
            Formula::Diamond(a)};
        const Sequent target = translate_sequent(original, q);
        const Formula body = tau_plus(a, q);
        const Structure inner = tau_minus_structure(pi, q);
        const Derivation diamond{
            RuleId::kDiamondR,
            Sequent{Bracket(inner), Formula::Diamond(body)},
            {Proof(Sequent{inner, body}, lb)}};
        const Derivation left{
            RuleId::kProdR,
            Sequent{Concat(Repeat(qq, k), Bracket(inner)),
                    Formula::Prod(qq, Formula::Diamond(body))},
            {Proof(Sequent{Repeat(qq, k), qq}, lb), diamond}};
        const Derivation root{RuleId::kProdR, target,
                              {left, Proof(Sequent{Repeat(qq, m), qq}, lb)}};
        o.Check(derivable(original, lb1p) && check_derivation(root, lb),
                [&] { return "(->diamond)' display for " + format_sequent(original); });
      }
    }
  }

  // The ([]^-1 ->)' case: Δ([(q\q)^k, ((q\q)\[]^-1 τ-(B))/(q\q), (q\q)^m]) -> C
  // by (/->), (\->) and ([]^-1 ->).
  struct Frame {
    Context delta;  // where the bracketed group sits
    const char* b;
    const char* c;
  };
  const std::vector<Frame> frames = {
      {Context::Hole(), "p1", "p1"},
      {Context{Bracket({}), {0}, 0}, "p1", "<>p1"},
      {Context{parse_structure("p1"), {}, 1}, "p1\\p1", "p1"},
  };
  for (const Frame& fr : frames) {
    const Formula b = parse_formula(fr.b);
    const Formula c = parse_formula(fr.c);
    const Formula inv = Formula::BracketInv(tau_minus(b, q));
    const Formula under = Formula::Under(qq, inv);
    for (int k = 0; k <= 2; ++k) {
      for (int m = 0; m <= 2; ++m) {
        const Structure padded_ones = Concat(
            Concat(Repeat(one, k), Structure{Formula::BracketInv(b)}), Repeat(one, m));
        const Sequent original{plug(fr.delta, Bracket(padded_ones)), c};
        const Sequent target = translate_sequent(original, q);
        const Formula tc = tau_plus(c, q);
        const Context delta{tau_minus_structure(fr.delta.frame, q), fr.delta.path,
                            fr.delta.slot};
        const Derivation inv_step{
            RuleId::kBracketInvL, Sequent{plug(delta, Bracket({inv})), tc},
            {Proof(Sequent{plug(delta, Item::Atom(tau_minus(b, q))), tc}, lb)}};
        const Derivation under_step{
            RuleId::kUnderL,
            Sequent{plug(delta, Bracket(Concat(Repeat(qq, k), Structure{under}))), tc},
            {Proof(Sequent{Repeat(qq, k), qq}, lb), inv_step}};
        const Derivation root{RuleId::kOverL, target,
                              {Proof(Sequent{Repeat(qq, m), qq}, lb), under_step}};
        o.Check(derivable(original, lb1p) && check_derivation(root, lb),
                [&] { return "([]^-1->)' display for " + format_sequent(original); });
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 10: text round trip.

Outcome ParseFormatIdentity() {
  Outcome o;
  for (const Sequent& s : enumerate_sequents({6, 2, true, true, 2})) {
    const std::string text = format_sequent(s);
    bool ok = false;
    try {
      ok = parse_sequent(text) == s;
    } catch (const std::exception&) {
      ok = false;
    }
    o.Check(ok, [&] { return text; });
  }
  return o;
}

}  // namespace
}  // namespace lambek

int main() {
  using namespace lambek;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*f)()) {
    return [f](std::string&) { return f(); };
  };
  const std::vector<Criterion> criteria = {
      {1, "unit elimination: Lb*1 vs translated Lb*, size <= 6", plain(UnitElimination)},
      {2, "Lb*1 vs Lb*1', size <= 6", plain(PrimedCalculus)},
      {3, "(1->) admissible in Lb*1', size <= 5, every slot", plain(UnitLeftAdmissible)},
      {4, "conservativity of Lb*1 over Lb*, size <= 6", plain(Conservativity)},
      {5, "cut admissibility, size <= 4 pairs", plain(CutAdmissible)},
      {6, "tau images equivalent after 1-for-q, size <= 4", plain(RoundTrip)},
      {7, "size(tau A) <= 9 size(A), modality depth kept, size <= 6", plain(LinearBounds)},
      {8, "s/t languages kept by grammar translation (pocket grammars)", PocketLanguages},
      {9, "displayed sequents and derivations", plain(Displays)},
      {10, "parse(format(s)) == s, size <= 6", plain(ParseFormatIdentity)},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    Outcome o;
    std::string error;
    try {
      o = c.run(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool pass = error.empty() && o.failures == 0 && o.checked > 0;
    failed += pass ? 0 : 1;
    std::printf("%s [%d] %s: %zu checked, %zu failures%s%s (%.1fs)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.checked, o.failures,
                note.empty() ? "" : ("; " + note).c_str(),
                error.empty() ? (o.failures ? ("; first: " + o.first).c_str() : "")
                              : ("; error: " + error).c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS", failed,
              criteria.size());
  return failed ? 1 : 0;
}
