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

#include "cli.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "CLI11.hpp"
#include "lambek/enumerator.h"
#include "lambek/errors.h"
#include "lambek/grammar.h"
#include "lambek/prover.h"
#include "lambek/translate.h"
#include "nlohmann/json.hpp"

namespace lambek::cli {
namespace {

using nlohmann::json;

json ToJson(const Derivation& d) {
  json node;
  node["rule"] = std::string(rule_name(d.rule));
  node["conclusion"] = format_sequent(d.conclusion);
  node["premises"] = json::array();
  for (const Derivation& p : d.premises) node["premises"].push_back(ToJson(p));
  return node;
}

Derivation FromJson(const json& node) {
  if (!node.is_object() || !node.contains("rule") ||
      !node.contains("conclusion") || !node.contains("premises")) {
    throw Error("derivation nodes need \"rule\", \"conclusion\", \"premises\"");
  }
  const json& rule = node.at("rule");
  const json& conclusion = node.at("conclusion");
  const json& premises = node.at("premises");
  if (!rule.is_string() || !conclusion.is_string() || !premises.is_array()) {
    throw Error("malformed derivation node");
  }
  auto id = rule_from_name(rule.get<std::string>());
  if (!id) throw Error("unknown rule '" + rule.get<std::string>() + "'");
  Derivation d{*id, parse_sequent(conclusion.get<std::string>()), {}};
  for (const json& p : premises) d.premises.push_back(FromJson(p));
  return d;
}

void FormatTree(const Derivation& d, const SymbolTable* symbols, int depth,
                std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule);
  out += ": ";
  out += format_sequent(d.conclusion, symbols);
  out += '\n';
  for (const Derivation& p : d.premises) FormatTree(p, symbols, depth + 1, out);
}

const std::map<std::string, CalculusId> kCalculi = {
    {"lbstar", CalculusId::kLbStar},
    {"lbstar1", CalculusId::kLbStarOne},
    {"lbstar1p", CalculusId::kLbStarOnePrimed},
};

// Parses the sequent and checks the calculus precondition. Returns nullopt
// after reporting on `err`.
std::optional<Sequent> ReadGoal(const std::string& text, CalculusId cal,
                                SymbolTable& symbols, std::ostream& err) {
  try {
    Sequent goal = parse_sequent(text, symbols);
    if (cal == CalculusId::kLbStar && goal.contains_unit()) {
      err << "error: the unit constant 1 is not part of lbstar\n";
      return std::nullopt;
    }
    return goal;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int CmdCheck(const std::string& text, CalculusId cal, std::ostream& out,
             std::ostream& err) {
  SymbolTable symbols;
  auto goal = ReadGoal(text, cal, symbols, err);
  if (!goal) return kUsage;
  const bool ok = derivable(*goal, cal);
  out << (ok ? "derivable" : "underivable") << "\n";
  return ok ? kOk : kNegative;
}

int CmdProve(const std::string& text, CalculusId cal, const std::string& format,
             std::ostream& out, std::ostream& err) {
  SymbolTable symbols;
  auto goal = ReadGoal(text, cal, symbols, err);
  if (!goal) return kUsage;
  auto d = prove(*goal, cal);
  if (!d) {
    out << "underivable\n";
    return kNegative;
  }
  if (format == "json") {
    out << DerivationToJson(*d) << "\n";
  } else {
    out << FormatDerivationTree(*d, &symbols);
  }
  return kOk;
}

int CmdTranslate(const std::string& text, std::ostream& out,
                 std::ostream& err) {
  SymbolTable symbols;
  const Sequent goal = parse_sequent(text, symbols);
  Translation t = translate_sequent(goal);
  out << format_sequent(t.sequent, &symbols) << "\n";
  err << "q = " << symbols.name(t.q.q) << "\n";
  return kOk;
}

int CmdGrammar(const std::string& path, const std::string& mode,
               const std::string& word_text, std::optional<int> budget,
               std::ostream& out, std::ostream& err) {
  const Grammar g = read_grammar_file(path);
  const std::vector<std::string> word = split_word(g, word_text);
  for (const std::string& symbol : word) {
    if (!g.has_symbol(symbol)) {
      err << "error: symbol '" << symbol << "' is not in the alphabet\n";
      return kUsage;
    }
  }
  bool accepted;
  if (mode == "s") {
    accepted = s_accepts(g, word);
  } else {
    BracketBudget b;
    if (budget) b.max_pairs = static_cast<std::size_t>(*budget);
    accepted = t_accepts(g, word, b);
  }
  out << (accepted ? "accepted" : "rejected") << "\n";
  return accepted ? kOk : kNegative;
}

}  // namespace

std::string DerivationToJson(const Derivation& d, int indent) {
  return ToJson(d).dump(indent);
}

Derivation DerivationFromJson(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("derivation is not valid JSON: ") + e.what());
  }
  return FromJson(doc);
}

std::string FormatDerivationTree(const Derivation& d,
                                 const SymbolTable* symbols) {
  std::string out;
  FormatTree(d, symbols, 0, out);
  return out;
}

int SelfTestCommand(const SelfTestOptions& options, std::ostream& out) {
  bool all = true;
  for (const SuiteResult& r : RunSelfTest(options)) {
    out << r.name << ": " << (r.passed() ? "passed" : "FAILED") << ", "
        << r.checked << " checked, " << r.failures << " counterexamples";
    if (r.counterexample) out << ", first: " << *r.counterexample;
    out << "\n";
    all = all && r.passed();
  }
  return all ? kOk : kNegative;
}

std::vector<SuiteResult> RunSelfTest(const SelfTestOptions& options) {
  SearchConfig primed_cfg;
  primed_cfg.disabled_rules = options.disabled_primed_rules;
  Prover lb(CalculusId::kLbStar);
  Prover lb1(CalculusId::kLbStarOne);
  Prover lb1p(CalculusId::kLbStarOnePrimed, primed_cfg);

  auto note = [](SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (!r.counterexample) r.counterexample = what;
  };

  EnumSpec with_unit{options.max_size, 1, true, true, 2};
  const std::vector<Sequent> sequents = enumerate_sequents(with_unit);

  SuiteResult translation{"unit-elimination"};
  SuiteResult primed{"primed-calculus"};
  for (const Sequent& s : sequents) {
    const bool in_lb1 = lb1.derivable(s);
    ++translation.checked;
    if (in_lb1 != lb.derivable(translate_sequent(s).sequent)) {
      note(translation, format_sequent(s));
    }
    ++primed.checked;
    if (in_lb1 != lb1p.derivable(s)) note(primed, format_sequent(s));
  }

  SuiteResult conservativity{"conservativity"};
  EnumSpec unit_free{options.max_size, 2, false, true, 2};
  for (const Sequent& s : enumerate_sequents(unit_free)) {
    ++conservativity.checked;
    if (lb.derivable(s) != lb1.derivable(s)) note(conservativity, format_sequent(s));
  }

  SuiteResult cut{"cut-admissibility"};
  EnumSpec small{std::min(options.max_size, 4), 1, true, true, 2};
  std::unordered_map<Formula, std::vector<Sequent>> by_succedent;
  std::vector<Sequent> provable;
  for (const Sequent& s : enumerate_sequents(small)) {
    if (!lb1.derivable(s)) continue;
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
        ++cut.checked;
        if (!lb1.derivable(conclusion)) note(cut, format_sequent(conclusion));
      }
    }
  }

  return {translation, primed, conservativity, cut};
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Prover and unit-elimination toolkit for the Lambek calculus "
               "with brackets",
               "lambek"};
  app.require_subcommand(1);

  std::string sequent;
  std::string calculus = "lbstar1";
  std::string format = "text";
  std::string grammar_path;
  std::string mode;
  std::string word;
  std::optional<int> budget;
  int max_size = 0;

  auto calculus_option = [&](CLI::App* sub) {
    sub->add_option("--calculus", calculus, "lbstar, lbstar1 or lbstar1p")
        ->check(CLI::IsMember({"lbstar", "lbstar1", "lbstar1p"}));
  };

  CLI::App* check = app.add_subcommand("check", "Decide derivability");
  check->add_option("sequent", sequent, "e.g. \"[p1] -> <>p1\"")->required();
  calculus_option(check);

  CLI::App* prove_cmd = app.add_subcommand("prove", "Print a derivation");
  prove_cmd->add_option("sequent", sequent)->required();
  calculus_option(prove_cmd);
  prove_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* translate = app.add_subcommand(
      "translate", "Translate an Lb*1 sequent into a unit-free Lb* sequent");
  translate->add_option("sequent", sequent)->required();

  CLI::App* grammar = app.add_subcommand("grammar", "Run a categorial grammar");
  grammar->add_option("grammar", grammar_path, "JSON grammar file")->required();
  grammar->add_option("word", word, "symbols, space separated or one per char")
      ->required();
  grammar->add_option("--mode", mode, "s or t")
      ->required()
      ->check(CLI::IsMember({"s", "t"}));
  grammar->add_option("--budget", budget, "bracket pairs for t-acceptance")
      ->check(CLI::NonNegativeNumber);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the exhaustive equivalence suites");
  selftest->add_option("--max-size", max_size, "total sequent size bound")
      ->required()
      ->check(CLI::Range(2, 1000));

  // A sequent with an empty antecedent ("-> 1") looks like an option to the
  // parser; move such arguments behind "--" so they stay positional.
  std::vector<std::string> args;
  std::vector<std::string> tail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("->", 0) == 0) {
      tail.push_back(std::move(a));
    } else {
      args.push_back(std::move(a));
    }
  }
  if (!tail.empty()) {
    args.push_back("--");
    args.insert(args.end(), tail.begin(), tail.end());
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const CalculusId cal = kCalculi.at(calculus);
  try {
    if (check->parsed()) return CmdCheck(sequent, cal, out, err);
    if (prove_cmd->parsed()) return CmdProve(sequent, cal, format, out, err);
    if (translate->parsed()) return CmdTranslate(sequent, out, err);
    if (grammar->parsed()) {
      return CmdGrammar(grammar_path, mode, word, budget, out, err);
    }
    if (selftest->parsed()) {
      SelfTestOptions options;
      options.max_size = max_size;
      return SelfTestCommand(options, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lambek::cli
