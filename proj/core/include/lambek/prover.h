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

// Exhaustive cut-free backward proof search.
//
// Every premise produced by backward_steps() is strictly smaller than its
// conclusion, so plain depth-first search terminates without a depth bound.
// A Prover instance is a session: it caches positive and negative results
// per goal for its calculus across calls.

#ifndef LAMBEK_PROVER_H_
#define LAMBEK_PROVER_H_

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "lambek/calculus.h"

namespace lambek {

struct SearchConfig {
  // Upper bound on derivation height; unset means unbounded.
  std::optional<int> max_depth;
  bool memo_enabled = true;
  // Reject goals that fail counts_balanced() without expanding them.
  bool count_pruning = true;
  // Rules the search must not use.
  RuleMask disabled_rules;
};

class Prover {
 public:
  explicit Prover(CalculusId cal, SearchConfig cfg = {});

  Prover(const Prover&) = delete;
  Prover& operator=(const Prover&) = delete;

  // Throws InvalidInput if the goal mentions 1 and the calculus is Lb*.
  bool derivable(const Sequent& goal);

  // The first derivation in backward_steps() order, or nullopt iff the goal
  // is not derivable.
  std::optional<Derivation> prove(const Sequent& goal);

  CalculusId calculus() const { return cal_; }
  const SearchConfig& config() const { return cfg_; }

  std::size_t memo_size() const;
  // Number of goals expanded (memo misses) since construction.
  std::size_t expansions() const;

 private:
  struct MemoKey {
    SequentKey sequent;
    int depth;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      return SequentKeyHash()(k.sequent) * 31u + static_cast<std::size_t>(k.depth);
    }
  };

  void CheckInput(const Sequent& goal) const;
  int InitialDepth() const;
  bool Search(const Sequent& goal, int depth_left);
  Derivation Build(const Sequent& goal, int depth_left);

  CalculusId cal_;
  SearchConfig cfg_;
  mutable std::mutex mu_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
  std::size_t expansions_ = 0;
};

// One-shot wrappers over a fresh session.
bool derivable(const Sequent& goal, CalculusId cal,
               const SearchConfig& cfg = {});
std::optional<Derivation> prove(const Sequent& goal, CalculusId cal,
                                const SearchConfig& cfg = {});

}  // namespace lambek

#endif  // LAMBEK_PROVER_H_
