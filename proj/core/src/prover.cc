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

#include "lambek/prover.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lambek/errors.h"

namespace lambek {

Prover::Prover(CalculusId cal, SearchConfig cfg) : cal_(cal), cfg_(cfg) {
  if (cfg_.max_depth && *cfg_.max_depth < 1) {
    throw std::invalid_argument("max_depth must be positive");
  }
}

void Prover::CheckInput(const Sequent& goal) const {
  if (cal_ == CalculusId::kLbStar && goal.contains_unit()) {
    throw InvalidInput("the unit constant 1 is not part of Lb*");
  }
}

int Prover::InitialDepth() const {
  return cfg_.max_depth ? *cfg_.max_depth : std::numeric_limits<int>::max();
}

bool Prover::derivable(const Sequent& goal) {
  CheckInput(goal);
  return Search(goal, InitialDepth());
}

std::optional<Derivation> Prover::prove(const Sequent& goal) {
  CheckInput(goal);
  if (!Search(goal, InitialDepth())) return std::nullopt;
  return Build(goal, InitialDepth());
}

std::size_t Prover::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

std::size_t Prover::expansions() const {
  std::lock_guard<std::mutex> lock(mu_);
  return expansions_;
}

bool Prover::Search(const Sequent& goal, int depth_left) {
  if (depth_left <= 0) return false;
  if (cfg_.count_pruning && !counts_balanced(goal)) return false;

  // Unbounded searches share one entry per goal.
  MemoKey key;
  if (cfg_.memo_enabled) {
    key = MemoKey{sequent_key(goal), cfg_.max_depth ? depth_left : 0};
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  bool found = false;
  for (const Step& step : backward_steps(goal, cal_, cfg_.disabled_rules)) {
    const bool closes = std::all_of(
        step.premises.begin(), step.premises.end(),
        [&](const Sequent& p) { return Search(p, depth_left - 1); });
    if (closes) {
      found = true;
      break;
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  ++expansions_;
  if (cfg_.memo_enabled) memo_.emplace(std::move(key), found);
  return found;
}

Derivation Prover::Build(const Sequent& goal, int depth_left) {
  for (Step& step : backward_steps(goal, cal_, cfg_.disabled_rules)) {
    const bool closes = std::all_of(
        step.premises.begin(), step.premises.end(),
        [&](const Sequent& p) { return Search(p, depth_left - 1); });
    if (!closes) continue;
    Derivation d{step.rule, goal, {}};
    d.premises.reserve(step.premises.size());
    for (const Sequent& p : step.premises) {
      d.premises.push_back(Build(p, depth_left - 1));
    }
    return d;
  }
  throw std::logic_error("Build() called on an underivable goal");
}

bool derivable(const Sequent& goal, CalculusId cal, const SearchConfig& cfg) {
  return Prover(cal, cfg).derivable(goal);
}

std::optional<Derivation> prove(const Sequent& goal, CalculusId cal,
                                const SearchConfig& cfg) {
  return Prover(cal, cfg).prove(goal);
}

}  // namespace lambek
