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

#include "lambek/formula.h"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lambek {

struct Formula::Node {
  Connective kind;
  int var;
  const Node* left;
  const Node* right;
  std::uint32_t id;
  std::uint32_t size;
  int modality_depth;
  int modality_count;
  int max_var;
  bool has_unit;
};

namespace {

struct NodeKey {
  Connective kind;
  int var;
  const Formula::Node* left;
  const Formula::Node* right;

  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind);
    h = h * 1000003u ^ static_cast<std::size_t>(k.var);
    h = h * 1000003u ^ std::hash<const void*>()(k.left);
    h = h * 1000003u ^ std::hash<const void*>()(k.right);
    return h;
  }
};

class InternTable {
 public:
  const Formula::Node* Intern(Connective kind, int var,
                              const Formula::Node* left,
                              const Formula::Node* right) {
    const NodeKey key{kind, var, left, right};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;

    Formula::Node node{kind, var, left, right, 0, 1, 0, 0, 0, false};
    node.id = static_cast<std::uint32_t>(nodes_.size());
    switch (kind) {
      case Connective::kVar:
        node.max_var = var;
        break;
      case Connective::kUnit:
        node.has_unit = true;
        break;
      case Connective::kDiamond:
      case Connective::kBracketInv:
        node.size = left->size + 1;
        node.modality_depth = left->modality_depth + 1;
        node.modality_count = left->modality_count + 1;
        node.max_var = left->max_var;
        node.has_unit = left->has_unit;
        break;
      default:
        node.size = left->size + right->size + 1;
        node.modality_depth =
            std::max(left->modality_depth, right->modality_depth);
        node.modality_count = left->modality_count + right->modality_count;
        node.max_var = std::max(left->max_var, right->max_var);
        node.has_unit = left->has_unit || right->has_unit;
        break;
    }
    nodes_.push_back(node);
    const Formula::Node* stored = &nodes_.back();
    index_.emplace(key, stored);
    return stored;
  }

 private:
  std::mutex mu_;
  std::deque<Formula::Node> nodes_;
  std::unordered_map<NodeKey, const Formula::Node*, NodeKeyHash> index_;
};

InternTable& Table() {
  static InternTable* table = new InternTable;
  return *table;
}

}  // namespace

Formula Formula::Var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  return Formula(Table().Intern(Connective::kVar, index, nullptr, nullptr));
}

Formula Formula::Unit() {
  static const Node* unit =
      Table().Intern(Connective::kUnit, 0, nullptr, nullptr);
  return Formula(unit);
}

Formula Formula::Under(Formula a, Formula b) {
  return Formula(Table().Intern(Connective::kUnder, 0, a.node_, b.node_));
}

Formula Formula::Over(Formula b, Formula a) {
  return Formula(Table().Intern(Connective::kOver, 0, b.node_, a.node_));
}

Formula Formula::Prod(Formula a, Formula b) {
  return Formula(Table().Intern(Connective::kProd, 0, a.node_, b.node_));
}

Formula Formula::Diamond(Formula body) {
  return Formula(Table().Intern(Connective::kDiamond, 0, body.node_, nullptr));
}

Formula Formula::BracketInv(Formula body) {
  return Formula(
      Table().Intern(Connective::kBracketInv, 0, body.node_, nullptr));
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  const Connective k = kind();
  return k == Connective::kUnder || k == Connective::kOver ||
         k == Connective::kProd;
}

bool Formula::is_unary() const {
  const Connective k = kind();
  return k == Connective::kDiamond || k == Connective::kBracketInv;
}

int Formula::var() const { return node_->var; }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }
Formula Formula::body() const { return Formula(node_->left); }
std::size_t Formula::size() const { return node_->size; }
int Formula::modality_depth() const { return node_->modality_depth; }
int Formula::modality_count() const { return node_->modality_count; }
bool Formula::contains_unit() const { return node_->has_unit; }
int Formula::max_var() const { return node_->max_var; }
std::uint32_t Formula::id() const { return node_->id; }

bool Formula::contains_var(int index) const {
  if (index > node_->max_var) return false;
  switch (kind()) {
    case Connective::kVar:
      return var() == index;
    case Connective::kUnit:
      return false;
    case Connective::kDiamond:
    case Connective::kBracketInv:
      return body().contains_var(index);
    default:
      return left().contains_var(index) || right().contains_var(index);
  }
}

std::strong_ordering operator<=>(Formula a, Formula b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::kVar:
      return a.var() <=> b.var();
    case Connective::kUnit:
      return std::strong_ordering::equal;
    case Connective::kDiamond:
    case Connective::kBracketInv:
      return a.body() <=> b.body();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

std::size_t size(Formula f) { return f.size(); }

int modality_depth(Formula f) { return f.modality_depth(); }

namespace {

void CollectVariables(Formula f, std::set<int>& out) {
  switch (f.kind()) {
    case Connective::kVar:
      out.insert(f.var());
      return;
    case Connective::kUnit:
      return;
    case Connective::kDiamond:
    case Connective::kBracketInv:
      CollectVariables(f.body(), out);
      return;
    default:
      CollectVariables(f.left(), out);
      CollectVariables(f.right(), out);
      return;
  }
}

}  // namespace

std::set<int> variables(Formula f) {
  std::set<int> out;
  CollectVariables(f, out);
  return out;
}

Formula substitute(Formula f, int index, Formula replacement) {
  if (!f.contains_var(index)) return f;
  switch (f.kind()) {
    case Connective::kVar:
      return replacement;
    case Connective::kUnit:
      return f;
    case Connective::kUnder:
      return Formula::Under(substitute(f.left(), index, replacement),
                            substitute(f.right(), index, replacement));
    case Connective::kOver:
      return Formula::Over(substitute(f.left(), index, replacement),
                           substitute(f.right(), index, replacement));
    case Connective::kProd:
      return Formula::Prod(substitute(f.left(), index, replacement),
                           substitute(f.right(), index, replacement));
    case Connective::kDiamond:
      return Formula::Diamond(substitute(f.body(), index, replacement));
    case Connective::kBracketInv:
      return Formula::BracketInv(substitute(f.body(), index, replacement));
  }
  return f;
}

}  // namespace lambek
