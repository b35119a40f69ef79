#pragma once

/**
 * @file binary_tree.hpp
 * @brief Labeled plane binary trees and the bijection with labeled Dyck paths.
 *
 * Nodes are identified with their labels 1..n. The tree is stored as
 * child tables indexed by label; 0 means "no child".
 */

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pct/dyck.hpp"
#include "pct/error.hpp"

namespace pct {

class LabeledBinaryTree {
 public:
  LabeledBinaryTree() = default;

  /// `left[v]` / `right[v]` are the children of node v (index 0 unused).
  LabeledBinaryTree(int root, std::vector<int> left, std::vector<int> right)
      : root_(root), left_(std::move(left)), right_(std::move(right)) {
    const int n = size();
    if (n < 1 || right_.size() != left_.size()) throw std::invalid_argument("malformed tree: child tables");
    if (root_ < 1 || root_ > n) throw std::invalid_argument("malformed tree: root label out of range");
    std::vector<int> parents(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
      for (int child : {left_[v], right_[v]}) {
        if (child == 0) continue;
        if (child < 1 || child > n) throw std::invalid_argument("malformed tree: child label out of range");
        ++parents[child];
      }
    }
    if (left_[0] != 0 || right_[0] != 0) throw std::invalid_argument("malformed tree: slot 0 must be empty");
    if (parents[root_] != 0) throw std::invalid_argument("malformed tree: root has a parent");
    for (int v = 1; v <= n; ++v)
      if (v != root_ && parents[v] != 1) throw std::invalid_argument("malformed tree: node " + std::to_string(v) + " needs one parent");
    // One parent per non-root node plus reachability of all nodes from the root rules out cycles.
    std::vector<int> stack{root_};
    int seen = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (++seen > n) break;
      if (left_[v]) stack.push_back(left_[v]);
      if (right_[v]) stack.push_back(right_[v]);
    }
    if (seen != n) throw std::invalid_argument("malformed tree: not connected");
  }

  /// Single node labeled 1.
  static LabeledBinaryTree leaf() { return LabeledBinaryTree(1, {0, 0}, {0, 0}); }

  int size() const { return left_.empty() ? 0 : static_cast<int>(left_.size()) - 1; }
  int root() const { return root_; }
  int left(int v) const { return left_[v]; }
  int right(int v) const { return right_[v]; }

  auto operator<=>(const LabeledBinaryTree&) const = default;

 private:
  int root_ = 0;
  std::vector<int> left_;
  std::vector<int> right_;
};

/// A maximal left path: labels from its root down to its leaf, plus the node
/// whose right child is the path's root (absent for the path through the root).
struct LeftPath {
  std::vector<int> labels;
  std::optional<int> parent;
  auto operator<=>(const LeftPath&) const = default;
};

/// Maximal left path decomposition; the path containing the root comes first,
/// then the remaining paths in preorder of their roots.
inline std::vector<LeftPath> mlpd(const LabeledBinaryTree& t) {
  std::vector<LeftPath> out;
  std::vector<std::pair<int, std::optional<int>>> pending{{t.root(), std::nullopt}};
  while (!pending.empty()) {
    auto [start, parent] = pending.back();
    pending.pop_back();
    LeftPath path{{}, parent};
    std::vector<std::pair<int, std::optional<int>>> found;
    for (int v = start; v != 0; v = t.left(v)) {
      path.labels.push_back(v);
      if (t.right(v)) found.emplace_back(t.right(v), v);
    }
    for (auto it = found.rbegin(); it != found.rend(); ++it) pending.push_back(*it);
    out.push_back(std::move(path));
  }
  return out;
}

struct EdgeStats {
  int lasc = 0;
  int ldes = 0;
  int rasc = 0;
  int rdes = 0;
  auto operator<=>(const EdgeStats&) const = default;
};

/// Ascent/descent counts over left and right edges, comparing parent to child label.
inline EdgeStats edge_stats(const LabeledBinaryTree& t) {
  EdgeStats s;
  for (int v = 1; v <= t.size(); ++v) {
    if (int c = t.left(v)) (v < c ? s.lasc : s.ldes) += 1;
    if (int c = t.right(v)) (v < c ? s.rasc : s.rdes) += 1;
  }
  return s;
}

/// Each run becomes a left path (root = the run's rightmost label); run R_i
/// for i >= 2 hangs as the right subtree of the label carried by the up-step
/// just after R_i.
inline LabeledBinaryTree ldyck_to_ltree(const LabeledDyckPath& d) {
  const int n = d.semi_length();
  if (n < 1) throw std::invalid_argument("empty labeled Dyck path");
  const auto word = labeled_dyck_word(d);
  const auto rs = runs(d);
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> right(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);

  auto add_left_path = [&](const Run& run) {
    // Root-to-leaf order is the run read right to left.
    const auto& l = run.labels;
    for (std::size_t k = l.size() - 1; k > 0; --k) left[l[k]] = l[k - 1];
    for (int v : l) placed[v] = true;
    return l.back();
  };

  const int root = add_left_path(rs.front());
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const std::size_t next = static_cast<std::size_t>(rs[i].last_step) + 1;
    if (next >= word.size() || word[next].kind != StepKind::up) throw internal_error("run is not followed by an up-step");
    const int parent = word[next].label;
    if (!placed[parent] || right[parent] != 0) throw internal_error("cannot attach run below node " + std::to_string(parent));
    right[parent] = add_left_path(rs[i]);
  }
  return LabeledBinaryTree(root, std::move(left), std::move(right));
}

struct PushPopOp {
  enum class Kind { push, pop };
  Kind kind;
  int label;
  std::vector<int> queue_after;  // Q after the operation, ascending
};

struct TreeToPathResult {
  LabeledDyckWord word;
  LabeledDyckPath path;
  std::vector<PushPopOp> trace;
};

/// Push/pop traversal. Pushing the nodes of a left path (root to leaf)
/// prepends D_label for each; otherwise the smallest label m in Q is popped,
/// prepending U_m, and the left path hanging right of m (if any) is pushed next.
inline TreeToPathResult ltree_to_ldyck_traced(const LabeledBinaryTree& t) {
  const int n = t.size();
  TreeToPathResult out;
  std::set<int> queue;
  LabeledDyckWord reversed_word;  // built back to front, then reversed
  int steps = 0;
  std::optional<int> next_path = t.root();
  while (steps < 2 * n) {
    if (next_path) {
      for (int v = *next_path; v != 0; v = t.left(v)) {
        queue.insert(v);
        reversed_word.push_back({StepKind::down, v});
        ++steps;
        out.trace.push_back({PushPopOp::Kind::push, v, {queue.begin(), queue.end()}});
      }
      next_path.reset();
    } else {
      if (queue.empty()) throw internal_error("pop on empty queue");
      const int m = *queue.begin();
      queue.erase(queue.begin());
      reversed_word.push_back({StepKind::up, m});
      ++steps;
      out.trace.push_back({PushPopOp::Kind::pop, m, {queue.begin(), queue.end()}});
      if (t.right(m)) next_path = t.right(m);
    }
  }
  if (!queue.empty()) throw internal_error("queue not empty after 2n steps");
  out.word.assign(reversed_word.rbegin(), reversed_word.rend());
  out.path = path_of_word(out.word);
  return out;
}

inline LabeledDyckPath ltree_to_ldyck(const LabeledBinaryTree& t) { return ltree_to_ldyck_traced(t).path; }

/// Unlabeled binary tree shapes on n nodes. Each shape is stored with nodes
/// numbered in preorder, children tables indexed by that number.
struct TreeShape {
  std::vector<int> left;
  std::vector<int> right;
};

inline std::vector<TreeShape> enumerate_tree_shapes(int n) {
  // Shapes in preorder numbering starting at `first`; returns (left, right) of size n+1.
  std::vector<std::vector<TreeShape>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].push_back({{0}, {0}});
  for (int m = 1; m <= n; ++m) {
    for (int ls = 0; ls < m; ++ls) {
      const int rs = m - 1 - ls;
      for (const auto& L : by_size[ls]) {
        for (const auto& R : by_size[rs]) {
          TreeShape s{std::vector<int>(static_cast<std::size_t>(m) + 1, 0), std::vector<int>(static_cast<std::size_t>(m) + 1, 0)};
          // root = 1, left subtree occupies 2..ls+1, right subtree ls+2..m.
          if (ls > 0) s.left[1] = 2;
          if (rs > 0) s.right[1] = ls + 2;
          for (int v = 1; v <= ls; ++v) {
            if (L.left[v]) s.left[v + 1] = L.left[v] + 1;
            if (L.right[v]) s.right[v + 1] = L.right[v] + 1;
          }
          for (int v = 1; v <= rs; ++v) {
            if (R.left[v]) s.left[v + ls + 1] = R.left[v] + ls + 1;
            if (R.right[v]) s.right[v + ls + 1] = R.right[v] + ls + 1;
          }
          by_size[m].push_back(std::move(s));
        }
      }
    }
  }
  return by_size[n];
}

/// Relabels a preorder-numbered shape: preorder node k receives labels[k-1].
inline LabeledBinaryTree label_shape(const TreeShape& shape, const std::vector<int>& labels) {
  const std::size_t n = labels.size();
  std::vector<int> left(n + 1, 0);
  std::vector<int> right(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (shape.left[k]) left[labels[k - 1]] = labels[shape.left[k] - 1];
    if (shape.right[k]) right[labels[k - 1]] = labels[shape.right[k] - 1];
  }
  return LabeledBinaryTree(labels[0], std::move(left), std::move(right));
}

/// Visits all n! Cat_n labeled binary trees: shapes first, then labelings.
template <class Visitor>
void for_each_ltree(int n, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (const TreeShape& shape : enumerate_tree_shapes(n)) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      visit(label_shape(shape, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
}

inline std::vector<LabeledBinaryTree> enumerate_ltrees(int n) {
  std::vector<LabeledBinaryTree> out;
  for_each_ltree(n, [&](const LabeledBinaryTree& t) { out.push_back(t); });
  return out;
}

}  // namespace pct
