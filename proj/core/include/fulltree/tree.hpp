#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fulltree/errors.hpp"
#include "fulltree/ops.hpp"

namespace fulltree {

// Persistent binary tree with a label on every node; Leaf is the empty
// tree. Structural sharing is the point: the balancers join existing
// subtrees without ever copying them.
template <typename L>
class Tree {
 public:
  Tree() = default;  // Leaf

  static Tree leaf() { return Tree{}; }

  static Tree node(Tree left, L label, Tree right) {
    ops::alloc();
    return Tree(std::make_shared<const Node>(
        Node{std::move(left), std::move(label), std::move(right)}));
  }

  bool is_leaf() const { return node_ == nullptr; }

  const Tree& left() const { return node_->left; }
  const L& label() const { return node_->label; }
  const Tree& right() const { return node_->right; }

  friend bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;  // shared subtree; covers Leaf == Leaf
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.label() == b.label() && a.left() == b.left() && a.right() == b.right();
  }
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node {
    Tree left;
    L label;
    Tree right;
  };

  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

template <typename L>
std::size_t node_count(const Tree<L>& t) {
  if (t.is_leaf()) return 0;
  return 1 + node_count(t.left()) + node_count(t.right());
}

// Number of node levels; Leaf has height 0.
template <typename L>
std::size_t height(const Tree<L>& t) {
  if (t.is_leaf()) return 0;
  return 1 + std::max(height(t.left()), height(t.right()));
}

template <typename L>
void infix_traversal(const Tree<L>& t, std::vector<L>& out) {
  if (t.is_leaf()) return;
  infix_traversal(t.left(), out);
  out.push_back(t.label());
  infix_traversal(t.right(), out);
}

template <typename L>
std::vector<L> infix_traversal(const Tree<L>& t) {
  std::vector<L> out;
  infix_traversal(t, out);
  return out;
}

// The height-index relation: a leaf admits indices 0 and 1 (it may stand
// for a missing node on the last level), and a node admits k+1 exactly when
// both children admit k. The trees admitting some index are the full trees:
// every level except possibly the deepest is completely filled.
template <typename L>
bool full_height(const Tree<L>& t, std::size_t k) {
  if (t.is_leaf()) return k <= 1;
  return k >= 1 && full_height(t.left(), k - 1) && full_height(t.right(), k - 1);
}

namespace detail {

// Closed interval of admissible height indices, possibly empty. An interval
// never spans more than two values: leaves start at {0, 1} and intersection
// only narrows.
struct IndexInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool none = true;
};

template <typename L>
IndexInterval admissible_indices(const Tree<L>& t) {
  if (t.is_leaf()) return {0, 1, false};
  const IndexInterval a = admissible_indices(t.left());
  if (a.none) return {};
  const IndexInterval b = admissible_indices(t.right());
  if (b.none) return {};
  const std::size_t lo = std::max(a.lo, b.lo);
  const std::size_t hi = std::min(a.hi, b.hi);
  if (lo > hi) return {};
  return {lo + 1, hi + 1, false};
}

}  // namespace detail

// Smallest k with full_height(t, k), or nothing if the tree is not full;
// 0 for Leaf by convention. A perfect tree of height h also admits h + 1
// (all its leaves can be read as placeholders on a missing last level);
// every other full tree admits exactly one index, namely its height.
template <typename L>
std::optional<std::size_t> is_full(const Tree<L>& t) {
  const detail::IndexInterval r = detail::admissible_indices(t);
  if (r.none) return std::nullopt;
  return r.lo;
}

// A tree bundled with a height index it is known to admit. The invariant
// full_height(tree, index) is maintained by construction: the only entry
// points are leaves, single nodes, joins of equal-index witnesses, and an
// explicitly revalidating factory.
template <typename L>
class FullTreeWitness {
 public:
  static FullTreeWitness leaf(std::size_t k) {
    if (k > 1) throw HeightMismatchError("a leaf witness admits only index 0 or 1");
    return FullTreeWitness(Tree<L>::leaf(), k);
  }

  static FullTreeWitness single(L label) {
    return FullTreeWitness(
        Tree<L>::node(Tree<L>::leaf(), std::move(label), Tree<L>::leaf()), 1);
  }

  static FullTreeWitness join(const FullTreeWitness& l, L label, const FullTreeWitness& r) {
    if (l.index_ != r.index_)
      throw HeightMismatchError("joined subtrees disagree on their height index");
    return FullTreeWitness(Tree<L>::node(l.tree_, std::move(label), r.tree_), l.index_ + 1);
  }

  static std::optional<FullTreeWitness> checked(Tree<L> t, std::size_t k) {
    if (!full_height(t, k)) return std::nullopt;
    return FullTreeWitness(std::move(t), k);
  }

  const Tree<L>& tree() const { return tree_; }
  std::size_t index() const { return index_; }

  friend bool operator==(const FullTreeWitness& a, const FullTreeWitness& b) {
    return a.index_ == b.index_ && a.tree_ == b.tree_;
  }

 private:
  FullTreeWitness(Tree<L> t, std::size_t k) : tree_(std::move(t)), index_(k) {}

  Tree<L> tree_;
  std::size_t index_;
};

// Single node at index 1; the seed every balancer grows trees from.
template <typename L>
FullTreeWitness<L> singleton(L label) {
  return FullTreeWitness<L>::single(std::move(label));
}

}  // namespace fulltree
