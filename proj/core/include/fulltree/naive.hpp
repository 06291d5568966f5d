#pragma once

#include <cassert>
#include <cstdint>
#include <variant>
#include <vector>

#include "fulltree/ops.hpp"
#include "fulltree/result.hpp"
#include "fulltree/tree.hpp"

namespace fulltree::naive {

// Working state of the first balancer: a flat sequence that alternates
// already-built subtrees (odd positions, 1-based) with pending labels (even
// positions). Well-formed sequences have length 2^k - 1.
template <typename L>
using TreeOrElt = std::variant<Tree<L>, L>;

template <typename L>
using AlternatingSeq = std::vector<TreeOrElt<L>>;

template <typename L>
TreeOrElt<L> tree_item(Tree<L> t) {
  return TreeOrElt<L>(std::in_place_index<0>, std::move(t));
}

template <typename L>
TreeOrElt<L> elt(L x) {
  return TreeOrElt<L>(std::in_place_index<1>, std::move(x));
}

template <typename L>
bool is_tree(const TreeOrElt<L>& s) {
  return s.index() == 0;
}

template <typename L>
const Tree<L>& tree_of(const TreeOrElt<L>& s) {
  return std::get<0>(s);
}

template <typename L>
const L& elt_of(const TreeOrElt<L>& s) {
  return std::get<1>(s);
}

enum class ErrorKind {
  malformed_alternation,  // the tree/label alternation broke
  bad_length,             // a lone pending label cannot be reduced
  overflow,               // list too long for the padding arithmetic
};

struct Error {
  ErrorKind kind = ErrorKind::malformed_alternation;
  // 1-based position of the item that broke the pattern; when the sequence
  // ended where another item was required, one past the last item.
  std::size_t position = 0;

  friend bool operator==(const Error&, const Error&) = default;
};

template <typename T>
using Result = fulltree::Result<T, Error>;

// The only way the balancer makes an interior node.
template <typename L>
Tree<L> join(const Tree<L>& l, L root, const Tree<L>& r) {
  return Tree<L>::node(l, std::move(root), r);
}

// One balancing pass. Groups of four [tree; label; tree; label] collapse
// into [joined tree; label]; the final three items [tree; label; tree]
// become the last join. Anything else is a malformed alternation, reported
// at the first deviating position.
template <typename L>
Result<AlternatingSeq<L>> pass(const AlternatingSeq<L>& s) {
  AlternatingSeq<L> out;
  out.reserve(s.size() / 2 + 1);
  std::size_t i = 0;
  for (;;) {
    // Every surviving group starts tree, label, tree.
    for (std::size_t off = 0; off < 3; ++off) {
      const std::size_t at = i + off;
      const bool want_tree = off != 1;
      if (at >= s.size() || is_tree(s[at]) != want_tree)
        return Error{ErrorKind::malformed_alternation, at + 1};
    }
    const Tree<L>& l = tree_of(s[i]);
    const L& root = elt_of(s[i + 1]);
    const Tree<L>& r = tree_of(s[i + 2]);
    if (s.size() - i == 3) {
      ops::clause();
      out.push_back(tree_item(join(l, root, r)));
      return out;
    }
    // A fourth item must be the label carried over to the next round.
    if (is_tree(s[i + 3])) return Error{ErrorKind::malformed_alternation, i + 4};
    ops::clause();
    out.push_back(tree_item(join(l, root, r)));
    out.push_back(s[i + 3]);
    i += 4;
  }
}

// Repeated passes until a single tree remains. The empty sequence is the
// leaf; a lone pending label is irreducible and reported as a length error.
template <typename L>
Result<Tree<L>> loop(AlternatingSeq<L> s) {
  for (;;) {
    if (s.empty()) {
      ops::clause();
      return Tree<L>::leaf();
    }
    if (s.size() == 1) {
      if (!is_tree(s[0])) return Error{ErrorKind::bad_length, 1};
      ops::clause();
      return tree_of(s[0]);
    }
    ops::clause();
    auto next = pass(s);
    if (!next.ok()) return next.error();
    s = std::move(next).value();
  }
}

struct CompletionShape {
  std::uint64_t pow2 = 0;     // smallest power of two strictly above n
  std::uint64_t missing = 0;  // pow2 - n - 1: leaves to pad in
};

// Doubling search for the padding budget. Lengths of 2^62 and above are
// rejected before the doubling could wrap around.
inline Result<CompletionShape> completion_shape(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << 62)) return Error{ErrorKind::overflow, 0};
  std::uint64_t p = 1;
  while (p <= n) {
    ops::clause();
    p *= 2;
  }
  return CompletionShape{p, p - n - 1};
}

// Stretches a label list into an alternating sequence. While the budget
// lasts, each label goes behind a bare leaf and stays pending; afterwards
// labels pair up into height-1 nodes with every second one kept pending,
// and a final odd label becomes a height-1 node of its own.
template <typename L>
AlternatingSeq<L> pad(std::uint64_t missing, const std::vector<L>& labels) {
  AlternatingSeq<L> out;
  out.reserve(2 * labels.size());
  std::size_t i = 0;
  while (i < labels.size() && missing != 0) {
    ops::clause();
    out.push_back(tree_item(Tree<L>::leaf()));
    out.push_back(elt(labels[i]));
    --missing;
    ++i;
  }
  while (labels.size() - i >= 2) {
    ops::clause();
    out.push_back(tree_item(join(Tree<L>::leaf(), labels[i], Tree<L>::leaf())));
    out.push_back(elt(labels[i + 1]));
    i += 2;
  }
  if (i < labels.size()) {
    ops::clause();
    out.push_back(tree_item(join(Tree<L>::leaf(), labels[i], Tree<L>::leaf())));
  } else {
    ops::clause();
  }
  return out;
}

// Pads the input out to the well-formed length 2^k - 1 a loop can reduce.
template <typename L>
Result<AlternatingSeq<L>> complete(const std::vector<L>& labels) {
  if (labels.empty()) {
    ops::clause();
    return AlternatingSeq<L>{};
  }
  auto shape = completion_shape(labels.size());
  if (!shape.ok()) return shape.error();
  const std::uint64_t missing = shape.value().missing;
  assert(missing <= labels.size() - 1);  // 2^(1 + floor(log2 n)) <= 2n
  ops::clause();
  return pad(missing, labels);
}

template <typename L>
Result<Tree<L>> balance(const std::vector<L>& labels) {
  auto c = complete(labels);
  if (!c.ok()) return c.error();
  return loop(std::move(c).value());
}

}  // namespace fulltree::naive

namespace fulltree {

// First balancer: pad, then join bottom-up over a flat vector. The infix
// order of the result is exactly the input list.
template <typename L>
naive::Result<Tree<L>> balance_naive(const std::vector<L>& labels) {
  return naive::balance(labels);
}

}  // namespace fulltree
