#pragma once

#include <bit>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fulltree/alt_power_list.hpp"
#include "fulltree/binary_list.hpp"
#include "fulltree/errors.hpp"
#include "fulltree/naive.hpp"
#include "fulltree/tree.hpp"

// Deliberately naive reference implementations used to validate the library.
// Nothing here shares traversal or fullness logic with the main modules:
// fullness is decided by counting level occupancy, traversal by an explicit
// stack, and shapes by brute-force enumeration.
namespace fulltree::oracle {

// A tree is full when every level of internal nodes except the last two can
// prove itself saturated: levels 0..h-2 must hold exactly 2^level nodes.
template <typename L>
bool bfs_is_full(const Tree<L>& t) {
  std::vector<std::size_t> counts;
  std::deque<Tree<L>> frontier;
  if (!t.is_leaf()) frontier.push_back(t);
  while (!frontier.empty()) {
    counts.push_back(frontier.size());
    std::deque<Tree<L>> next;
    for (const Tree<L>& cur : frontier) {
      if (!cur.left().is_leaf()) next.push_back(cur.left());
      if (!cur.right().is_leaf()) next.push_back(cur.right());
    }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i + 1 < counts.size(); ++i)
    if (counts[i] != (std::size_t{1} << i)) return false;
  return true;
}

// Infix labels via an explicit stack rather than recursion.
template <typename L>
std::vector<L> inorder_labels(const Tree<L>& t) {
  std::vector<L> out;
  std::vector<Tree<L>> stack;
  Tree<L> cur = t;
  while (!cur.is_leaf() || !stack.empty()) {
    while (!cur.is_leaf()) {
      stack.push_back(cur);
      cur = cur.left();
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur.label());
    cur = cur.right();
  }
  return out;
}

using Shape = Tree<int>;

// Streams every binary tree shape with n internal nodes, one callback each.
inline void enumerate_shapes(std::size_t n, const std::function<void(const Shape&)>& emit) {
  if (n == 0) {
    emit(Shape::leaf());
    return;
  }
  for (std::size_t left = 0; left < n; ++left) {
    enumerate_shapes(left, [&](const Shape& l) {
      enumerate_shapes(n - 1 - left, [&](const Shape& r) { emit(Shape::node(l, 0, r)); });
    });
  }
}

// All full shapes with n nodes, by filtering the brute-force enumeration.
inline std::vector<Shape> enumerate_full_trees(std::size_t n) {
  if (n > 15)
    throw SizeLimitError("shape enumeration is capped at 15 nodes");
  std::vector<Shape> out;
  enumerate_shapes(n, [&](const Shape& s) {
    if (bfs_is_full(s)) out.push_back(s);
  });
  return out;
}

// Greedy delta debugging: drop ever-smaller chunks while the input still
// fails, ending at a locally minimal failing list.
template <typename L, typename Pred>
std::vector<L> minimize_failing(std::vector<L> labels, Pred still_fails) {
  std::size_t chunk = labels.size() / 2;
  if (chunk == 0) chunk = 1;
  for (;;) {
    bool shrunk = false;
    for (std::size_t at = 0; at + chunk <= labels.size();) {
      std::vector<L> candidate;
      candidate.reserve(labels.size() - chunk);
      candidate.insert(candidate.end(), labels.begin(), labels.begin() + at);
      candidate.insert(candidate.end(), labels.begin() + at + chunk, labels.end());
      if (still_fails(candidate)) {
        labels = std::move(candidate);
        shrunk = true;
      } else {
        at += chunk;
      }
    }
    if (shrunk) continue;
    if (chunk == 1) break;
    chunk /= 2;
  }
  return labels;
}

template <typename L>
struct Issue {
  std::string algo;
  std::string detail;
  std::vector<L> minimized;
};

template <typename L>
struct Report {
  std::vector<Issue<L>> issues;
  bool ok() const { return issues.empty(); }
};

namespace detail {

template <typename L>
using BalanceFn = std::function<Tree<L>(const std::vector<L>&)>;

template <typename L>
std::vector<std::pair<std::string, BalanceFn<L>>> tiers() {
  return {
      {"naive",
       [](const std::vector<L>& ls) {
         auto r = naive::balance(ls);
         if (!r.ok()) throw std::runtime_error("naive balancer reported an internal error");
         return std::move(r).value();
       }},
      {"typed", [](const std::vector<L>& ls) { return balance_typed(ls).tree(); }},
      {"structural", [](const std::vector<L>& ls) { return balance_structural(ls).tree(); }},
  };
}

template <typename L>
std::optional<std::string> first_failure(const BalanceFn<L>& balance,
                                         const std::vector<L>& labels) {
  Tree<L> t;
  try {
    t = balance(labels);
  } catch (const std::exception& e) {
    return std::string("balancer threw: ") + e.what();
  }
  if (inorder_labels(t) != labels) return std::string("infix traversal disagrees with the input");
  const bool level_full = bfs_is_full(t);
  const std::optional<std::size_t> k = is_full(t);
  if (level_full != k.has_value())
    return std::string("level-occupancy and height-index fullness disagree");
  if (!level_full) return std::string("result tree is not full");
  if (*k != static_cast<std::size_t>(std::bit_width(labels.size())))
    return std::string("height index disagrees with 1+floor(log2 n)");
  return std::nullopt;
}

}  // namespace detail

// Runs all three balancers and checks order, fullness (two independent
// ways), and the height law; failures come back minimized.
template <typename L>
Report<L> cross_check(const std::vector<L>& labels) {
  Report<L> report;
  for (auto& [name, fn] : detail::tiers<L>()) {
    if (auto why = detail::first_failure<L>(fn, labels)) {
      auto pred = [&fn](const std::vector<L>& ls) {
        return detail::first_failure<L>(fn, ls).has_value();
      };
      report.issues.push_back(Issue<L>{name, *why, minimize_failing(labels, pred)});
    }
  }
  return report;
}

}  // namespace fulltree::oracle
