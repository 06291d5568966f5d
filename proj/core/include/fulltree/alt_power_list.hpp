#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "fulltree/errors.hpp"
#include "fulltree/ops.hpp"
#include "fulltree/power_list.hpp"
#include "fulltree/tree.hpp"

namespace fulltree {

// Alternating power list: a head odd slot followed by 1, 2, 4, ... cells of
// (even slot, odd slot). Flattened it reads odd, even, odd, ..., odd: the
// same alternation the naive balancer keeps in a flat vector, but with the
// doubling structure explicit and the slot kinds separated by type.
template <typename Odd, typename Even>
class AlternatingPowerList {
 public:
  using Cell = std::pair<Even, Odd>;

  static AlternatingPowerList zero() { return {}; }

  static AlternatingPowerList twice_plus_one(Odd head, PowerList<Cell> tail) {
    if (!tail.empty() && tail.base_depth() != 0)
      throw DepthMismatchError("alternating tail must start at depth 0");
    AlternatingPowerList out;
    out.head_ = std::move(head);
    out.tail_ = std::move(tail);
    return out;
  }

  bool empty() const { return !head_.has_value(); }
  std::size_t depth() const { return empty() ? 0 : 1 + tail_.depth(); }  // 2^depth - 1 slots

  const Odd& head() const { return *head_; }
  const PowerList<Cell>& tail() const { return tail_; }

  // Visits the 2^depth - 1 slots in list order: head first, then each cell
  // contributing its even slot before its odd one.
  template <typename OddFn, typename EvenFn>
  void for_each_slot(OddFn on_odd, EvenFn on_even) const {
    if (empty()) return;
    on_odd(*head_);
    for (std::size_t i = 0; i < tail_.depth(); ++i)
      for (const Cell& c : tail_.level(i).flatten()) {
        on_even(c.first);
        on_odd(c.second);
      }
  }

 private:
  std::optional<Odd> head_;
  PowerList<Cell> tail_;
};

// Builds an alternating power list from labels: the first label becomes the
// head via up, the rest feed the power-list builder where a lone label is
// padded with `leaf` on its right and a paired label is raised with up.
template <typename L, typename Odd, typename Up, typename Id,
          typename Even = std::remove_cvref_t<std::invoke_result_t<const Id&, const L&>>>
AlternatingPowerList<Odd, Even> apl_of_list(Odd leaf, Up up, Id id,
                                            const std::vector<L>& labels) {
  using Apl = AlternatingPowerList<Odd, Even>;
  using Cell = typename Apl::Cell;
  if (labels.empty()) {
    ops::clause();
    return Apl::zero();
  }
  ops::clause();
  const std::vector<L> rest(labels.begin() + 1, labels.end());
  auto pad = [id, leaf](const L& x) { return Cell(id(x), leaf); };
  auto coerce = [id, up](const L& x, const L& y) { return Cell(id(x), up(y)); };
  PowerList<Cell> tail = pl_of_list(pad, coerce, rest);
  return Apl::twice_plus_one(up(labels.front()), std::move(tail));
}

// The typed balancer's working state: an alternating power list whose odd
// slots are full-tree witnesses sharing a single height index.
template <typename L>
class BalancedApl {
 public:
  using Witness = FullTreeWitness<L>;
  using Apl = AlternatingPowerList<Witness, L>;
  using Cell = typename Apl::Cell;

  // Validates that every tree slot carries exactly index p.
  static BalancedApl checked(Apl apl, std::size_t p) {
    bool ok = true;
    apl.for_each_slot([&](const Witness& w) { ok = ok && w.index() == p; },
                      [](const L&) {});
    if (!ok) throw HeightMismatchError("a tree slot disagrees with the shared height index");
    return BalancedApl(std::move(apl), p);
  }

  const Apl& apl() const { return apl_; }
  std::size_t slot_index() const { return p_; }
  std::size_t depth() const { return apl_.depth(); }

 private:
  BalancedApl(Apl apl, std::size_t p) : apl_(std::move(apl)), p_(p) {}

  Apl apl_;
  std::size_t p_;
};

// One typed pass: the head tree joins the first pending cell, and every
// deeper cell pair fuses under the same join, doubled level by level. The
// slot count halves, the shared index rises by one, and both facts are
// rechecked on the way out rather than trusted.
template <typename L>
BalancedApl<L> pass_typed(const FullTreeWitness<L>& t,
                          const typename BalancedApl<L>::Cell& head_cell,
                          const PowerList<typename BalancedApl<L>::Cell>& rest) {
  using Witness = FullTreeWitness<L>;
  using Cell = typename BalancedApl<L>::Cell;
  using Pack = PackedValue<Cell>;
  using Fn = std::function<Pack(const Pack&)>;

  const std::size_t p = t.index();
  ops::clause();
  Witness head = Witness::join(t, head_cell.first, head_cell.second);

  // join_fn collapses a pack of two cells (single, left), (root, right)
  // into the cell (single, join(left, root, right)).
  Fn join_fn = [](const Pack& pk) {
    ops::clause();
    const Cell a = pk.first().value();
    const Cell b = pk.second().value();
    return Pack::leaf(Cell(a.first, Witness::join(a.second, b.first, b.second)));
  };
  std::deque<Pack> levels;
  for (std::size_t i = 0; i < rest.depth(); ++i) {
    levels.push_back(join_fn(rest.level(i)));
    Fn prev = std::move(join_fn);
    join_fn = [prev = std::move(prev)](const Pack& pk) {
      ops::clause();
      return Pack::pair_of(prev(pk.first()), prev(pk.second()));
    };
  }
  using Apl = typename BalancedApl<L>::Apl;
  return BalancedApl<L>::checked(
      Apl::twice_plus_one(std::move(head), PowerList<Cell>::from_levels(std::move(levels))),
      p + 1);
}

// Passes until one witness remains. Depth drops by one per pass while the
// index rises by one, so the result index must land exactly at
// (depth - 1) + starting index; that arithmetic is asserted, not assumed.
template <typename L>
FullTreeWitness<L> loop_typed(const BalancedApl<L>& l) {
  if (l.depth() == 0)
    throw EmptyAplError("cannot reduce an empty alternating power list");
  const std::size_t expected = (l.depth() - 1) + l.slot_index();
  BalancedApl<L> cur = l;
  while (!cur.apl().tail().empty()) {
    ops::clause();
    const auto& tail = cur.apl().tail();
    const typename BalancedApl<L>::Cell head_cell = tail.level(0).value();
    cur = pass_typed(cur.apl().head(), head_cell, tail.drop_first_level());
  }
  ops::clause();
  FullTreeWitness<L> result = cur.apl().head();
  if (result.index() != expected)
    throw HeightMismatchError("reduced tree index does not match the depth arithmetic");
  return result;
}

// Second balancer: same joins as the naive one, but the doubling structure
// and the height indices travel with the data instead of being re-derived.
template <typename L>
FullTreeWitness<L> balance_typed(const std::vector<L>& labels) {
  if (labels.empty()) {
    ops::clause();
    return FullTreeWitness<L>::leaf(0);
  }
  ops::clause();
  auto up = [](const L& x) { return FullTreeWitness<L>::single(x); };
  auto id = [](const L& x) { return x; };
  auto apl = apl_of_list(FullTreeWitness<L>::leaf(1), up, id, labels);
  return loop_typed(BalancedApl<L>::checked(std::move(apl), 1));
}

}  // namespace fulltree
