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
#include "fulltree/packed.hpp"

namespace fulltree {

// A sequence of length 2^k - 1 stored as k levels, level i holding one
// packed value of 2^i elements. Prepending a level (twice_plus_one) is
// constant time. The level depths carry what a nesting datatype would fix
// statically: level i is exactly base_depth() + i deep, and base_depth is 0
// unless the list stands for a list over pairs (1), pairs of pairs (2), ...
template <typename T>
class PowerList {
 public:
  static PowerList zero() { return {}; }

  static PowerList twice_plus_one(PackedValue<T> head, PowerList tail) {
    if (!tail.levels_.empty() && tail.levels_.front().depth() != head.depth() + 1)
      throw DepthMismatchError("power list tail must sit one level deeper than its head");
    tail.levels_.push_front(std::move(head));
    return tail;
  }

  // Reassembles a list from already-stacked levels; depths must step by one.
  static PowerList from_levels(std::deque<PackedValue<T>> levels) {
    for (std::size_t i = 1; i < levels.size(); ++i)
      if (levels[i].depth() != levels[i - 1].depth() + 1)
        throw DepthMismatchError("power list levels must deepen one step at a time");
    PowerList out;
    out.levels_ = std::move(levels);
    return out;
  }

  bool empty() const { return levels_.empty(); }
  std::size_t depth() const { return levels_.size(); }  // the k in 2^k - 1
  std::size_t base_depth() const { return levels_.empty() ? 0 : levels_.front().depth(); }

  const PackedValue<T>& level(std::size_t i) const { return levels_[i]; }

  // Everything after level 0: the same elements read as a list over pairs.
  PowerList drop_first_level() const {
    PowerList out;
    out.levels_.assign(levels_.begin() + 1, levels_.end());
    return out;
  }

  std::vector<T> flatten() const {
    std::vector<T> out;
    out.reserve(flat_size());
    for (const PackedValue<T>& lvl : levels_) lvl.flatten_into(out);
    return out;
  }

  std::size_t flat_size() const {
    std::size_t n = 0;
    for (const PackedValue<T>& lvl : levels_) n += lvl.size();
    return n;
  }

  friend bool operator==(const PowerList& a, const PowerList& b) {
    return a.levels_ == b.levels_;
  }
  friend bool operator!=(const PowerList& a, const PowerList& b) { return !(a == b); }

 private:
  std::deque<PackedValue<T>> levels_;
};

// What remains of a list once adjacent elements are paired: nothing, a lone
// head in front of the pairs, or a complete first pair in front of the rest.
template <typename T>
struct ParityView {
  enum class Kind { empty, odd, even };

  Kind kind = Kind::empty;
  std::optional<T> head;                      // set iff kind == odd
  std::optional<std::pair<T, T>> first_pair;  // set iff kind == even
  std::deque<std::pair<T, T>> pairs;
};

// Right fold: each element either completes a pair with the current head or
// becomes the new lone head in front of the pairs built so far.
template <typename T>
ParityView<T> pair_up(const std::vector<T>& elems) {
  using Kind = typename ParityView<T>::Kind;
  ParityView<T> acc;
  for (std::size_t i = elems.size(); i-- > 0;) {
    ops::clause();
    switch (acc.kind) {
      case Kind::empty:
        acc.kind = Kind::odd;
        acc.head = elems[i];
        break;
      case Kind::odd:
        acc.kind = Kind::even;
        acc.first_pair = std::pair<T, T>(elems[i], *std::move(acc.head));
        acc.head.reset();
        break;
      case Kind::even:
        acc.pairs.push_front(*std::move(acc.first_pair));
        acc.first_pair.reset();
        acc.kind = Kind::odd;
        acc.head = elems[i];
        break;
    }
  }
  return acc;
}

// Maps f over the elements. The applied function is doubled once per level,
// so the version reaching level i rebuilds that level's pack by applying f
// at the leaves. Each doubling composes one closure in constant time; the
// work is paid only where the function is applied.
template <typename A, typename F,
          typename B = std::remove_cvref_t<std::invoke_result_t<const F&, const A&>>>
PowerList<B> pl_map(F f, const PowerList<A>& l) {
  if (!l.empty() && l.base_depth() != 0)
    throw DepthMismatchError("pl_map expects an element-typed power list");
  using Fn = std::function<PackedValue<B>(const PackedValue<A>&)>;
  Fn level_fn = [f](const PackedValue<A>& p) {
    ops::clause();
    return PackedValue<B>::leaf(f(p.value()));
  };
  std::deque<PackedValue<B>> out;
  for (std::size_t i = 0; i < l.depth(); ++i) {
    out.push_back(level_fn(l.level(i)));
    Fn prev = std::move(level_fn);
    level_fn = [prev = std::move(prev)](const PackedValue<A>& p) {
      ops::clause();
      return PackedValue<B>::pair_of(prev(p.first()), prev(p.second()));
    };
  }
  return PowerList<B>::from_levels(std::move(out));
}

// Builds a power list from a plain list, given how to pad a lone element
// (pad) and how to fuse a pair (coerce). Both functions are doubled at each
// step, tracking how the element type squares: after j steps pad rewrites a
// depth-j pack elementwise, and coerce collapses a depth-(j+1) pack to
// depth j by fusing adjacent base values.
template <typename A, typename Pad, typename Coerce,
          typename B = std::remove_cvref_t<std::invoke_result_t<const Pad&, const A&>>>
PowerList<B> pl_of_list(Pad pad, Coerce coerce, const std::vector<A>& elems) {
  using PackA = PackedValue<A>;
  using PackB = PackedValue<B>;
  using Fn = std::function<PackB(const PackA&)>;
  using Kind = typename ParityView<PackA>::Kind;

  Fn pad_fn = [pad](const PackA& p) {
    ops::clause();
    return PackB::leaf(pad(p.value()));
  };
  Fn coerce_fn = [coerce](const PackA& p) {
    ops::clause();
    return PackB::leaf(coerce(p.first().value(), p.second().value()));
  };
  const auto doubled = [](Fn g) -> Fn {
    return [g = std::move(g)](const PackA& p) {
      ops::clause();
      return PackB::pair_of(g(p.first()), g(p.second()));
    };
  };

  std::vector<PackA> bits;
  bits.reserve(elems.size());
  for (const A& a : elems) bits.push_back(PackA::leaf(a));

  std::deque<PackB> levels;
  for (;;) {
    ParityView<PackA> v = pair_up(bits);
    if (v.kind == Kind::empty) {
      ops::clause();
      break;
    }
    if (v.kind == Kind::odd) {
      ops::clause();
      levels.push_back(pad_fn(*v.head));
    } else {
      ops::clause();
      levels.push_back(coerce_fn(
          PackA::pair_of(std::move(v.first_pair->first), std::move(v.first_pair->second))));
    }
    bits.clear();
    for (auto& pr : v.pairs)
      bits.push_back(PackA::pair_of(std::move(pr.first), std::move(pr.second)));
    pad_fn = doubled(std::move(pad_fn));
    coerce_fn = doubled(std::move(coerce_fn));
  }
  return PowerList<B>::from_levels(std::move(levels));
}

}  // namespace fulltree
