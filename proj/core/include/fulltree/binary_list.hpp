#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "fulltree/alt_power_list.hpp"
#include "fulltree/errors.hpp"
#include "fulltree/ops.hpp"
#include "fulltree/packed.hpp"
#include "fulltree/power_list.hpp"
#include "fulltree/tree.hpp"

namespace fulltree {

// A list in the 1-2 binary number system: digit i is worth 2^i and holds one
// or two packed values of depth base + i (there is no 0 digit, so every
// length has exactly one representation). Little-endian: the first digit is
// the least significant. A "list over pairs" is the same structure with the
// base depth raised by one.
template <typename T>
class BinaryList {
 public:
  struct Digit {
    PackedValue<T> first;
    std::optional<PackedValue<T>> second;  // engaged when the digit is 2

    bool operator==(const Digit& o) const {
      return first == o.first && second == o.second;
    }
  };

  static BinaryList zero() { return {}; }

  // Digit 1 in front: a, then the tail one depth deeper.
  static BinaryList tpo(PackedValue<T> a, BinaryList tail) {
    check_prepend(a, tail);
    tail.digits_.push_front(Digit{std::move(a), std::nullopt});
    return tail;
  }

  // Digit 2 in front: a then b, then the tail one depth deeper.
  static BinaryList tpt(PackedValue<T> a, PackedValue<T> b, BinaryList tail) {
    if (a.depth() != b.depth())
      throw DepthMismatchError("both values of a 2 digit must share a depth");
    check_prepend(a, tail);
    tail.digits_.push_front(Digit{std::move(a), std::move(b)});
    return tail;
  }

  bool empty() const { return digits_.empty(); }
  std::size_t digit_count() const { return digits_.size(); }
  std::size_t base_depth() const { return empty() ? 0 : digits_.front().first.depth(); }
  const Digit& digit(std::size_t i) const { return digits_.at(i); }

  // Number of base-depth values: sum of digit * 2^i.
  std::uint64_t value() const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i)
      total += (digits_[i].second ? 2u : 1u) * (std::uint64_t{1} << i);
    return total;
  }

  std::uint64_t flat_size() const { return value() << base_depth(); }

  std::vector<T> flatten() const {
    std::vector<T> out;
    out.reserve(flat_size());
    for (const Digit& d : digits_) {
      d.first.flatten_into(out);
      if (d.second) d.second->flatten_into(out);
    }
    return out;
  }

  // The tail view: everything after the first digit, one depth deeper.
  BinaryList drop_first_digit() const {
    if (empty()) throw std::out_of_range("drop_first_digit on an empty binary list");
    BinaryList out;
    out.digits_.assign(digits_.begin() + 1, digits_.end());
    return out;
  }

  bool operator==(const BinaryList& o) const { return digits_ == o.digits_; }

  // Adds one base-depth value in front. 1 digits absorb it without a carry;
  // 2 digits hand their pair one level deeper and keep only the newcomer, so
  // a run of 2s is the only way the walk continues.
  void cons_in_place(PackedValue<T> a) {
    if (!empty() && base_depth() != a.depth())
      throw DepthMismatchError("cons value must match the list's base depth");
    std::size_t i = 0;
    for (;;) {
      if (i == digits_.size()) {
        ops::cons_clause();
        digits_.push_back(Digit{std::move(a), std::nullopt});
        return;
      }
      Digit& d = digits_[i];
      if (!d.second) {
        ops::cons_clause();
        d.second = std::move(d.first);
        d.first = std::move(a);
        return;
      }
      ops::cons_clause();
      PackedValue<T> carry = PackedValue<T>::pair_of(d.first, *d.second);
      d.first = std::move(a);
      d.second.reset();
      a = std::move(carry);
      ++i;
    }
  }

 private:
  static void check_prepend(const PackedValue<T>& a, const BinaryList& tail) {
    if (!tail.empty() && tail.base_depth() != a.depth() + 1)
      throw DepthMismatchError("tail of a binary list must sit one depth deeper");
  }

  std::deque<Digit> digits_;  // digit i holds packs of depth base + i
};

template <typename T>
BinaryList<T> bl_cons(const T& a, BinaryList<T> l) {
  l.cons_in_place(PackedValue<T>::leaf(a));
  return l;
}

template <typename T>
BinaryList<T> bl_of_list(const std::vector<T>& labels) {
  BinaryList<T> out = BinaryList<T>::zero();
  for (auto it = labels.rbegin(); it != labels.rend(); ++it)
    out = bl_cons(*it, std::move(out));
  return out;
}

// Doubles a list over pairs into a list over its elements: leading 1 digits
// open into 2s one after another, and the first 2 digit opens its first pair
// while its second pair drops unopened into a fresh 1 digit, leaving
// everything deeper untouched.
template <typename T>
BinaryList<T> bl_twice(const BinaryList<T>& l) {
  if (l.empty()) {
    ops::clause();
    return BinaryList<T>::zero();
  }
  if (l.base_depth() == 0)
    throw DepthMismatchError("can only double a binary list over pairs");
  const auto& front = l.digit(0);
  if (!front.second) {
    ops::clause();
    return BinaryList<T>::tpt(front.first.first(), front.first.second(),
                              bl_twice(l.drop_first_digit()));
  }
  ops::clause();
  return BinaryList<T>::tpt(front.first.first(), front.first.second(),
                            BinaryList<T>::tpo(*front.second, l.drop_first_digit()));
}

// Converts a binary list into a power list: a 1 digit passes through d, a 2
// digit fuses under f, and both conversions double with each deeper digit.
template <typename T, typename D, typename F,
          typename B = std::remove_cvref_t<std::invoke_result_t<const D&, const T&>>>
PowerList<B> pl_of_binary_list(D d, F f, const BinaryList<T>& l) {
  if (!l.empty() && l.base_depth() != 0)
    throw DepthMismatchError("conversion expects a binary list over plain elements");
  using PackA = PackedValue<T>;
  using PackB = PackedValue<B>;
  using Fn = std::function<PackB(const PackA&)>;
  Fn dd = [d](const PackA& p) {
    ops::clause();
    return PackB::leaf(d(p.value()));
  };
  Fn ff = [f](const PackA& p) {
    ops::clause();
    return PackB::leaf(f(p.first().value(), p.second().value()));
  };
  std::deque<PackB> levels;
  for (std::size_t i = 0; i < l.digit_count(); ++i) {
    const auto& dig = l.digit(i);
    if (!dig.second) {
      ops::clause();
      levels.push_back(dd(dig.first));
    } else {
      ops::clause();
      levels.push_back(ff(PackA::pair_of(dig.first, *dig.second)));
    }
    Fn dprev = std::move(dd);
    dd = [dprev = std::move(dprev)](const PackA& p) {
      ops::clause();
      return PackB::pair_of(dprev(p.first()), dprev(p.second()));
    };
    Fn fprev = std::move(ff);
    ff = [fprev = std::move(fprev)](const PackA& p) {
      ops::clause();
      return PackB::pair_of(fprev(p.first()), fprev(p.second()));
    };
  }
  return PowerList<B>::from_levels(std::move(levels));
}

// Converts a binary list of labels into an alternating power list. The front
// digit provides the head odd slot; a leading 1 digit doubles the tail into
// element form, while a leading 2 digit re-fronts its second label as a
// fresh 1 digit. Lone labels in the tail pad with the seed odd slot d.
template <typename L, typename Odd, typename F, typename G,
          typename Even = std::remove_cvref_t<std::invoke_result_t<const G&, const L&>>>
AlternatingPowerList<Odd, Even> apl_of_binary_list(Odd d, F f, G g,
                                                   const BinaryList<L>& l) {
  using Apl = AlternatingPowerList<Odd, Even>;
  using Cell = typename Apl::Cell;
  if (l.empty()) {
    ops::clause();
    return Apl::zero();
  }
  if (l.base_depth() != 0)
    throw DepthMismatchError("conversion expects a binary list over plain labels");
  auto dprime = [g, d](const L& x) { return Cell(g(x), d); };
  auto gf = [g, f](const L& x, const L& y) { return Cell(g(x), f(y)); };
  const auto& front = l.digit(0);
  const L a = front.first.value();
  if (!front.second) {
    ops::clause();
    PowerList<Cell> tail = pl_of_binary_list(dprime, gf, bl_twice(l.drop_first_digit()));
    return Apl::twice_plus_one(f(a), std::move(tail));
  }
  ops::clause();
  BinaryList<L> refronted = BinaryList<L>::tpo(*front.second, l.drop_first_digit());
  PowerList<Cell> tail = pl_of_binary_list(dprime, gf, refronted);
  return Apl::twice_plus_one(f(a), std::move(tail));
}

// Third balancer: structurally recursive on the 1-2 digits, so termination
// is syntactic and no completion-shape arithmetic is needed.
template <typename L>
FullTreeWitness<L> balance_structural(const std::vector<L>& labels) {
  using Witness = FullTreeWitness<L>;
  BinaryList<L> bl = bl_of_list(labels);
  auto f = [](const L& x) { return singleton(x); };
  auto g = [](const L& x) { return x; };
  auto apl = apl_of_binary_list(Witness::leaf(1), f, g, bl);
  if (apl.empty()) {
    ops::clause();
    return Witness::leaf(0);
  }
  ops::clause();
  return loop_typed(BalancedApl<L>::checked(std::move(apl), 1));
}

}  // namespace fulltree
