#include <doctest.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fulltree/binary_list.hpp"
#include "fulltree/errors.hpp"
#include "fulltree/ops.hpp"
#include "support.hpp"

using fulltree::BinaryList;
using fulltree::FullTreeWitness;
using fulltree::PackedValue;
using fulltree::Tree;

namespace {

using Pack = PackedValue<int>;
using Witness = FullTreeWitness<int>;

Pack p(int x) { return Pack::leaf(x); }

Pack p(Pack a, Pack b) { return Pack::pair_of(std::move(a), std::move(b)); }

Tree<int> lf() { return Tree<int>::leaf(); }

Tree<int> nd(Tree<int> l, int x, Tree<int> r) {
  return Tree<int>::node(std::move(l), x, std::move(r));
}

}  // namespace

TEST_CASE("binary lists carry one or two packs per digit") {
  auto z = BinaryList<int>::zero();
  CHECK(z.empty());
  CHECK(z.value() == 0);
  CHECK(z.flat_size() == 0);

  auto one = BinaryList<int>::tpo(p(1), BinaryList<int>::zero());
  CHECK(one.digit_count() == 1);
  CHECK(one.value() == 1);
  CHECK(one.base_depth() == 0);
  CHECK(!one.digit(0).second.has_value());

  auto three = BinaryList<int>::tpt(p(1), p(2), BinaryList<int>::tpo(p(p(3), p(4)), {}));
  CHECK(three.digit_count() == 2);
  CHECK(three.value() == 4);
  CHECK(three.flat_size() == 4);
  CHECK(three.flatten() == std::vector<int>{1, 2, 3, 4});

  CHECK_THROWS_AS(BinaryList<int>::tpo(p(1), BinaryList<int>::tpo(p(2), {})),
                  fulltree::DepthMismatchError);
  CHECK_THROWS_AS(BinaryList<int>::tpt(p(1), p(p(2), p(3)), {}),
                  fulltree::DepthMismatchError);
}

TEST_CASE("bl_cons follows the increment clauses") {
  auto l1 = fulltree::bl_cons(1, BinaryList<int>::zero());
  CHECK(l1 == BinaryList<int>::tpo(p(1), {}));

  auto l2 = fulltree::bl_cons(1, BinaryList<int>::tpo(p(2), {}));
  CHECK(l2 == BinaryList<int>::tpt(p(1), p(2), {}));

  auto carried = fulltree::bl_cons(
      1, BinaryList<int>::tpt(p(2), p(3), BinaryList<int>::tpo(p(p(4), p(5)), {})));
  CHECK(carried ==
        BinaryList<int>::tpo(p(1), BinaryList<int>::tpt(p(p(2), p(3)), p(p(4), p(5)), {})));
}

TEST_CASE("bl_of_list builds little-endian counts") {
  CHECK(fulltree::bl_of_list(std::vector<int>{}).empty());

  auto four = fulltree::bl_of_list(std::vector<int>{1, 2, 3, 4});
  CHECK(four == BinaryList<int>::tpt(p(1), p(2), BinaryList<int>::tpo(p(p(3), p(4)), {})));

  auto five = fulltree::bl_of_list(std::vector<int>{1, 2, 3, 4, 5});
  CHECK(five ==
        BinaryList<int>::tpo(p(1), BinaryList<int>::tpt(p(p(2), p(3)), p(p(4), p(5)), {})));
}

TEST_CASE("bl_of_list round-trips every short list") {
  testsupport::for_each_list(2, 12, [](const std::vector<int>& l) {
    auto bl = fulltree::bl_of_list(l);
    CHECK(bl.flatten() == l);
    CHECK(bl.value() == l.size());
    for (std::size_t i = 0; i < bl.digit_count(); ++i) {
      const auto& d = bl.digit(i);
      CHECK(d.first.depth() == bl.base_depth() + i);
      if (d.second) CHECK(d.second->depth() == bl.base_depth() + i);
    }
  });

  std::mt19937_64 rng(20260816);
  std::vector<int> big(4096 + static_cast<int>(rng() % 1000));
  for (auto& x : big) x = static_cast<int>(rng() % 1000);
  auto bl = fulltree::bl_of_list(big);
  CHECK(bl.flatten() == big);
  CHECK(bl.value() == big.size());
}

TEST_CASE("cons does amortized constant work") {
  fulltree::ops::reset();
  auto four = fulltree::bl_of_list(testsupport::int_labels(4));
  CHECK(four.value() == 4);
  CHECK(fulltree::ops::read().cons_clauses == 5);

  for (int n : {16, 255, 256, 1024}) {
    fulltree::ops::reset();
    auto bl = fulltree::bl_of_list(testsupport::int_labels(n));
    CHECK(bl.value() == static_cast<std::uint64_t>(n));
    CHECK(fulltree::ops::read().cons_clauses <= 2 * static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("bl_twice doubles by rewriting the leading digits") {
  CHECK(fulltree::bl_twice(BinaryList<int>::zero()).empty());

  auto one_pair = BinaryList<int>::tpo(p(p(1), p(2)), {});
  auto doubled = fulltree::bl_twice(one_pair);
  CHECK(doubled == BinaryList<int>::tpt(p(1), p(2), {}));
  CHECK(doubled.value() == 2);
  CHECK(doubled.base_depth() == 0);

  auto two_pairs = BinaryList<int>::tpt(p(p(1), p(2)), p(p(3), p(4)), {});
  auto four = fulltree::bl_twice(two_pairs);
  CHECK(four == BinaryList<int>::tpt(p(1), p(2), BinaryList<int>::tpo(p(p(3), p(4)), {})));
  CHECK(four.value() == 4);

  CHECK_THROWS_AS(fulltree::bl_twice(BinaryList<int>::tpo(p(1), {})),
                  fulltree::DepthMismatchError);
}

TEST_CASE("bl_twice recurses through a run of one-digits") {
  // value 0b11 over pairs: digit 0 = (1,2), digit 1 = ((3,4),(5,6)).
  auto run = BinaryList<int>::tpo(
      p(p(1), p(2)), BinaryList<int>::tpo(p(p(p(3), p(4)), p(p(5), p(6))), {}));
  auto doubled = fulltree::bl_twice(run);
  CHECK(doubled == BinaryList<int>::tpt(
                       p(1), p(2),
                       BinaryList<int>::tpt(p(p(3), p(4)), p(p(5), p(6)), {})));
  CHECK(doubled.value() == 6);
  CHECK(doubled.flatten() == testsupport::int_labels(6));
}

TEST_CASE("pl_of_binary_list folds digits into power-list levels") {
  auto d = [](const std::string& x) { return "d:" + x; };
  auto f = [](const std::string& a, const std::string& b) { return a + b; };

  CHECK(fulltree::pl_of_binary_list(d, f, fulltree::BinaryList<std::string>::zero()).empty());

  auto one = fulltree::pl_of_binary_list(d, f, fulltree::bl_of_list(std::vector<std::string>{"1"}));
  CHECK(one.depth() == 1);
  CHECK(one.level(0).value() == "d:1");

  auto two =
      fulltree::pl_of_binary_list(d, f, fulltree::bl_of_list(std::vector<std::string>{"1", "2"}));
  CHECK(two.depth() == 1);
  CHECK(two.level(0).value() == "12");

  // [1,2,3] has digits 1 then 1-over-pairs: the deep digit maps d over both
  // halves of its pair.
  auto three = fulltree::pl_of_binary_list(
      d, f, fulltree::bl_of_list(std::vector<std::string>{"1", "2", "3"}));
  CHECK(three.depth() == 2);
  CHECK(three.level(0).value() == "d:1");
  CHECK(three.level(1).flatten() == std::vector<std::string>{"d:2", "d:3"});

  // [1,2,3,4] has a 2 digit then a 1-over-pairs digit: level 0 fuses the
  // front pair, level 1 maps d over both halves of the deep pair.
  auto four = fulltree::pl_of_binary_list(
      d, f, fulltree::bl_of_list(std::vector<std::string>{"1", "2", "3", "4"}));
  CHECK(four.depth() == 2);
  CHECK(four.level(0).value() == "12");
  CHECK(four.level(1).flatten() == std::vector<std::string>{"d:3", "d:4"});
}

TEST_CASE("apl_of_binary_list peels the front digit") {
  auto up = [](int x) { return Witness::single(x); };
  auto id = [](int x) { return x; };

  auto two = fulltree::apl_of_binary_list(Witness::leaf(1), up, id,
                                          fulltree::bl_of_list(std::vector<int>{1, 2}));
  CHECK(two.depth() == 2);
  CHECK(two.head() == Witness::single(1));
  CHECK(two.tail().level(0).value() == std::pair<int, Witness>{2, Witness::leaf(1)});

  auto three = fulltree::apl_of_binary_list(Witness::leaf(1), up, id,
                                            fulltree::bl_of_list(testsupport::int_labels(3)));
  CHECK(three.depth() == 2);
  CHECK(three.head() == Witness::single(1));
  CHECK(three.tail().level(0).value() == std::pair<int, Witness>{2, Witness::single(3)});

  std::vector<int> odd_order;
  std::vector<int> even_order;
  auto seven = fulltree::apl_of_binary_list(Witness::leaf(1), up, id,
                                            fulltree::bl_of_list(testsupport::int_labels(7)));
  seven.for_each_slot(
      [&](const Witness& w) {
        odd_order.push_back(w.tree().is_leaf() ? 0 : w.tree().label());
      },
      [&](int x) { even_order.push_back(x); });
  CHECK(odd_order == std::vector<int>{1, 3, 5, 7});
  CHECK(even_order == std::vector<int>{2, 4, 6});
}

TEST_CASE("balance_structural matches the hand traces") {
  CHECK(fulltree::balance_structural(std::vector<int>{}) == Witness::leaf(0));
  CHECK(fulltree::balance_structural(std::vector<int>{1}) == Witness::single(1));

  auto two = fulltree::balance_structural(std::vector<int>{1, 2});
  CHECK(two.index() == 2);
  CHECK(two.tree() == nd(nd(lf(), 1, lf()), 2, lf()));

  auto six = fulltree::balance_structural(testsupport::int_labels(6));
  CHECK(six.index() == 3);
  CHECK(six.tree() == nd(nd(nd(lf(), 1, lf()), 2, lf()), 3,
                         nd(nd(lf(), 4, lf()), 5, nd(lf(), 6, lf()))));
}

TEST_CASE("the structural balancer agrees with the typed one") {
  for (int n = 0; n <= 64; ++n) {
    const auto labels = testsupport::int_labels(n);
    const auto s = fulltree::balance_structural(labels);
    const auto t = fulltree::balance_typed(labels);
    CHECK(s.tree() == t.tree());
    CHECK(s.index() == t.index());
    CHECK(infix_traversal(s.tree()) == labels);
    const auto k = fulltree::is_full(s.tree());
    REQUIRE(k.has_value());
    CHECK(*k == static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(n))));
  }
}
