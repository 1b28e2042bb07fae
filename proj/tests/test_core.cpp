#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oshlab/core.hpp"

using namespace oshlab;

namespace {

ElementSet set_of(std::initializer_list<int> elems) {
  ElementSet s;
  for (int e : elems) s = s.with(e);
  return s;
}

}  // namespace

TEST_CASE("element sets behave as bounded subsets of the positive integers") {
  ElementSet s = set_of({2, 3, 5});
  CHECK(s.count() == 3);
  CHECK(s.has(2));
  CHECK(!s.has(4));
  CHECK(s.min_element() == 2);
  CHECK(s.max_element() == 5);
  CHECK(s.elements() == std::vector<int>{2, 3, 5});
  CHECK(s.without(3) == set_of({2, 5}));
  CHECK(s.with(3) == s);
  CHECK(ElementSet::range(2, 4) == set_of({2, 3, 4}));
  CHECK(ElementSet::range(4, 2).empty());
  CHECK(ElementSet::full(3) == set_of({1, 2, 3}));
  CHECK(ElementSet::single(7) == set_of({7}));
  CHECK(s.complement_in(6) == set_of({1, 4, 6}));
  CHECK(s.subset_of(ElementSet::full(5)));
  CHECK(!ElementSet::full(5).subset_of(s));
  CHECK(s.intersect(set_of({3, 4, 5})) == set_of({3, 5}));
  CHECK(s.minus(set_of({3, 4, 5})) == set_of({2}));
  CHECK(s.union_with(set_of({1})) == set_of({1, 2, 3, 5}));
  CHECK_THROWS_AS(ElementSet::single(0), Error);
  CHECK_THROWS_AS(ElementSet::single(64), Error);
  CHECK(ElementSet().min_element() == 0);
  CHECK(ElementSet().max_element() == 0);
}

TEST_CASE("canonical order sorts by cardinality first, then by bit value") {
  std::vector<ElementSet> v = {set_of({1, 2}), set_of({2}), ElementSet(),
                               set_of({1})};
  std::sort(v.begin(), v.end(), canonical_less);
  CHECK(v == std::vector<ElementSet>{ElementSet(), set_of({1}), set_of({2}),
                                     set_of({1, 2})});
  CHECK(canonical_less(set_of({3}), set_of({1, 2})));
  CHECK(!canonical_less(set_of({2}), set_of({2}))); // irreflexive
}

TEST_CASE("coordinatewise dominance compares equal-size sets elementwise") {
  CHECK(prec_leq(set_of({2, 3}), set_of({3, 5})));
  CHECK(!prec_leq(set_of({2, 3}), set_of({1, 4})));
  CHECK(!prec_leq(set_of({2}), set_of({2, 3})));  // sizes differ
  CHECK(prec_leq(ElementSet(), ElementSet()));
  CHECK(prec_leq(set_of({1}), set_of({1})));
  CHECK(!prec_leq(set_of({3, 4}), set_of({2, 5})));  // 3 > 2 in slot one
}

TEST_CASE("set rendering uses braces and ascending elements") {
  CHECK(to_string(set_of({2, 3, 5})) == "{2,3,5}");
  CHECK(to_string(ElementSet()) == "{}");
}

TEST_CASE("families are canonicalized and validated on construction") {
  SetFamily f = SetFamily::canonical(2, {set_of({1, 2}), ElementSet(),
                                         set_of({2}), set_of({1})});
  CHECK(f.size() == 4);
  CHECK(f.members[0] == ElementSet());
  CHECK(f.members[3] == set_of({1, 2}));
  CHECK(f.contains(set_of({2})));
  CHECK(!f.contains(set_of({3})));

  CHECK_THROWS_AS(SetFamily::canonical(2, {set_of({1}), set_of({1})}), Error);
  CHECK_THROWS_AS(SetFamily::canonical(2, {set_of({3})}), Error);
  CHECK_THROWS_AS(SetFamily::canonical(0, {}), Error);
  CHECK_THROWS_AS(SetFamily::canonical(64, {}), Error);
}

TEST_CASE("complete levels and level unions enumerate binomially many sets") {
  SetFamily lvl = complete_level(4, 2);
  CHECK(lvl.size() == 6);
  CHECK(lvl.members == std::vector<ElementSet>{
                           set_of({1, 2}), set_of({1, 3}), set_of({2, 3}),
                           set_of({1, 4}), set_of({2, 4}), set_of({3, 4})});
  CHECK(level_union(5, {0, 2}).size() == 11);
  CHECK(complete_level(5, 0).size() == 1);
  CHECK(complete_level(5, 5).size() == 1);
  CHECK_THROWS_AS(complete_level(4, 5), Error);
  CHECK_THROWS_AS(level_union(4, {1, 1}), Error);
}

TEST_CASE("complement of a family flips every member inside the ground set") {
  SetFamily f = SetFamily::canonical(2, {set_of({1, 2})});
  CHECK(complement_family(f).members == std::vector<ElementSet>{ElementSet()});
  SetFamily g = SetFamily::canonical(3, {set_of({1}), set_of({2, 3})});
  SetFamily gc = complement_family(g);
  CHECK(gc.members == std::vector<ElementSet>{set_of({1}), set_of({2, 3})});
  CHECK(complement_family(complement_family(g)) == g);
}

TEST_CASE("longest chains and the l-Sperner predicate agree on small cases") {
  SetFamily chain =
      SetFamily::canonical(2, {ElementSet(), set_of({1}), set_of({1, 2})});
  CHECK(longest_chain(chain) == 3);
  CHECK(longest_chain(SetFamily::canonical(2, {set_of({1}), set_of({2})})) ==
        1);
  CHECK(longest_chain(SetFamily::canonical(1, {})) == 0);

  SetFamily cube2 = level_union(2, {0, 1, 2});
  CHECK(longest_chain(cube2) == 3);
  CHECK(!is_l_sperner(cube2, 2));
  CHECK(is_l_sperner(cube2, 3));
  CHECK(is_l_sperner(SetFamily::canonical(3, {set_of({1}), set_of({2})}), 1));
  CHECK_THROWS_AS(is_l_sperner(cube2, -1), Error);
}

TEST_CASE("downset detection requires closure under subsets") {
  CHECK(is_downset(SetFamily::canonical(2, {ElementSet(), set_of({1})})));
  CHECK(!is_downset(SetFamily::canonical(2, {set_of({1})})));
  CHECK(is_downset(SetFamily::canonical(3, {})));
  CHECK(is_downset(level_union(3, {0, 1})));
  CHECK(!is_downset(level_union(3, {0, 2})));
}

TEST_CASE("dyadic rationals add, compare, and print exactly") {
  DyadicRational q = DyadicRational::zero();
  CHECK(q.equals(0));
  CHECK(q.less_than(1));
  q += DyadicRational::inverse_pow2(1);
  q += DyadicRational::inverse_pow2(2);
  CHECK(q.to_string() == "3/4");
  CHECK(q.less_than(1));
  q += DyadicRational::inverse_pow2(2);
  CHECK(q.equals(1));
  CHECK(q.to_string() == "1/1");
  CHECK(!q.less_than(1));
  q += DyadicRational::inverse_pow2(0);
  CHECK(q.to_string() == "2/1");
  CHECK(!q.equals(1));
  DyadicRational half = DyadicRational::inverse_pow2(3);
  half += DyadicRational::inverse_pow2(3);
  CHECK(half == DyadicRational::inverse_pow2(2));  // reduction to lowest terms
}

TEST_CASE("gap-run block encoding round-trips every nonempty set over [8]") {
  BlockEncoding e = encode_blocks(set_of({2, 3, 6}));
  REQUIRE(e.blocks.size() == 2);
  CHECK(e.blocks[0] == std::pair<int, int>{1, 2});
  CHECK(e.blocks[1] == std::pair<int, int>{2, 1});
  CHECK(encode_blocks(set_of({1, 2, 3})).blocks ==
        std::vector<std::pair<int, int>>{{0, 3}});
  CHECK(decode_blocks(e) == set_of({2, 3, 6}));

  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    ElementSet s(mask);
    CHECK(decode_blocks(encode_blocks(s)) == s);
  }

  CHECK_THROWS_AS(encode_blocks(ElementSet()), Error);
  CHECK_THROWS_AS(decode_blocks(BlockEncoding{}), Error);
  CHECK_THROWS_AS(decode_blocks(BlockEncoding{{{0, 0}}}), Error);
  CHECK_THROWS_AS(decode_blocks(BlockEncoding{{{1, 2}, {0, 1}}}), Error);
  CHECK_THROWS_AS(decode_blocks(BlockEncoding{{{62, 3}}}), Error);
}

TEST_CASE("error objects carry their classification code") {
  try {
    SetFamily::canonical(2, {set_of({1}), set_of({1})});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kDuplicateSet);
  }
  try {
    ElementSet::single(64);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInvalidElement);
  }
}
