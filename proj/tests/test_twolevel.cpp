#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oshlab/core.hpp"
#include "oshlab/shatter.hpp"
#include "oshlab/shift.hpp"
#include "oshlab/twolevel.hpp"

using namespace oshlab;

namespace {

ElementSet set_of(std::initializer_list<int> elems) {
  ElementSet s;
  for (int e : elems) s = s.with(e);
  return s;
}

std::vector<ElementSet> realized(const std::vector<MinimalOshSet>& v) {
  std::vector<ElementSet> out;
  for (const auto& m : v) out.push_back(m.set);
  return out;
}

bool subfamily(const SetFamily& inner, const SetFamily& outer) {
  return std::includes(outer.members.begin(), outer.members.end(),
                       inner.members.begin(), inner.members.end(),
                       canonical_less);
}

SetFamily levels_up_to(int n, int k, int ell) {
  std::vector<int> sizes;
  for (int i = k - ell + 1; i <= k; ++i) sizes.push_back(i);
  return level_union(n, sizes);
}

}  // namespace

TEST_CASE("ballot predicate and its least parameter") {
  CHECK(is_t_ballot(set_of({2, 4, 6}), 0));
  CHECK(!is_t_ballot(set_of({1}), 0));
  CHECK(is_t_ballot(set_of({1}), 1));
  CHECK(is_t_ballot(ElementSet(), 0));
  CHECK(!is_t_ballot(set_of({2, 3}), 0));
  CHECK(is_t_ballot(set_of({2, 3}), 1));
  CHECK_THROWS_AS(is_t_ballot(set_of({1}), -1), Error);

  CHECK(t_min(ElementSet()) == 0);
  CHECK(t_min(set_of({2, 4})) == 0);
  CHECK(t_min(set_of({2, 3})) == 1);
  CHECK(t_min(set_of({1})) == 1);
  CHECK(t_min(set_of({1, 2})) == 2);
}

TEST_CASE("membership for a run of consecutive levels is a ballot condition") {
  SetFamily closed = osh_consecutive_levels(5, 2, 1);
  CHECK(closed.size() == 10);
  CHECK(closed.members ==
        std::vector<ElementSet>{ElementSet(), set_of({2}), set_of({3}),
                                set_of({4}), set_of({5}), set_of({2, 4}),
                                set_of({3, 4}), set_of({2, 5}), set_of({3, 5}),
                                set_of({4, 5})});
  CHECK(osh_consecutive_levels(4, 4, 1).members ==
        std::vector<ElementSet>{ElementSet()});
  CHECK(osh_consecutive_levels(6, 3, 2).size() == 35);

  CHECK(consecutive_levels_member(6, 3, 2, set_of({2, 3, 5})));
  CHECK(consecutive_levels_member(6, 3, 2, set_of({1, 3, 5})));
  CHECK(!consecutive_levels_member(6, 3, 2, set_of({1, 2})));
  CHECK(!consecutive_levels_member(6, 3, 2, set_of({2, 3, 4, 5})));
  CHECK_THROWS_AS(consecutive_levels_member(6, 7, 2, ElementSet()), Error);
  CHECK_THROWS_AS(consecutive_levels_member(6, 3, 0, ElementSet()), Error);
}

TEST_CASE("the size formula matches the enumerated closure") {
  CHECK(osh_consecutive_levels_size(6, 3, 2) == 35);
  CHECK(osh_consecutive_levels_size(12, 6, 4) == 2431);
  CHECK(osh_consecutive_levels_size(5, 2, 1) == 10);
  for (int n = 1; n <= 9; ++n) {
    for (int ell = 1; ell <= 3; ++ell) {
      for (int k = ell - 1; k <= n; ++k) {
        SetFamily direct = osh_via_shift(levels_up_to(n, k, ell));
        REQUIRE(direct.size() == osh_consecutive_levels_size(n, k, ell));
        REQUIRE(direct == osh_consecutive_levels(n, k, ell));
      }
    }
  }
}

TEST_CASE("adjacent levels have odd-prefix minimal sets") {
  TwoLevelParams p{5, 1, 1};
  auto mins = minimal_osh_sets(p);
  CHECK(realized(mins) == std::vector<ElementSet>{ElementSet(), set_of({1}),
                                                  set_of({1, 3})});
  for (const auto& m : mins) CHECK(m.kind == MinimalSetKind::kOddPrefix);
  CHECK(mins[2].p1 == 2);
  CHECK(mins[2].tmin == 1);
}

TEST_CASE("levels at distance two add the even-odd pair family") {
  TwoLevelParams p{6, 1, 2};
  auto mins = minimal_osh_sets(p);
  CHECK(realized(mins) ==
        std::vector<ElementSet>{ElementSet(), set_of({2}), set_of({2, 3}),
                                set_of({2, 3, 4})});
  CHECK(mins[0].kind == MinimalSetKind::kEmpty);
  CHECK(mins[1].kind == MinimalSetKind::kSingleEven);
  CHECK(mins[2].kind == MinimalSetKind::kEvenOddPair);
  CHECK(mins[3].kind == MinimalSetKind::kPairThenEvens);
  CHECK(mins[3].p1 == 2);
  CHECK(mins[0].tmin == 0);
  CHECK(mins[2].tmin == 1);
  CHECK(mins[3].tmin == 2);
}

TEST_CASE("levels at distance three and beyond follow the run catalogue") {
  TwoLevelParams p{9, 1, 3};
  auto mins = minimal_osh_sets(p);
  CHECK(realized(mins) ==
        std::vector<ElementSet>{ElementSet(), set_of({2}), set_of({2, 4}),
                                set_of({3, 4, 5}), set_of({2, 4, 6}),
                                set_of({3, 4, 5, 6}), set_of({2, 5, 6, 7}),
                                set_of({2, 4, 6, 8})});
  CHECK(mins[3].kind == MinimalSetKind::kFullRun);
  CHECK(mins[3].tmin == 1);
  CHECK(mins[5].kind == MinimalSetKind::kFullRun);
  CHECK(mins[5].tmin == 2);
  CHECK(mins[6].kind == MinimalSetKind::kFullRun);
  CHECK(mins[7].kind == MinimalSetKind::kEvenPrefix);

  CHECK(realized(minimal_osh_sets({4, 0, 3})) ==
        std::vector<ElementSet>{ElementSet(), set_of({2}), set_of({3, 4})});
  CHECK(realized(minimal_osh_sets({3, 0, 3})) ==
        std::vector<ElementSet>{ElementSet(), set_of({3})});
  // Complementary parameters share one description.
  CHECK(realized(minimal_osh_sets({4, 1, 3})) ==
        realized(minimal_osh_sets({4, 0, 3})));

  CHECK(tmin_bound({9, 1, 3}) == 2);
  CHECK(tmin_bound({6, 1, 2}) == 2);
  CHECK(tmin_bound({4, 0, 3}) <= 0);
}

TEST_CASE("membership oracle agrees with dominance over the minimal list") {
  TwoLevelMembership oracle({6, 1, 2});
  CHECK(oracle.contains(ElementSet()));
  CHECK(oracle.contains(set_of({3, 5})));     // dominates {2,3}
  CHECK(oracle.contains(set_of({6})));        // dominates {2}
  CHECK(!oracle.contains(set_of({1, 4})));    // nothing of size 2 below it
  CHECK(!oracle.contains(set_of({1})));
  CHECK(!oracle.contains(set_of({2, 3, 4, 5})));
  CHECK_THROWS_AS(oracle.contains(set_of({7})), Error);
}

TEST_CASE("membership oracle equals the shift closure on small parameters") {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 2; d <= n; ++d) {
      for (int a = 0; a + d <= n; ++a) {
        TwoLevelParams p{n, a, d};
        TwoLevelMembership oracle(p);
        SetFamily brute = osh_via_shift(two_level_family(p));
        std::uint64_t count = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
          ElementSet s(v);
          bool member = brute.contains(s);
          REQUIRE(oracle.contains(s) == member);
          count += member;
        }
        REQUIRE(count == brute.size());
      }
    }
  }
}

TEST_CASE("transversal families order-shatter their even prefix") {
  CHECK(transversal_family(0).members == std::vector<ElementSet>{ElementSet()});
  CHECK(transversal_family(1) ==
        SetFamily::canonical(2, {set_of({1}), set_of({2})}));
  CHECK(transversal_family(2) ==
        SetFamily::canonical(4, {set_of({1, 3}), set_of({1, 4}),
                                 set_of({2, 3}), set_of({2, 4})}));
  for (int m = 0; m <= 6; ++m) {
    SetFamily f = transversal_family(m);
    CHECK(f.size() == (std::size_t{1} << m));
    CHECK(order_shatters(f, ElementSet::range(1, 2 * m).intersect(
                                ElementSet(0xAAAAAAAAAAAAAAAAull))));
    CHECK(equal_prefix_check(f, m));
  }
  CHECK_THROWS_AS(transversal_family(-1), Error);
}

TEST_CASE("explicit witnesses certify the nontrivial minimal sets") {
  TwoLevelParams p{9, 1, 3};
  SetFamily w = witness_full_run(p, 0, 0);
  CHECK(w == SetFamily::canonical(
                 9, {set_of({1}), set_of({3}), set_of({4}), set_of({5}),
                     set_of({1, 2, 3, 4}), set_of({1, 2, 3, 5}),
                     set_of({1, 2, 4, 5}), set_of({1, 3, 4, 5})}));
  CHECK(subfamily(w, two_level_family(p)));
  CHECK(order_shatters(w, set_of({3, 4, 5})));
  CHECK_THROWS_AS(witness_full_run(p, 0, 2), Error);

  SetFamily ws = witness_short_run( TwoLevelParams{6, 2, 3}, 1, 2);
  CHECK(ws == SetFamily::canonical(
                  6, {set_of({1, 3}), set_of({2, 3}), set_of({1, 5}),
                      set_of({2, 5}), set_of({1, 6}), set_of({2, 6}),
                      set_of({1, 3, 4, 5, 6}), set_of({2, 3, 4, 5, 6})}));
  CHECK(subfamily(ws, two_level_family({6, 2, 3})));
  CHECK(order_shatters(ws, set_of({2, 5, 6})));
  CHECK_THROWS_AS(witness_short_run(TwoLevelParams{6, 2, 3}, 1, 3), Error);

  TwoLevelParams q{9, 3, 3};
  SetFamily wr = witness_run_then_evens(q, 0, 0);
  CHECK(wr.size() == 64);
  CHECK(subfamily(wr, two_level_family(q)));
  CHECK(order_shatters(wr, set_of({3, 4, 5, 6, 7, 9})));
  CHECK_THROWS_AS(witness_run_then_evens(q, 3, 3), Error);
}

TEST_CASE("equal prefix counting") {
  CHECK(equal_prefix_check(transversal_family(2), 2));
  CHECK(!equal_prefix_check(SetFamily::canonical(2, {set_of({1, 2})}), 1));
  CHECK(equal_prefix_check(SetFamily::canonical(2, {set_of({1, 2})}), 0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(two_level_family({0, 0, 1}), Error);
  CHECK_THROWS_AS(two_level_family({4, -1, 2}), Error);
  CHECK_THROWS_AS(two_level_family({4, 2, 0}), Error);
  CHECK_THROWS_AS(two_level_family({4, 3, 2}), Error);
  CHECK(two_level_family({4, 1, 2}).size() == 8);  // C(4,1) + C(4,3)
}
