#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oshlab/core.hpp"
#include "oshlab/shatter.hpp"

using namespace oshlab;

namespace {

ElementSet set_of(std::initializer_list<int> elems) {
  ElementSet s;
  for (int e : elems) s = s.with(e);
  return s;
}

SetFamily fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> members;
  for (auto s : sets) members.push_back(set_of(s));
  return SetFamily::canonical(n, std::move(members));
}

// Every family over [n]: bit v of `mask` decides whether subset v is in.
SetFamily family_from_mask(int n, std::uint64_t mask) {
  std::vector<ElementSet> members;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (mask >> v & 1) members.push_back(ElementSet(v));
  }
  return SetFamily::canonical(n, std::move(members));
}

bool subfamily(const SetFamily& inner, const SetFamily& outer) {
  return std::includes(outer.members.begin(), outer.members.end(),
                       inner.members.begin(), inner.members.end(),
                       canonical_less);
}

}  // namespace

TEST_CASE("shattering asks for every trace on the target") {
  SetFamily f = fam(2, {{1}, {2}});
  CHECK(shatters(f, ElementSet()));
  CHECK(shatters(f, set_of({1})));
  CHECK(shatters(f, set_of({2})));
  CHECK(!shatters(f, set_of({1, 2})));
  CHECK(sh_all(f) == fam(2, {{}, {1}, {2}}));
  CHECK(sh_all(fam(3, {})).size() == 0);
  CHECK(!shatters(fam(2, {}), ElementSet()));
}

TEST_CASE("strong tracing pins the part outside the target") {
  CHECK(strongly_traces(fam(2, {{}, {1}}), set_of({1})));
  CHECK(strongly_traces(fam(2, {{2}, {1, 2}}), set_of({1})));
  CHECK(!strongly_traces(fam(2, {{1}, {2}}), set_of({1})));
  CHECK(st_all(fam(2, {{1}, {2}})) == fam(2, {{}}));
  CHECK(st_all(level_union(3, {0, 1, 2, 3})) == level_union(3, {0, 1, 2, 3}));
}

TEST_CASE("order-shattering splits a trace class at the largest element") {
  SetFamily f = fam(2, {{1}, {2}});
  CHECK(order_shatters(f, ElementSet()));
  CHECK(order_shatters(f, set_of({2})));
  CHECK(!order_shatters(f, set_of({1})));
  CHECK(!order_shatters(f, set_of({1, 2})));
  CHECK(osh_direct(f) == fam(2, {{}, {2}}));
  CHECK(osh_direct(fam(2, {{1, 2}})) == fam(2, {{}}));
  CHECK(osh_direct(level_union(2, {0, 1, 2})) == level_union(2, {0, 1, 2}));
}

TEST_CASE("closure sizes and inclusions hold on every family over [3]") {
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily f = family_from_mask(3, mask);
    SetFamily st = st_all(f);
    SetFamily osh = osh_direct(f);
    SetFamily sh = sh_all(f);
    REQUIRE(osh.size() == f.size());
    REQUIRE(st.size() <= f.size());
    REQUIRE(f.size() <= sh.size());
    REQUIRE(subfamily(st, osh));
    REQUIRE(subfamily(osh, sh));
    REQUIRE(is_downset(osh));
    REQUIRE(osh_direct(osh) == osh);
  }
}

TEST_CASE("witness extraction returns the standard order") {
  SetFamily cube = level_union(2, {0, 1, 2});
  auto w = extract_witness(cube, set_of({1, 2}));
  REQUIRE(w.has_value());
  CHECK(w->n == 2);
  CHECK(w->target == set_of({1, 2}));
  CHECK(w->ordered == std::vector<ElementSet>{ElementSet(), set_of({1}),
                                              set_of({2}), set_of({1, 2})});
  CHECK(verify_standard_order(*w));

  SetFamily f = fam(2, {{1}, {2}});
  auto w2 = extract_witness(f, set_of({2}));
  REQUIRE(w2.has_value());
  CHECK(w2->ordered == std::vector<ElementSet>{set_of({1}), set_of({2})});
  CHECK(verify_standard_order(*w2));
  CHECK(!extract_witness(f, set_of({1})).has_value());

  auto w0 = extract_witness(f, ElementSet());
  REQUIRE(w0.has_value());
  CHECK(w0->ordered == std::vector<ElementSet>{set_of({1})});
}

TEST_CASE("the standard-order verifier rejects broken witnesses") {
  ShatterWitness bad;
  bad.n = 2;
  bad.target = set_of({2});
  bad.ordered = {set_of({2}), set_of({1})};  // halves swapped
  CHECK(!verify_standard_order(bad));

  ShatterWitness wrong_count;
  wrong_count.n = 2;
  wrong_count.target = set_of({2});
  wrong_count.ordered = {set_of({1})};
  CHECK(!verify_standard_order(wrong_count));

  // Positions 3 and 4 disagree above element 1 even though they form an
  // aligned block for the smallest target element.
  ShatterWitness bad_block;
  bad_block.n = 3;
  bad_block.target = set_of({1, 2});
  bad_block.ordered = {ElementSet(), set_of({1}), set_of({2}),
                       set_of({1, 2, 3})};
  CHECK(!verify_standard_order(bad_block));

  ShatterWitness ok;
  ok.n = 3;
  ok.target = set_of({1, 2});
  ok.ordered = {set_of({3}), set_of({1, 3}), set_of({2, 3}),
                set_of({1, 2, 3})};
  CHECK(verify_standard_order(ok));
}

TEST_CASE("every closure member of every family over [3] yields a witness") {
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    SetFamily f = family_from_mask(3, mask);
    ShatterEngine engine(f);
    SetFamily osh = osh_direct(f);
    for (ElementSet s : osh.members) {
      REQUIRE(engine.order_shatters(s));
      auto ordered = engine.extract(s);
      REQUIRE(ordered.has_value());
      ShatterWitness w{f.n, s, *ordered};
      REQUIRE(verify_standard_order(w));
      for (ElementSet g : *ordered) REQUIRE(f.contains(g));
    }
    for (std::uint64_t v = 0; v < 8; ++v) {
      ElementSet s(v);
      REQUIRE(engine.order_shatters(s) == osh.contains(s));
      if (!osh.contains(s)) REQUIRE(!engine.extract(s).has_value());
    }
  }
}

TEST_CASE("enumeration caps guard the exponential walks") {
  SetFamily wide = SetFamily::canonical(25, {});
  CHECK_THROWS_AS(sh_all(wide), Error);
  CHECK_THROWS_AS(st_all(wide), Error);
  CHECK_THROWS_AS(osh_direct(wide), Error);
  SetFamily ten = SetFamily::canonical(10, {ElementSet::single(4)});
  CHECK_THROWS_AS(osh_direct(ten, 9), Error);
  CHECK(osh_direct(ten, 10).size() == 1);
}
