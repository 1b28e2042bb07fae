#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "oshlab/core.hpp"
#include "oshlab/family_io.hpp"

using namespace oshlab;

namespace {

ElementSet set_of(std::initializer_list<int> elems) {
  ElementSet s;
  for (int e : elems) s = s.with(e);
  return s;
}

}  // namespace

TEST_CASE("JSON documents parse into canonical families") {
  SetFamily f = family_from_json(R"({"n":2,"sets":[[2],[1]]})");
  CHECK(f.n == 2);
  CHECK(f.members == std::vector<ElementSet>{set_of({1}), set_of({2})});

  SetFamily g = family_from_json(R"({"n": 3, "sets": [[3,1], []]})");
  CHECK(g.members == std::vector<ElementSet>{ElementSet(), set_of({1, 3})});

  CHECK_THROWS_AS(family_from_json("not json"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"sets":[]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2,"sets":[[0]]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2,"sets":[[3]]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2,"sets":[[1],[1]]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2,"sets":[[1,1]]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":2,"sets":"nope"})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"n":0,"sets":[]})"), Error);
}

TEST_CASE("JSON rendering is canonical and round-trips") {
  SetFamily f = SetFamily::canonical(2, {set_of({2}), ElementSet()});
  CHECK(family_to_json(f) == "{\"n\":2,\"sets\":[[],[2]]}\n");
  CHECK(family_from_json(family_to_json(f)) == f);

  SetFamily g = family_from_json(R"({"n":4,"sets":[[2,4],[1],[1,2,3]]})");
  CHECK(family_to_json(g) == "{\"n\":4,\"sets\":[[1],[2,4],[1,2,3]]}\n");
}

TEST_CASE("TSV rendering lists one member per line") {
  SetFamily f = SetFamily::canonical(3, {set_of({1, 3}), set_of({2}),
                                         ElementSet()});
  CHECK(family_to_tsv(f) == "\n2\n1\t3\n");
}

TEST_CASE("file round-trip through a temporary path") {
  std::string path = "tmp_family_roundtrip.json";
  SetFamily f = SetFamily::canonical(3, {set_of({1, 3}), set_of({2})});
  save_text(family_to_json(f), path);
  SetFamily back = load_family(path);
  CHECK(back == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_family("does_not_exist_9x7.json"), Error);
}

TEST_CASE("the bundled example family loads") {
  SetFamily f = load_family(std::string(TEST_DATA_DIR) + "/family_12.json");
  CHECK(f.n == 12);
  CHECK(f.size() == 9);
  CHECK(f.contains(set_of({4, 7, 11})));
}

TEST_CASE("random families are deterministic in the seed") {
  SetFamily a = random_family(10, 0.5, 42);
  SetFamily b = random_family(10, 0.5, 42);
  CHECK(a == b);
  CHECK(a.n == 10);
  SetFamily c = random_family(10, 0.5, 43);
  CHECK(a != c);

  CHECK(random_family(6, 0.0, 7).size() == 0);
  CHECK(random_family(6, 1.0, 7).size() == 64);
  CHECK(random_family(6, -2.0, 7).size() == 0);
  CHECK(random_family(6, 2.0, 7).size() == 64);
  CHECK_THROWS_AS(random_family(25, 0.5, 7), Error);
}
