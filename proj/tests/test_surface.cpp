#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "curvecx/errors.hpp"
#include "curvecx/surface.hpp"

using namespace curvecx;

static std::set<std::string> classes(const PuncturedSurface& S) {
  std::set<std::string> out;
  for (const Word& w : S.peripheral_classes()) out.insert(S.print(w));
  return out;
}

TEST_CASE("once punctured torus") {
  auto S = PuncturedSurface::catalog("S_1_1");
  CHECK(S.genus == 1);
  CHECK(S.punctures == 1);
  CHECK(S.xi == 1);
  CHECK(S.rank == 2);
  CHECK(classes(S) == std::set<std::string>{"abAB"});
}

TEST_CASE("thrice punctured sphere from the alternating order") {
  auto S = PuncturedSurface::catalog("S_0_3");
  CHECK(S.genus == 0);
  CHECK(S.punctures == 3);
  CHECK(S.xi == 0);
  CHECK(classes(S) == std::set<std::string>{"a", "b", "ab"});
}

TEST_CASE("genus two from the double commutator order") {
  auto S = PuncturedSurface::catalog("S_2_1");
  CHECK(S.genus == 2);
  CHECK(S.punctures == 1);
  CHECK(S.xi == 4);
  REQUIRE(S.peripherals().size() == 1);
  CHECK(S.print(S.peripherals()[0]) == "abADcdCB");
}

TEST_CASE("remaining catalog surfaces") {
  auto S04 = PuncturedSurface::catalog("S_0_4");
  CHECK(S04.genus == 0);
  CHECK(S04.punctures == 4);
  CHECK(S04.xi == 1);
  CHECK(classes(S04) == std::set<std::string>{"a", "b", "c", "abc"});

  auto S05 = PuncturedSurface::catalog("S_0_5");
  CHECK(S05.genus == 0);
  CHECK(S05.punctures == 5);
  CHECK(S05.xi == 2);
  CHECK(classes(S05) == std::set<std::string>{"a", "b", "c", "d", "abcd"});

  auto S12 = PuncturedSurface::catalog("S_1_2");
  CHECK(S12.genus == 1);
  CHECK(S12.punctures == 2);
  CHECK(S12.xi == 2);
  CHECK(classes(S12) == std::set<std::string>{"abACB", "c"});

  CHECK_THROWS_AS(PuncturedSurface::catalog("S_9_9"), input_error);
}

TEST_CASE("euler characteristic consistency across the catalog") {
  for (const char* name : {"S_1_1", "S_0_3", "S_0_4", "S_0_5", "S_1_2", "S_2_1"}) {
    auto S = PuncturedSurface::catalog(name);
    // V - E + F = 2 - 2g with V = 1, E = rank, F = m
    CHECK(1 - S.rank + S.punctures == 2 - 2 * S.genus);
    CHECK(S.rank == 2 * S.genus + S.punctures - 1);
    for (const Word& w : S.peripheral_classes()) CHECK(is_cyclically_reduced(w));
  }
}

TEST_CASE("two-vertex theta graph contracts to the punctured torus") {
  RibbonData rd;
  rd.darts = {"p", "q", "r", "P", "Q", "R"};
  rd.vertex_cycles = {{"p", "q", "r"}, {"P", "Q", "R"}};
  rd.pairing = {{"p", "P"}, {"q", "Q"}, {"r", "R"}};
  auto S = PuncturedSurface::build(rd);
  CHECK(S.genus == 1);
  CHECK(S.punctures == 1);
  CHECK(S.rank == 2);
  CHECK(classes(S) == std::set<std::string>{"abAB"});
  CHECK(S.generator_darts()[0].first == "q");
  CHECK(S.generator_darts()[1].first == "r");
}

TEST_CASE("build is deterministic") {
  auto a = PuncturedSurface::catalog("S_1_2").to_json();
  auto b = PuncturedSurface::catalog("S_1_2").to_json();
  CHECK(a == b);
}

TEST_CASE("json round trip") {
  auto S = PuncturedSurface::catalog("S_0_4");
  auto T = PuncturedSurface::from_json(S.to_json());
  CHECK(T.to_json() == S.to_json());
}

TEST_CASE("invalid input is rejected") {
  RibbonData rd;
  rd.darts = {"a", "A", "b", "B"};
  rd.vertex_cycles = {{"a", "A"}, {"b", "B"}};
  rd.pairing = {{"a", "A"}, {"b", "B"}};
  CHECK_THROWS_AS(PuncturedSurface::build(rd), input_error);  // disconnected

  rd.vertex_cycles = {{"a", "A", "b", "B"}};
  rd.pairing = {{"a", "A"}, {"b", "A"}};
  CHECK_THROWS_AS(PuncturedSurface::build(rd), input_error);  // not an involution

  rd.pairing = {{"a", "a"}, {"b", "B"}};
  CHECK_THROWS_AS(PuncturedSurface::build(rd), input_error);  // fixed point

  rd.pairing = {{"a", "A"}, {"b", "B"}};
  rd.vertex_cycles = {{"a", "A", "b"}};
  CHECK_THROWS_AS(PuncturedSurface::build(rd), input_error);  // B missing
}
