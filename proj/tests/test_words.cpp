#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecx/errors.hpp"
#include "curvecx/word.hpp"

using namespace curvecx;

static Word W(const std::string& s) { return parse_word(s, 26); }

TEST_CASE("parse and print round trip") {
  CHECK(print_word(W("abAB")) == "abAB");
  CHECK(print_word(W("a b A")) == "abA");
  CHECK(parse_word("[1][-2]", 2) == W("aB"));
  CHECK(print_word(W("")) == "");
  CHECK_THROWS_AS(parse_word("xyz", 2), input_error);
  CHECK_THROWS_AS(parse_word("a[", 2), input_error);
  CHECK_THROWS_AS(parse_word("a!b", 2), input_error);
}

TEST_CASE("free reduction") {
  CHECK(print_word(free_reduce(W("abB"))) == "a");
  CHECK(free_reduce(W("aA")).empty());
  CHECK(print_word(free_reduce(W("abBA"))) == "");
  CHECK(print_word(free_reduce(W("aabBAb"))) == "ab");
  CHECK(is_reduced(W("abab")));
  CHECK_FALSE(is_reduced(W("abBa")));
}

TEST_CASE("cyclic reduction") {
  CHECK(print_word(cyclic_reduce(W("Aba"))) == "b");
  CHECK(print_word(cyclic_reduce(W("BAbab"))) == "b");
  CHECK(is_cyclically_reduced(W("ab")));
  CHECK_FALSE(is_cyclically_reduced(W("abA")));
}

TEST_CASE("canonical cyclic form closes under rotation and inversion") {
  Word c = canonical_cyclic(W("ab"));
  CHECK(c == canonical_cyclic(W("ba")));
  CHECK(c == canonical_cyclic(W("BA")));
  CHECK(c == canonical_cyclic(W("AB")));
  CHECK(print_word(c) == "ab");
  // letter order a < A < b < B
  CHECK(print_word(canonical_cyclic(W("Ab"))) == "aB");
  CHECK(print_word(canonical_cyclic(W("bbaA"))) == "bb");
  CHECK(canonical_cyclic(W("abAB")) == canonical_cyclic(W("baBA")));
}

TEST_CASE("primitive root") {
  auto [r1, p1] = primitive_root(W("abab"));
  CHECK(print_word(r1) == "ab");
  CHECK(p1 == 2);
  auto [r2, p2] = primitive_root(W("aab"));
  CHECK(print_word(r2) == "aab");
  CHECK(p2 == 1);
  auto [r3, p3] = primitive_root(W("aaa"));
  CHECK(print_word(r3) == "a");
  CHECK(p3 == 3);
}

TEST_CASE("inverse and rotate") {
  CHECK(print_word(inverse(W("abC"))) == "cBA");
  CHECK(print_word(rotate(W("abc"), 1)) == "bca");
  CHECK(print_word(rotate(W("abc"), 5)) == "cab");
}
