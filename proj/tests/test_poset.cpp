#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ordchomp/errors.hpp"
#include "ordchomp/poset.hpp"

using namespace ordchomp;

namespace {

FinitePoset chain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](int i, int j) { return i <= j; });
}

FinitePoset point() { return chain(1); }

// Random poset with global minimum 0: random DAG on upper-triangular pairs,
// transitively closed.
FinitePoset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    r[i][i] = 1;
    r[0][i] = 1;
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) r[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FinitePoset(labels, [&](int i, int j) { return r[i][j] != 0; });
}

}  // namespace

TEST_CASE("construction validates order axioms and global minimum") {
  CHECK_NOTHROW(chain(4));
  std::vector<std::string> ab{"a", "b"};
  // Not reflexive.
  CHECK_THROWS_AS(FinitePoset(ab, [](int, int) { return false; }), Error);
  // Not antisymmetric.
  CHECK_THROWS_AS(FinitePoset(ab, [](int, int) { return true; }), Error);
  // No global minimum: two incomparable points.
  CHECK_THROWS_AS(FinitePoset(ab, [](int i, int j) { return i == j; }), Error);
  // Not transitive: 0<1, 1<2, but not 0<2.
  std::vector<std::string> abc{"a", "b", "c"};
  CHECK_THROWS_AS(FinitePoset(abc,
                              [](int i, int j) {
                                return i == j || (i == 0 && j == 1) ||
                                       (i == 1 && j == 2);
                              }),
                  Error);
}

TEST_CASE("accessors") {
  FinitePoset c = chain(3);
  CHECK(c.size() == 3);
  CHECK(c.min_index() == 0);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 0));
  CHECK(c.label(1) == "1");
  CHECK(c.index_of("2") == 2);
  CHECK(c.index_of("zzz") == -1);
}

TEST_CASE("lex product of two 2-chains is a 4-chain") {
  FinitePoset p = lex_product(chain(2), chain(2));
  REQUIRE(p.size() == 4);
  // Order (0,0)<(0,1)<(1,0)<(1,1): total.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(p.leq(i, j) == (i <= j));
}

TEST_CASE("lex product with a point is isomorphic to the other factor") {
  std::mt19937_64 rng(3);
  FinitePoset t = random_poset(rng, 5);
  FinitePoset p = lex_product(point(), t);
  REQUIRE(p.size() == t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) CHECK(p.leq(i, j) == t.leq(i, j));
}

TEST_CASE("lex product rule on incomparable first coordinates") {
  // P = min plus two incomparable atoms a, b.
  std::vector<std::string> labels{"0", "a", "b"};
  FinitePoset v(labels, [](int i, int j) { return i == j || i == 0; });
  FinitePoset p = lex_product(v, chain(2));
  // (a,1) vs (b,0): a and b incomparable, so incomparable.
  int a1 = p.index_of("(a,1)"), b0 = p.index_of("(b,0)");
  REQUIRE(a1 >= 0);
  REQUIRE(b0 >= 0);
  CHECK_FALSE(p.leq(a1, b0));
  CHECK_FALSE(p.leq(b0, a1));
  // (0,1) < (a,0): strictly smaller first coordinate suffices.
  CHECK(p.leq(p.index_of("(0,1)"), p.index_of("(a,0)")));
}

TEST_CASE("power") {
  std::mt19937_64 rng(5);
  FinitePoset t = random_poset(rng, 4);
  CHECK(power(t, 0).size() == 1);
  FinitePoset p1 = power(t, 1);
  REQUIRE(p1.size() == t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) CHECK(p1.leq(i, j) == t.leq(i, j));
  CHECK(power(t, 2).size() == 16);
  CHECK(power(t, 3).size() == 64);
  CHECK_THROWS_AS(power(t, 9, 1000), Error);
}

TEST_CASE("twin poset") {
  std::mt19937_64 rng(7);
  FinitePoset t = random_poset(rng, 4);
  FinitePoset tw = twin_poset(t);
  REQUIRE(tw.size() == 2 * t.size() + 1);
  CHECK(tw.min_index() == 0);
  // Copies are order-isomorphic to t and mutually incomparable.
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j) {
        CHECK(tw.leq(1 + c * t.size() + i, 1 + c * t.size() + j) == t.leq(i, j));
        CHECK_FALSE(tw.leq(1 + i, 1 + t.size() + j));
        CHECK_FALSE(tw.leq(1 + t.size() + j, 1 + i));
      }
  FinitePoset single = twin_poset(point());
  REQUIRE(single.size() == 3);
  CHECK_FALSE(single.leq(1, 2));
  CHECK_FALSE(single.leq(2, 1));
  CHECK(single.leq(0, 1));
}

TEST_CASE("hasse_dot lists covers only") {
  std::string dot = hasse_dot(chain(3), "c3");
  CHECK(dot.find("digraph c3") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  // 0 -> 2 is not a cover.
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
  CHECK(dot.find("[label=\"1\"]") != std::string::npos);
}
