#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ordchomp/cnf.hpp"
#include "ordchomp/errors.hpp"

using namespace ordchomp;

namespace {

// Independent model of the ordinals below w^3: (a,b,c) = w^2*a + w*b + c.
struct Tri3 {
  long a, b, c;
};

CnfOrdinal lift(const Tri3& t) {
  CnfOrdinal v = CnfOrdinal::natural(0);
  if (t.a) v = natural_sum(v, natural_product(omega_power(CnfOrdinal::natural(2)),
                                              CnfOrdinal::natural(static_cast<uint64_t>(t.a))));
  if (t.b) v = natural_sum(v, natural_product(omega_power(CnfOrdinal::natural(1)),
                                              CnfOrdinal::natural(static_cast<uint64_t>(t.b))));
  if (t.c) v = natural_sum(v, CnfOrdinal::natural(static_cast<uint64_t>(t.c)));
  return v;
}

int cmp3(const Tri3& x, const Tri3& y) {
  if (x.a != y.a) return x.a < y.a ? -1 : 1;
  if (x.b != y.b) return x.b < y.b ? -1 : 1;
  if (x.c != y.c) return x.c < y.c ? -1 : 1;
  return 0;
}

Tri3 add3(const Tri3& x, const Tri3& y) {
  if (y.a > 0) return {x.a + y.a, y.b, y.c};
  if (y.b > 0) return {x.a, x.b + y.b, y.c};
  return {x.a, x.b, x.c + y.c};
}

Tri3 nsum3(const Tri3& x, const Tri3& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }

// Natural product of two ordinals below w^2 stays below w^3.
Tri3 nprod2(const Tri3& x, const Tri3& y) {
  return {x.b * y.b, x.b * y.c + x.c * y.b, x.c * y.c};
}

}  // namespace

TEST_CASE("parse and print denotations") {
  CHECK(print(parse("0")) == "0");
  CHECK(parse("0").is_zero());
  CHECK(print(parse("w^2*3+w*1+4")) == "w^2*3+w+4");
  CHECK(print(parse("w^(w*2+1)*3")) == "w^(w*2+1)*3");
  CHECK(print(parse("  w ^ 2 + 7 ")) == "w^2+7");
  CHECK(parse("17") == CnfOrdinal::natural(17));
  CHECK(parse("w^1") == omega_power(CnfOrdinal::natural(1)));
  // Non-normalized sums fold left-to-right with ordinary addition.
  CHECK(print(parse("1+w")) == "w");
  CHECK(print(parse("w+w")) == "w*2");
  CHECK(print(parse("w+w^2")) == "w^2");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("w^"), ParseError);
  CHECK_THROWS_AS(parse("w*0"), ParseError);
  CHECK_THROWS_AS(parse("w++1"), ParseError);
  CHECK_THROWS_AS(parse("w^(w"), ParseError);
  CHECK_THROWS_AS(parse("3x"), ParseError);
  CHECK_THROWS_AS(parse("01"), ParseError);
}

TEST_CASE("parse/print round trips") {
  for (const char* s : {"0", "5", "w", "w*2", "w+1", "w^2*3+w+4", "w^(w+1)",
                        "w^(w^(w+1)*2+3)*9+w^5*3+w*2+1"}) {
    CnfOrdinal x = parse(s);
    CHECK(print(x) == s);
    CHECK(parse(print(x)) == x);
  }
}

TEST_CASE("invalid constructions rejected") {
  using Term = CnfOrdinal::Term;
  std::vector<Term> bad1{{CnfOrdinal::natural(1), 1}, {CnfOrdinal::natural(2), 1}};
  CHECK_THROWS_AS(CnfOrdinal::from_terms(bad1), Error);  // increasing exponents
  std::vector<Term> bad2{{CnfOrdinal::natural(1), 0}};
  CHECK_THROWS_AS(CnfOrdinal::from_terms(bad2), Error);  // zero coefficient
}

TEST_CASE("compare matches the lexicographic model below w^3") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    Tri3 x{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    Tri3 y{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    int expect = cmp3(x, y);
    Ordering got = compare(lift(x), lift(y));
    CHECK((expect < 0 ? Ordering::LT : expect > 0 ? Ordering::GT : Ordering::EQ) == got);
  }
  // A proper prefix is strictly smaller.
  CHECK(parse("w^2") < parse("w^2+1"));
  CHECK(parse("w^2+w") < parse("w^2+w*2"));
  CHECK(parse("w") < parse("w^2"));
}

TEST_CASE("ordinary addition matches the model below w^3") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Tri3 x{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    Tri3 y{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    CHECK(ordinary_add(lift(x), lift(y)) == lift(add3(x, y)));
  }
  CHECK(print(ordinary_add(parse("w+1"), parse("w+2"))) == "w*2+2");
  CHECK(print(ordinary_add(parse("w^2+3"), parse("w*5"))) == "w^2+w*5");
  CHECK(print(ordinary_add(parse("5"), parse("0"))) == "5");
}

TEST_CASE("natural sum matches the termwise model") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Tri3 x{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    Tri3 y{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    CHECK(natural_sum(lift(x), lift(y)) == lift(nsum3(x, y)));
  }
  CHECK(print(natural_sum(parse("w+1"), parse("w*2+3"))) == "w*3+4");
  CHECK(print(natural_sum(parse("w^2+3"), parse("w*5"))) == "w^2+w*5+3");
}

TEST_CASE("natural product matches the expansion model below w^2") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Tri3 x{0, long(rng() % 4), long(rng() % 4)};
    Tri3 y{0, long(rng() % 4), long(rng() % 4)};
    CHECK(natural_product(lift(x), lift(y)) == lift(nprod2(x, y)));
  }
  CHECK(print(natural_product(parse("w+1"), parse("w+1"))) == "w^2+w*2+1");
  CHECK(print(natural_product(parse("w+2"), parse("w*3+1"))) == "w^2*3+w*7+2");
  CHECK(natural_product(parse("w^(w+1)*2"), parse("w^(w*2)*3")) ==
        parse("w^(w*3+1)*6"));
  CHECK(natural_product(parse("w^2+w"), parse("0")).is_zero());
}

TEST_CASE("subtraction is the inverse of ordinary addition") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Tri3 x{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    Tri3 y{long(rng() % 4), long(rng() % 4), long(rng() % 4)};
    CnfOrdinal a = lift(x), b = lift(y);
    if (compare(a, b) == Ordering::GT) std::swap(a, b);
    CHECK(ordinary_add(a, subtract(b, a)) == b);
  }
  CHECK(print(subtract(parse("w*2+2"), parse("w+1"))) == "w+2");
  CHECK(subtract(parse("w"), parse("w")).is_zero());
  CHECK(print(subtract(parse("w^2"), parse("w*5+3"))) == "w^2");
  CHECK_THROWS_AS(subtract(parse("w"), parse("w+1")), UnderflowError);
}

TEST_CASE("leading exponent and omega powers") {
  CHECK(leading_exp(parse("w^2*3+w+4")) == parse("2"));
  CHECK(leading_exp(parse("7")).is_zero());
  CHECK(leading_exp(parse("0")).is_zero());
  CHECK(print(omega_power(parse("w+1"))) == "w^(w+1)");
  CHECK(print(omega_power(parse("0"))) == "1");
}

TEST_CASE("naturals embed correctly") {
  CHECK(CnfOrdinal::natural(0).is_zero());
  CHECK(CnfOrdinal::natural(12).is_natural());
  CHECK(CnfOrdinal::natural(12).as_natural() == 12);
  CHECK_FALSE(parse("w").is_natural());
}
