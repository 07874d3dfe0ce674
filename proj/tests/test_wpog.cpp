#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ordchomp/wpog.hpp"

using namespace ordchomp;

namespace {

GeneratorSet make(std::initializer_list<const char*> gs) {
  std::vector<CnfOrdinal> v;
  for (const char* s : gs) v.push_back(parse(s));
  return GeneratorSet(std::move(v));
}

// Certified pairwise incomparability in the view at the given level.
bool is_antichain(const GeneratorSet& g, const CnfOrdinal& level,
                  const std::vector<CnfOrdinal>& xs, long bound) {
  MonoidView v = enumerate_monoid(g, level, bound);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      if (leq(v, xs[i], xs[j]) != Tri::False) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("sufficient shape accepts coprime naturals") {
  auto c = sufficient_shape(make({"3", "5"}));
  REQUIRE(c.has_value());
  CHECK(c->extra_count == 0);
  CHECK(sufficient_shape(make({"2", "3", "w^2*4+w*7"})).has_value());
  CHECK(sufficient_shape(make({"1"})).has_value());
}

TEST_CASE("sufficient shape rejects non-matching sets") {
  CHECK_FALSE(sufficient_shape(make({"4", "6"})).has_value());     // gcd 2
  CHECK_FALSE(sufficient_shape(make({"w+1"})).has_value());        // no naturals
  CHECK_FALSE(sufficient_shape(make({"2", "3", "w^2+w+1"})).has_value());
  CHECK_FALSE(sufficient_shape(make({"2", "3", "w^2*4+w*7+1"})).has_value());
}

TEST_CASE("necessary condition fails for {w+1} with the A1 witness") {
  NecessaryResult r = necessary_condition(make({"w+1"}), 3);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness.size() == 3);
  CHECK(r.witness[0] == parse("w+1"));
  CHECK(r.witness[1] == parse("w*2+2"));
  CHECK(r.witness[2] == parse("w*3+3"));
  CHECK(is_antichain(make({"w+1"}), parse("2"), r.witness, 8));
}

TEST_CASE("necessary condition passes when minimal generators are clean") {
  CHECK(necessary_condition(make({"3", "5"})).pass);
  // Condition only inspects the smallest elements (2 and 3 here).
  CHECK(necessary_condition(make({"2", "3", "w^2+w+1"})).pass);
}

TEST_CASE("find_antichain reproduces the A1 family") {
  auto a = find_antichain(make({"w+1"}), parse("2"), 4, 6);
  REQUIRE(a.has_value());
  REQUIRE(a->size() == 4);
  CHECK((*a)[0] == parse("w+1"));
  CHECK((*a)[1] == parse("w*2+2"));
  CHECK((*a)[2] == parse("w*3+3"));
  CHECK((*a)[3] == parse("w*4+4"));
  CHECK(is_antichain(make({"w+1"}), parse("2"), *a, 10));
}

TEST_CASE("find_antichain reproduces the A3 family") {
  auto a = find_antichain(make({"2", "3", "w^2+w+1"}), parse("3"), 3, 6);
  REQUIRE(a.has_value());
  REQUIRE(a->size() == 3);
  CHECK((*a)[0] == parse("w^2+w+1"));
  CHECK((*a)[1] == parse("w^2+w*3+1"));
  CHECK((*a)[2] == parse("w^2+w*5+1"));
  CHECK(is_antichain(make({"2", "3", "w^2+w+1"}), parse("3"), *a, 8));
}

TEST_CASE("find_antichain reports NotFound for wpogs") {
  CHECK_FALSE(find_antichain(make({"3", "5"}), parse("1"), 2, 6).has_value());
  CHECK_FALSE(find_antichain(make({"3", "5"}), parse("1"), 2, 12).has_value());
  CHECK_FALSE(find_antichain(make({"2", "3", "w^2*4+w*7"}), parse("3"), 4, 4)
                  .has_value());
}

TEST_CASE("verdict pipeline") {
  WpogVerdict yes = wpog_verdict(make({"3", "5"}));
  CHECK(yes.status == WpogVerdict::Status::IsWpog);
  CHECK(yes.level_checked == parse("1"));

  WpogVerdict no1 = wpog_verdict(make({"w+1"}));
  CHECK(no1.status == WpogVerdict::Status::NotWpog);
  CHECK(no1.witness.size() >= 2);
  CHECK(no1.level_checked == parse("2"));

  WpogVerdict no2 = wpog_verdict(make({"2", "3", "w^2+w+1"}), 6, 3);
  CHECK(no2.status == WpogVerdict::Status::NotWpog);
  CHECK(no2.level_checked == parse("3"));
  CHECK(is_antichain(make({"2", "3", "w^2+w+1"}), parse("3"), no2.witness, 8));

  WpogVerdict yes2 = wpog_verdict(make({"2", "3", "w^2*4+w*7"}));
  CHECK(yes2.status == WpogVerdict::Status::IsWpog);
}
