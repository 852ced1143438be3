#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gmon/corpus.hpp"
#include "gmon/quotient.hpp"

using namespace gmon;

namespace {

// Naive ground truth for n=3: every function {0,1,2}^2 -> {0,1,2} (3^9 tables),
// filtered by the axioms, deduplicated by canonical form.
std::set<std::string> naive_monoids3() {
  std::set<std::string> out;
  const int n = 3;
  std::vector<int> t(9);
  for (long code = 0; code < 19683; ++code) {
    long c = code;
    for (int i = 0; i < 9; ++i) {
      t[i] = c % 3;
      c /= 3;
    }
    if (check_monoid({"0", "1", "2"}, t, n).has_value()) continue;
    out.insert(canonical_form(make_monoid(t, n)));
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_monoids(1).size() == 1);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 5);
  CHECK(enumerate_monoids(4).size() == 19);
  CHECK(enumerate_monoids(5).size() == 78);
  CHECK_THROWS_AS(enumerate_monoids(7), ValidationError);
}

TEST_CASE("n=2: the group and the semilattice") {
  auto ms = enumerate_monoids(2);
  REQUIRE(ms.size() == 2);
  std::set<std::vector<int>> tables{ms[0].table, ms[1].table};
  CHECK(tables.count({0, 1, 1, 0}));
  CHECK(tables.count({0, 1, 1, 1}));
}

TEST_CASE("n=3 matches the naive 3^9 filter") {
  auto naive = naive_monoids3();
  std::set<std::string> fast;
  for (const Monoid& m : enumerate_monoids(3)) fast.insert(canonical_form(m));
  CHECK(fast == naive);
}

TEST_CASE("enumeration is deterministic and canonical-sorted") {
  auto a = enumerate_monoids(4);
  auto b = enumerate_monoids(4);
  REQUIRE(a.size() == b.size());
  std::vector<std::string> keys;
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].table == b[i].table);
    keys.push_back(canonical_form(a[i]));
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("attach_actions") {
  auto triv =
      attach_actions(make_monoid({0}, 1), ActionSource::FullAutomorphismSubgroups);
  CHECK(triv.size() == 1);
  CHECK(triv[0].m() == 1);

  Monoid b2 =
      builtin("direct-sum(truncated-naturals(1),truncated-naturals(1))").monoid;
  auto bundles = attach_actions(b2, ActionSource::AllCyclicSubgroups);
  REQUIRE(bundles.size() == 2);
  CHECK(bundles[0].m() == 1);
  CHECK(bundles[1].m() == 2);
  CHECK(bundles[1].act(1, 1) == 2);  // the coordinate swap

  auto t7b = attach_actions(paper_t7().monoid, ActionSource::AllCyclicSubgroups);
  REQUIRE(t7b.size() == 2);  // Aut(T7) = Z/2
  CHECK(t7b[1].m() == 2);
  CHECK(t7b[1].act(1, 1) == 3);  // 1 <-> y

  // full-subgroup source covers at least the cyclic ones
  auto full = attach_actions(b2, ActionSource::FullAutomorphismSubgroups);
  CHECK(full.size() >= bundles.size());
}

TEST_CASE("cyclic_action from a generator") {
  Monoid b2 =
      builtin("direct-sum(truncated-naturals(1),truncated-naturals(1))").monoid;
  GammaStructure gs = cyclic_action(b2, {0, 2, 1, 3});
  CHECK(gs.m() == 2);
  CHECK(gs.act(1, 1) == 2);

  CHECK_THROWS_AS(cyclic_action(b2, {0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(cyclic_action(b2, {1, 0, 2, 3}), ValidationError);
  CHECK_THROWS_AS(cyclic_action(b2, {0, 3, 2, 1}), ValidationError);  // not additive
}

TEST_CASE("builtins") {
  GammaStructure t7 = builtin("paper-T7");
  CHECK(t7.n() == 7);
  CHECK(t7.m() == 1);
  CHECK(t7.monoid.name(6) == "b");
  CHECK(t7.monoid.add(6, 6) == 5);  // b+b = s

  GammaStructure tn1 = builtin("truncated-naturals(1)");
  CHECK(tn1.monoid.table == std::vector<int>{0, 1, 1, 1});
  GammaStructure tn3 = builtin("truncated-naturals(3)");
  CHECK(tn3.monoid.add(2, 3) == 3);

  GammaStructure sp = builtin("shifted-power(1,4)");
  CHECK(sp.n() == 16);
  CHECK(sp.m() == 4);
  // the shift is a 4-cycle on the unit vectors
  int e = sp.act(1, 1);
  CHECK(e != 1);
  CHECK(sp.act(1, sp.act(1, sp.act(1, sp.act(1, 1)))) == 1);

  GammaStructure ds = builtin(
      "direct-sum(truncated-naturals(2),truncated-naturals(1))");
  CHECK(ds.n() == 6);
  CHECK(ds.m() == 1);

  GammaStructure sl = builtin("semilattice-from-poset(0<1,0<2)");
  CHECK(sl.n() > 1);
  // down-sets under union form a semilattice: every element idempotent
  for (int a = 0; a < sl.n(); ++a) CHECK(sl.monoid.add(a, a) == a);

  CHECK_THROWS_AS(builtin("no-such-family"), ValidationError);
  CHECK_THROWS_AS(builtin("truncated-naturals(-1)"), ValidationError);
  CHECK_THROWS_AS(builtin("truncated-naturals(x)"), ValidationError);
  CHECK_THROWS_AS(builtin("shifted-power(3,4)"), ValidationError);  // > 64
}

TEST_CASE("every corpus instance validates") {
  for (int n = 1; n <= 4; ++n)
    for (const Monoid& m : enumerate_monoids(n))
      for (const GammaStructure& gs :
           attach_actions(m, ActionSource::FullAutomorphismSubgroups)) {
        CHECK(!check_monoid(gs.monoid.names, gs.monoid.table, gs.n())
                   .has_value());
        CHECK(!check_group(gs.group.table, gs.m()).has_value());
        CHECK(!check_action(gs.group, gs.monoid, gs.action).has_value());
      }
}
