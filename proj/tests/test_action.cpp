#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmon/action.hpp"
#include "gmon/corpus.hpp"

using namespace gmon;

namespace {

// 2x2 truncated coordinates 00, 10, 01, 11 under coordinatewise OR, with the
// Z/2 coordinate-swap action (the only nontrivial bundle).
GammaStructure b2_with_swap() {
  Monoid b2 =
      builtin("direct-sum(truncated-naturals(1),truncated-naturals(1))").monoid;
  auto bundles = attach_actions(b2, ActionSource::AllCyclicSubgroups);
  return bundles.back();
}

std::vector<int> s3_table() {
  // Symmetric group on 3 points, by composition of permutation indices:
  // 0=id, 1=(01), 2=(02), 3=(12), 4=(012), 5=(021).
  auto perms = std::vector<std::vector<int>>{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int i, int j) {
    std::vector<int> r(3);
    for (int x = 0; x < 3; ++x) r[x] = perms[i][perms[j][x]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == r) return k;
    return -1;
  };
  std::vector<int> t(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i * 6 + j] = compose(i, j);
  return t;
}

}  // namespace

TEST_CASE("group validation") {
  Group z4 = cyclic_group(4);
  CHECK(z4.inverse == std::vector<int>{0, 3, 2, 1});
  CHECK(z4.mul(2, 3) == 1);

  CHECK(!check_group({0}, 1).has_value());
  auto v = check_group({0, 1, 1, 1}, 2);
  REQUIRE(v.has_value());
  CHECK(v->code == "NoInverse");

  // A monoid table that is not a group at all.
  v = check_group({0, 1, 1, 0, 0, 1, 1, 0, 1}, 3);
  CHECK(v.has_value());

  auto s3 = s3_table();
  v = check_group(s3, 6);
  REQUIRE(v.has_value());
  CHECK(v->code == "NotAbelian");
  CHECK(!check_group(s3, 6, /*require_abelian=*/false).has_value());
  Group g = make_group(s3, 6, false);
  CHECK(g.mul(g.inverse[4], 4) == 0);
}

TEST_CASE("action law validation") {
  GammaStructure b2 = b2_with_swap();
  REQUIRE(b2.m() == 2);
  CHECK(!check_action(b2.group, b2.monoid, b2.action).has_value());

  // Identity row broken.
  auto bad = b2.action;
  bad[1] = 2;
  bad[2] = 1;
  auto v = check_action(b2.group, b2.monoid, bad);
  REQUIRE(v.has_value());
  CHECK(v->code == "IdentityLaw");

  // Non-additive permutation: swap 0 and 3 under the nonidentity element.
  bad = b2.action;
  bad[4 + 0] = 3;
  bad[4 + 1] = 1;
  bad[4 + 2] = 2;
  bad[4 + 3] = 0;
  v = check_action(b2.group, b2.monoid, bad);
  REQUIRE(v.has_value());

  // Row that is not a permutation.
  bad = b2.action;
  bad[4 + 1] = 2;
  bad[4 + 2] = 2;
  v = check_action(b2.group, b2.monoid, bad);
  REQUIRE(v.has_value());

  CHECK_THROWS_AS(
      make_gamma(b2.monoid, b2.group, std::vector<int>(8, 0)),
      ValidationError);
}

TEST_CASE("orbits") {
  GammaStructure b2 = b2_with_swap();
  // elements: 0=00, 1=10, 2=01, 3=11; the swap exchanges 10 and 01
  CHECK(orbit(b2, 0) == mask_of({0}));
  CHECK(orbit(b2, 1) == mask_of({1, 2}));
  CHECK(orbit(b2, 2) == mask_of({1, 2}));
  CHECK(orbit(b2, 3) == mask_of({3}));

  GammaStructure triv = with_trivial_action(b2.monoid);
  for (int a = 0; a < 4; ++a) CHECK(orbit(triv, a) == mask_bit(a));
}

TEST_CASE("actions fix the identity") {
  for (const Monoid& m : enumerate_monoids(4))
    for (const GammaStructure& gs :
         attach_actions(m, ActionSource::FullAutomorphismSubgroups))
      for (int al = 0; al < gs.m(); ++al) CHECK(gs.act(al, 0) == 0);
}

TEST_CASE("automorphism groups") {
  auto triv = automorphism_group(make_monoid({0}, 1));
  CHECK(triv == std::vector<std::vector<int>>{{0}});

  Monoid b2 = builtin("direct-sum(truncated-naturals(1),truncated-naturals(1))")
                  .monoid;
  auto auts = automorphism_group(b2);
  REQUIRE(auts.size() == 2);
  CHECK(auts[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(auts[1] == std::vector<int>{0, 2, 1, 3});

  // T7: exactly the identity and the swap 1<->y, x<->z.
  auto t7auts = automorphism_group(paper_t7().monoid);
  REQUIRE(t7auts.size() == 2);
  CHECK(t7auts[0] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(t7auts[1] == std::vector<int>{0, 3, 4, 1, 2, 5, 6});
}

TEST_CASE("automorphisms form a group under composition") {
  for (const Monoid& m : enumerate_monoids(4)) {
    auto auts = automorphism_group(m);
    auto member = [&](const std::vector<int>& p) {
      return std::find(auts.begin(), auts.end(), p) != auts.end();
    };
    for (const auto& p : auts)
      for (const auto& q : auts) {
        std::vector<int> r(m.n);
        for (int i = 0; i < m.n; ++i) r[i] = p[q[i]];
        CHECK(member(r));
      }
  }
}
