#include <doctest.h>

#include <gpd/constructions.hpp>
#include <gpd/isomorphism.hpp>
#include <gpd/standard.hpp>
#include <gpd/zs_product.hpp>

#include <algorithm>

#include "fixtures.hpp"

using namespace gpd;

namespace {

GroupAction z2_action_on_two_points(bool swap) {
  GroupAction a;
  a.group = fixtures::z2();
  a.carrier = {"1", "2"};
  a.act = swap ? std::vector<int>{0, 1, 1, 0} : std::vector<int>{0, 1, 0, 1};
  return a;
}

}  // namespace

TEST_CASE("transformation groupoid of the trivial Z2 action") {
  Groupoid tg = transformation_groupoid(z2_action_on_two_points(false));
  CHECK(tg.size() == 4);
  CHECK(tg.units().size() == 2);
  CHECK(validate(tg).ok());
  // Two disjoint copies of Z2: (a,1) composes with itself back to (e,1).
  Elem a1 = tg.element("(a,1)");
  CHECK(tg.compose(a1, a1) == tg.element("(e,1)"));
  CHECK_FALSE(tg.composable(a1, tg.element("(a,2)")));
}

TEST_CASE("transformation groupoid of the swap action") {
  Groupoid tg = transformation_groupoid(z2_action_on_two_points(true));
  CHECK(tg.size() == 4);
  CHECK(tg.units().size() == 2);
  REQUIRE(validate(tg).ok());
  // (a,1) points from 1 to 2.
  Elem a1 = tg.element("(a,1)");
  CHECK(tg.range(a1) == tg.element("(e,2)"));
  CHECK(tg.source(a1) == tg.element("(e,1)"));
}

TEST_CASE("the trivial group yields the unit groupoid") {
  GroupAction a;
  a.group = unit_groupoid({"e"});
  a.carrier = {"x", "y", "z"};
  a.act = {0, 1, 2};
  Groupoid tg = transformation_groupoid(a);
  CHECK(tg.size() == 3);
  CHECK(tg.units().size() == 3);
}

TEST_CASE("invalid actions are rejected with a witness") {
  GroupAction a = z2_action_on_two_points(true);
  a.act = {0, 1, 0, 0};  // a no longer acts bijectively, breaks a.(a.x) = x
  ActionCheck check = validate_action(a);
  REQUIRE_FALSE(check.ok());
  CHECK(check.failures[0].find("(") != std::string::npos);
  CHECK_THROWS_AS(transformation_groupoid(a), PreconditionError);
}

TEST_CASE("skew product of the identity cocycle on Z2") {
  Groupoid sk = skew_product(fixtures::skew_cocycle());
  CHECK(sk.size() == 4);
  REQUIRE(validate(sk).ok());
  CHECK(sk.units() == std::vector<Elem>{sk.element("(e,0)"), sk.element("(e,1)")});
  // (a,0)(a,1) = (e,0): the second coordinate must be 0 + c(a) = 1.
  Elem a0 = sk.element("(a,0)"), a1 = sk.element("(a,1)");
  CHECK(sk.compose(a0, a1) == sk.element("(e,0)"));
  CHECK_FALSE(sk.composable(a0, a0));
}

TEST_CASE("a trivial cocycle gives disjoint copies") {
  Cocycle c;
  c.domain = fixtures::z2();
  c.target = cyclic_group(2);
  c.values = {0, 0};
  Groupoid sk = skew_product(c);
  CHECK(sk.size() == 4);
  CHECK(sk.units().size() == 2);
  REQUIRE(validate(sk).ok());
  // Each copy is closed: (a,0)(a,0) = (e,0).
  Elem a0 = sk.element("(a,0)");
  CHECK(sk.compose(a0, a0) == sk.element("(e,0)"));
  CHECK_FALSE(sk.composable(a0, sk.element("(a,1)")));
}

TEST_CASE("skew product over PAIR2") {
  Groupoid sk = skew_product(fixtures::pair2_skew_cocycle());
  CHECK(sk.size() == 8);
  CHECK(sk.units().size() == 4);
  CHECK(validate(sk).ok());
}

TEST_CASE("non-homomorphism cocycles are rejected with a witness pair") {
  Cocycle c;
  c.domain = fixtures::z2();
  c.target = cyclic_group(2);
  c.values = {1, 0};  // c(e) = 1 breaks c(ee) = c(e)c(e)
  CocycleCheck check = validate_cocycle(c);
  REQUIRE_FALSE(check.ok());
  CHECK_THROWS_AS(skew_product(c), PreconditionError);
}

TEST_CASE("the skew matched pair has the right shape") {
  MatchedPair mp = fixtures::skewmp();
  CHECK(mp.vertical().size() == 4);
  CHECK(mp.horizontal().size() == 4);
  CHECK(verify_matched_pair(mp).ok());
  CHECK(build_zs_product(mp).product().size() == 8);
}

TEST_CASE("the skew matched pair collapses when A is trivial") {
  Cocycle c;
  c.domain = fixtures::pair2();
  c.target = unit_groupoid({"0"});
  c.values = {0, 0, 0, 0};
  MatchedPair mp = skew_matched_pair(c);
  CHECK(mp.horizontal().units().size() ==
        static_cast<size_t>(mp.horizontal().size()));
  ZsGroupoid zs = build_zs_product(mp);
  CHECK(find_isomorphism(zs.product(), fixtures::pair2()).has_value());
}

TEST_CASE("semidirect-skew isomorphism chain") {
  SUBCASE("identity cocycle on Z2") {
    SkewIsoReport rep = semidirect_skew_isomorphism_check(fixtures::skew_cocycle());
    CAPTURE(rep.stage);
    CAPTURE(rep.detail);
    CHECK(rep.ok);
    CHECK(rep.elements == 8);
  }
  SUBCASE("PAIR2 cocycle") {
    SkewIsoReport rep =
        semidirect_skew_isomorphism_check(fixtures::pair2_skew_cocycle());
    CAPTURE(rep.stage);
    CAPTURE(rep.detail);
    CHECK(rep.ok);
    CHECK(rep.elements == 16);
  }
  SUBCASE("trivial group A") {
    Cocycle c;
    c.domain = fixtures::z2();
    c.target = unit_groupoid({"0"});
    c.values = {0, 0};
    SkewIsoReport rep = semidirect_skew_isomorphism_check(c);
    CHECK(rep.ok);
    CHECK(rep.elements == 2);
  }
}

TEST_CASE("star commuting checks") {
  SUBCASE("rotations of Z/4") {
    StarCommuteReport rep = star_commuting_check(fixtures::rot4());
    CHECK(rep.commute);
    CHECK(rep.star_commute);
    CHECK(rep.witnesses.empty());
  }
  SUBCASE("identity maps") {
    EndoPair p;
    p.carrier = {"x", "y", "z"};
    p.s_map = {0, 1, 2};
    p.t_map = {0, 1, 2};
    CHECK(star_commuting_check(p).ok());
  }
  SUBCASE("identity and swap") {
    StarCommuteReport rep = star_commuting_check(fixtures::idswap());
    CHECK(rep.ok());
  }
  SUBCASE("non-commuting bijections") {
    EndoPair p;
    p.carrier = {"0", "1", "2"};
    p.s_map = {1, 0, 2};  // (0 1)
    p.t_map = {1, 2, 0};  // (0 1 2)
    StarCommuteReport rep = star_commuting_check(p);
    CHECK_FALSE(rep.commute);
  }
  SUBCASE("non-surjective maps are a precondition error") {
    EndoPair p;
    p.carrier = {"0", "1"};
    p.s_map = {0, 0};
    p.t_map = {0, 1};
    CHECK_THROWS_AS(star_commuting_check(p), PreconditionError);
  }
}

TEST_CASE("windowed Deaconu-Renault views") {
  SUBCASE("ROT4 window counts") {
    WindowedDr w = dr_window(fixtures::rot4(), 1);
    // For each of the 9 lags every x has exactly one partner y.
    CHECK(w.elems.size() == 36);
  }
  SUBCASE("identity maps force x = y") {
    EndoPair p;
    p.carrier = {"x", "y"};
    p.s_map = {0, 1};
    p.t_map = {0, 1};
    WindowedDr w = dr_window(p, 2);
    CHECK(w.elems.size() == 2u * 5 * 5);
    for (const DrElem& el : w.elems) CHECK(el.x == el.y);
  }
  SUBCASE("1d window of the rotation") {
    auto elems = dr_window_1d({1, 2, 3, 0}, 1);
    CHECK(elems.size() == 12);  // 3 lags x 4 points, y determined
  }
  SUBCASE("composition escapes the window") {
    EndoPair p = fixtures::rot4();
    WindowedDr w = dr_window(p, 1);
    DrElem a{0, 1, 0, 1};  // 0 -> S 1
    REQUIRE(std::find(w.elems.begin(), w.elems.end(), a) != w.elems.end());
    DrElem b{1, 1, 0, 2};
    CHECK_FALSE(compose_windowed(p, 1, a, b).has_value());
    CHECK(compose_windowed(p, 2, a, b).has_value());
  }
}

TEST_CASE("windowed decomposition is unique and recomposes") {
  for (int lag = 1; lag <= 3; ++lag) {
    for (const EndoPair& p : {fixtures::rot4(), fixtures::idswap()}) {
      DrDecompositionReport rep = dr_zs_decomposition_check(p, lag);
      CAPTURE(lag);
      CHECK(rep.ok());
      CHECK(rep.decomposed == rep.total);
      CHECK(rep.failures.empty());
    }
  }
}

TEST_CASE("decomposition check requires a *-commuting pair") {
  EndoPair p;
  p.carrier = {"0", "1", "2"};
  p.s_map = {1, 0, 2};
  p.t_map = {1, 2, 0};
  CHECK_THROWS_AS(dr_zs_decomposition_check(p, 1), PreconditionError);
}

TEST_CASE("the one-loop 2-graph validates and is 1-coaligned") {
  TwoGraph kg1 = fixtures::kg1();
  TwoGraphReport rep = validate_two_graph(kg1);
  CHECK(rep.ok());
  CHECK(rep.no_sources);
  CHECK(rep.no_sinks);
  CoalignReport co = coaligned_check(kg1);
  CHECK(co.coaligned);
  CHECK(co.pairs_checked == 1);
}

TEST_CASE("the crossed squares fixture fails coalignment with witnesses") {
  TwoGraph bad = fixtures::kg_bad();
  REQUIRE(validate_two_graph(bad).ok());
  CoalignReport co = coaligned_check(bad);
  CHECK_FALSE(co.coaligned);
  bool zero = false, multi = false;
  for (const auto& [e1, e2, count] : co.witnesses) {
    if (count == 0) zero = true;
    if (count >= 2) multi = true;
  }
  CHECK(zero);
  CHECK(multi);
}

TEST_CASE("a 2-graph with no composable mixed paths is vacuously valid") {
  TwoGraph tg;
  tg.vertices = {"u", "v"};
  tg.blue = {{"f", "u", "v"}};
  tg.red = {{"e", "u", "v"}};
  TwoGraphReport rep = validate_two_graph(tg);
  CHECK(rep.ok());
  CHECK_FALSE(rep.no_sources);  // v has no incoming edges
  CoalignReport co = coaligned_check(tg);
  CHECK_FALSE(co.coaligned);
  REQUIRE(co.witnesses.size() == 1);
  CHECK(std::get<2>(co.witnesses[0]) == 0);
}

TEST_CASE("broken squares tables are rejected") {
  TwoGraph tg = fixtures::kg_bad();
  SUBCASE("duplicate key") {
    tg.squares.push_back({"f1", "e1", "e2", "f2"});
    CHECK_FALSE(validate_two_graph(tg).ok());
  }
  SUBCASE("missing square") {
    tg.squares.pop_back();
    CHECK_FALSE(validate_two_graph(tg).ok());
  }
  SUBCASE("unknown edge") {
    tg.squares[0][0] = "nope";
    CHECK_FALSE(validate_two_graph(tg).ok());
  }
  SUBCASE("coalignment requires validity") {
    tg.squares.pop_back();
    CHECK_THROWS_AS(coaligned_check(tg), PreconditionError);
  }
}

TEST_CASE("blue and red graphs are the colour restrictions") {
  auto [blue, red] = blue_red_graphs(fixtures::kg1());
  CHECK(blue.vertices == std::vector<std::string>{"v"});
  REQUIRE(blue.edges.size() == 1);
  CHECK(blue.edges[0].name == "f");
  REQUIRE(red.edges.size() == 1);
  CHECK(red.edges[0].name == "e");
}
