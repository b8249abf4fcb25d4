#pragma once

#include <gpd/constructions.hpp>
#include <gpd/groupoid.hpp>
#include <gpd/standard.hpp>

// The fixture corpus shared by the unit tests and the acceptance suite.
namespace fixtures {

inline gpd::Groupoid z2() { return gpd::cyclic_group(2, {"e", "a"}); }
inline gpd::Groupoid z3() { return gpd::cyclic_group(3); }
inline gpd::Groupoid z4() { return gpd::cyclic_group(4); }
inline gpd::Groupoid z6() { return gpd::cyclic_group(6); }
inline gpd::Groupoid pair2() { return gpd::pair_groupoid(2); }
inline gpd::Groupoid s3() { return gpd::symmetric_s3(); }
inline gpd::Groupoid trivial() { return gpd::unit_groupoid({"u"}); }

// g = Z2, h = Z3, trivial action and restriction over the single unit.
inline gpd::MatchedPair direct() {
  return gpd::direct_product_pair(z2(), z3());
}

inline gpd::MatchedPair trivial_z2() {
  return gpd::direct_product_pair(trivial(), z2());
}

// The identity cocycle Z2 -> Z2 behind the SKEW fixtures.
inline gpd::Cocycle skew_cocycle() {
  gpd::Cocycle c;
  c.domain = z2();
  c.target = gpd::cyclic_group(2);
  c.values = {0, 1};
  return c;
}

// PAIR2 with c into Z2 sending the off-diagonal arrows to 1.
inline gpd::Cocycle pair2_skew_cocycle() {
  gpd::Cocycle c;
  c.domain = pair2();
  c.target = gpd::cyclic_group(2);
  c.values.assign(4, gpd::kNoElem);
  for (gpd::Elem x = 0; x < 4; ++x) {
    c.values[x] = c.domain.is_unit(x) ? 0 : 1;
  }
  return c;
}

inline gpd::MatchedPair skewmp() {
  return gpd::skew_matched_pair(skew_cocycle());
}

// X = Z/4 with S = +1 and T = +2.
inline gpd::EndoPair rot4() {
  gpd::EndoPair p;
  p.carrier = {"0", "1", "2", "3"};
  p.s_map = {1, 2, 3, 0};
  p.t_map = {2, 3, 0, 1};
  return p;
}

// X = {0, 1} with S the identity and T the swap.
inline gpd::EndoPair idswap() {
  gpd::EndoPair p;
  p.carrier = {"0", "1"};
  p.s_map = {0, 1};
  p.t_map = {1, 0};
  return p;
}

// One vertex, one blue loop, one red loop, the only possible square.
inline gpd::TwoGraph kg1() {
  gpd::TwoGraph tg;
  tg.vertices = {"v"};
  tg.blue = {{"f", "v", "v"}};
  tg.red = {{"e", "v", "v"}};
  tg.squares = {{"f", "e", "e", "f"}};
  return tg;
}

// One vertex, two blue and two red loops, with squares arranged so that the
// same-source pair (f1, e1) has two completions and (f2, e1) has none.
inline gpd::TwoGraph kg_bad() {
  gpd::TwoGraph tg;
  tg.vertices = {"v"};
  tg.blue = {{"f1", "v", "v"}, {"f2", "v", "v"}};
  tg.red = {{"e1", "v", "v"}, {"e2", "v", "v"}};
  tg.squares = {{"f1", "e1", "e1", "f1"},
                {"f2", "e1", "e2", "f1"},
                {"f1", "e2", "e1", "f2"},
                {"f2", "e2", "e2", "f2"}};
  return tg;
}

// Corrupted variants for the validator: one per groupoid axiom.
inline gpd::Groupoid z2_bad_inverse() {
  gpd::GroupoidBuilder b;
  gpd::Elem e = b.add_element("e"), a = b.add_element("a");
  b.set_inverse(e, e);
  b.set_inverse(a, e);  // breaks (a^-1)^-1 = a
  b.set_compose(e, e, e);
  b.set_compose(e, a, a);
  b.set_compose(a, e, a);
  b.set_compose(a, a, e);
  return b.build();
}

// Z3 with 1.1 = 0 instead of 2; (1.1).2 = 2 while 1.(1.2) = 1.
inline gpd::Groupoid z3_bad_assoc() {
  gpd::GroupoidBuilder b;
  for (const char* l : {"0", "1", "2"}) b.add_element(l);
  for (gpd::Elem i = 0; i < 3; ++i) {
    b.set_inverse(i, (3 - i) % 3);
    for (gpd::Elem j = 0; j < 3; ++j) {
      b.set_compose(i, j, (i == 1 && j == 1) ? 0 : (i + j) % 3);
    }
  }
  return b.build();
}

inline gpd::Groupoid pair2_bad_cancel() {
  // Pair groupoid on two points with (1,2).(2,1) redefined to (2,2).
  gpd::GroupoidBuilder b;
  auto lbl = [](int i, int j) {
    return gpd::pair_label(std::to_string(i), std::to_string(j));
  };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) b.add_element(lbl(i, j));
  }
  auto id = [](int i, int j) { return gpd::Elem((i - 1) * 2 + (j - 1)); };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      b.set_inverse(id(i, j), id(j, i));
      for (int k = 1; k <= 2; ++k) {
        gpd::Elem target = (i == 1 && j == 2 && k == 1) ? id(2, 2) : id(i, k);
        b.set_compose(id(i, j), id(j, k), target);
      }
    }
  }
  return b.build();
}

}  // namespace fixtures
