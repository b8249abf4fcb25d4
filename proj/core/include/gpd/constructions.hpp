#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/matched_pair.hpp"
#include "gpd/zs_product.hpp"

namespace gpd {

// ---------------------------------------------------------------------------
// Transformation groupoids

// A finite group acting on a finite set. act[g * |carrier| + x] is the image
// of point x under g.
struct GroupAction {
  Groupoid group;  // single unit
  std::vector<std::string> carrier;
  std::vector<int> act;

  int point(const std::string& label) const;
  int apply(Elem g, int x) const { return act[static_cast<size_t>(g) * carrier.size() + x]; }
};

struct ActionCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Identity acts trivially; g.(h.x) = (gh).x.
ActionCheck validate_action(const GroupAction& a);

// G x X with (g, h.x)(h, x) = (gh, x) and (g, x)^-1 = (g^-1, g.x).
// Throws PreconditionError when the action invariants fail.
Groupoid transformation_groupoid(const GroupAction& a);

// ---------------------------------------------------------------------------
// Skew products

// A group-valued cocycle on a groupoid: values[x] is c(x) in the target
// group. The homomorphism law c(gh) = c(g)c(h) is what validate_cocycle
// checks; continuity is automatic here.
struct Cocycle {
  Groupoid domain;
  Groupoid target;  // single unit
  std::vector<Elem> values;
};

struct CocycleCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

CocycleCheck validate_cocycle(const Cocycle& c);

// G x A with (g,a)(h, a c(g)) = (gh, a) and (g,a)^-1 = (g^-1, a c(g)).
Groupoid skew_product(const Cocycle& c);

// The matched pair (G(c), H) with H = A acting on G0 x A by
// b.(u,a) = (u, a b^-1):
//   (b,(u,a)) . (g,a)  = (g, a b^-1)
//   (b,(u,a))|_{(g,a)} = (c(g)^-1 b c(g), (g^-1 g, a c(g))).
MatchedPair skew_matched_pair(const Cocycle& c);

struct SkewIsoReport {
  bool ok = false;
  std::string stage;   // where the chain stopped, empty on success
  std::string detail;
  int elements = 0;    // size of both sides on success
};

// Builds the semidirect product G x A with
// (g,a)(h,b) = (gh, c(h)^-1 a c(h) b), checks c~(g,a) = c(g)a is a
// homomorphism, and verifies that ((g,a),b) -> ((g,a),(b,(g^-1 g, a c(g) b)))
// is a groupoid isomorphism of (G x A)(c~) onto G(c) |x| H.
SkewIsoReport semidirect_skew_isomorphism_check(const Cocycle& c);

// ---------------------------------------------------------------------------
// *-commuting endomorphisms and windowed Deaconu-Renault views

// Two commuting surjections of a finite carrier. On a finite set surjective
// means bijective, so these are invertible dynamics; the fill-in logic is
// exercised all the same.
struct EndoPair {
  std::vector<std::string> carrier;
  std::vector<int> s_map;
  std::vector<int> t_map;
};

struct StarCommuteReport {
  bool commute = false;
  bool star_commute = false;
  // (x, y, count) for pairs Tx = Sy with count != 1 fill-ins.
  std::vector<std::tuple<int, int, int>> witnesses;

  bool ok() const { return commute && star_commute; }
};

// For every (x, y) with Tx = Sy, counts z with Sz = x and Tz = y.
// Throws PreconditionError when a map is not surjective.
StarCommuteReport star_commuting_check(const EndoPair& p);

// A windowed element (x, k, y) of the rank-2 groupoid: k = m - n with the
// canonical representative m = max(k,0), n = max(-k,0) componentwise, and
// theta_m(x) = theta_n(y).
struct DrElem {
  int x;
  int k1;
  int k2;
  int y;

  bool operator==(const DrElem&) const = default;
};

struct WindowedDr {
  int lag_bound = 0;
  std::vector<DrElem> elems;
};

// All windowed elements with |k1|,|k2| <= lag_bound. A view into the
// infinite groupoid, not a groupoid: composition may leave the window.
WindowedDr dr_window(const EndoPair& p, int lag_bound);

// Rank-1 version for a single map.
struct Dr1Elem {
  int x;
  int k;
  int y;

  bool operator==(const Dr1Elem&) const = default;
};
std::vector<Dr1Elem> dr_window_1d(const std::vector<int>& map, int lag_bound);

// Composition per the addition rule on exponents; nullopt when the result
// escapes the window or the middle points disagree.
std::optional<DrElem> compose_windowed(const EndoPair& p, int lag_bound,
                                       const DrElem& a, const DrElem& b);

struct DrDecompositionReport {
  int total = 0;            // windowed elements examined
  int decomposed = 0;       // unique fill-in found and recomposition checked
  int skipped_products = 0; // composable windowed pairs whose product escapes
  // (element, number of fill-ins) for failures.
  std::vector<std::pair<DrElem, int>> failures;

  bool ok() const { return failures.empty() && decomposed == total; }
};

// For every windowed element, existence and uniqueness of z with
// S^{n1} z = S^{m1} x and T^{m2} z = T^{n2} y, and recomposition of the two
// one-parameter factors to the original element.
DrDecompositionReport dr_zs_decomposition_check(const EndoPair& p, int lag_bound);

// ---------------------------------------------------------------------------
// Finite 2-graphs

struct TwoGraphEdge {
  std::string name;
  std::string range;
  std::string source;
};

// A bi-coloured graph with a complete squares bijection: squares entry
// {f, e, e2, f2} declares the degree-(1,1) identity f.e = e2.f2 with f, f2
// blue and e, e2 red.
struct TwoGraph {
  std::vector<std::string> vertices;
  std::vector<TwoGraphEdge> blue;
  std::vector<TwoGraphEdge> red;
  std::vector<std::array<std::string, 4>> squares;
};

struct TwoGraphReport {
  std::vector<std::string> errors;
  // Hypothesis certificate for the blend theorem on the path space: a
  // finite graph is row-finite for free; sinks and sources are per colour.
  bool no_sources = false;
  bool no_sinks = false;

  bool ok() const { return errors.empty(); }
};

// Squares must form a bijection from composable blue-red paths onto
// composable red-blue paths, respecting range and source.
TwoGraphReport validate_two_graph(const TwoGraph& tg);

struct CoalignReport {
  bool coaligned = false;
  // (e1, e2, count) for same-source pairs with count != 1 completions.
  std::vector<std::tuple<std::string, std::string, int>> witnesses;
  int pairs_checked = 0;
};

// 1-coalignment: every same-source pair (e1 blue, e2 red) admits exactly one
// same-range pair (f1, f2) with f1 e2 = f2 e1.
CoalignReport coaligned_check(const TwoGraph& tg);

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<TwoGraphEdge> edges;
};

// The blue and red single-coloured graphs on the shared vertex set.
std::pair<DirectedGraph, DirectedGraph> blue_red_graphs(const TwoGraph& tg);

}  // namespace gpd
