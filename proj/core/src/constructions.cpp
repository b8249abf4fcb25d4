#include "gpd/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpd/isomorphism.hpp"
#include "gpd/standard.hpp"

namespace gpd {

// ---------------------------------------------------------------------------
// Transformation groupoids

int GroupAction::point(const std::string& label) const {
  for (size_t i = 0; i < carrier.size(); ++i) {
    if (carrier[i] == label) return static_cast<int>(i);
  }
  return -1;
}

ActionCheck validate_action(const GroupAction& a) {
  ActionCheck check;
  if (a.group.units().size() != 1) {
    check.failures.push_back("acting groupoid must be a group (one unit)");
    return check;
  }
  if (!validate(a.group).ok()) {
    check.failures.push_back("acting group fails groupoid validation");
    return check;
  }
  const int nx = static_cast<int>(a.carrier.size());
  if (a.act.size() != static_cast<size_t>(a.group.size()) * nx) {
    check.failures.push_back("action table has the wrong size");
    return check;
  }
  for (int v : a.act) {
    if (v < 0 || v >= nx) {
      check.failures.push_back("action table maps outside the carrier");
      return check;
    }
  }
  Elem e = a.group.units()[0];
  for (int x = 0; x < nx; ++x) {
    if (a.apply(e, x) != x) {
      check.failures.push_back("identity moves point " + a.carrier[x]);
    }
  }
  for (Elem g = 0; g < a.group.size(); ++g) {
    for (Elem h = 0; h < a.group.size(); ++h) {
      Elem gh = a.group.compose(g, h);
      for (int x = 0; x < nx; ++x) {
        if (a.apply(g, a.apply(h, x)) != a.apply(gh, x)) {
          check.failures.push_back("g.(h.x) != (gh).x at (" + a.group.label(g) +
                                   ", " + a.group.label(h) + ", " + a.carrier[x] + ")");
        }
      }
    }
  }
  return check;
}

Groupoid transformation_groupoid(const GroupAction& a) {
  ActionCheck check = validate_action(a);
  if (!check.ok()) {
    throw PreconditionError("invalid group action: " + check.failures[0]);
  }
  const int nx = static_cast<int>(a.carrier.size());
  GroupoidBuilder b;
  auto id = [&](Elem g, int x) { return static_cast<Elem>(g * nx + x); };
  for (Elem g = 0; g < a.group.size(); ++g) {
    for (int x = 0; x < nx; ++x) {
      b.add_element(pair_label(a.group.label(g), a.carrier[x]));
    }
  }
  for (Elem g = 0; g < a.group.size(); ++g) {
    for (int x = 0; x < nx; ++x) {
      b.set_inverse(id(g, x), id(a.group.inverse(g), a.apply(g, x)));
      // (g, h.x)(h, x) = (gh, x)
      for (Elem h = 0; h < a.group.size(); ++h) {
        for (int y = 0; y < nx; ++y) {
          if (a.apply(h, y) != x) continue;
          b.set_compose(id(g, x), id(h, y), id(a.group.compose(g, h), y));
        }
      }
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Skew products

CocycleCheck validate_cocycle(const Cocycle& c) {
  CocycleCheck check;
  if (c.target.units().size() != 1) {
    check.failures.push_back("cocycle target must be a group (one unit)");
    return check;
  }
  if (!validate(c.domain).ok() || !validate(c.target).ok()) {
    check.failures.push_back("cocycle factors fail groupoid validation");
    return check;
  }
  if (c.values.size() != static_cast<size_t>(c.domain.size())) {
    check.failures.push_back("cocycle map is not total");
    return check;
  }
  for (Elem v : c.values) {
    if (v < 0 || v >= c.target.size()) {
      check.failures.push_back("cocycle maps outside the target group");
      return check;
    }
  }
  for (Elem g = 0; g < c.domain.size(); ++g) {
    for (Elem h = 0; h < c.domain.size(); ++h) {
      Elem gh = c.domain.compose(g, h);
      if (gh == kNoElem) continue;
      if (c.values[gh] != c.target.compose(c.values[g], c.values[h])) {
        check.failures.push_back("c(gh) != c(g)c(h) at (" + c.domain.label(g) +
                                 ", " + c.domain.label(h) + ")");
      }
    }
  }
  return check;
}

Groupoid skew_product(const Cocycle& c) {
  CocycleCheck check = validate_cocycle(c);
  if (!check.ok()) {
    throw PreconditionError("invalid cocycle: " + check.failures[0]);
  }
  const Groupoid& dom = c.domain;
  const Groupoid& grp = c.target;
  const int na = grp.size();
  GroupoidBuilder b;
  auto id = [&](Elem g, Elem a) { return static_cast<Elem>(g * na + a); };
  for (Elem g = 0; g < dom.size(); ++g) {
    for (Elem a = 0; a < na; ++a) {
      b.add_element(pair_label(dom.label(g), grp.label(a)));
    }
  }
  for (Elem g = 0; g < dom.size(); ++g) {
    for (Elem a = 0; a < na; ++a) {
      b.set_inverse(id(g, a), id(dom.inverse(g), grp.compose(a, c.values[g])));
      // (g, a)(h, a c(g)) = (gh, a)
      for (Elem h = 0; h < dom.size(); ++h) {
        Elem gh = dom.compose(g, h);
        if (gh == kNoElem) continue;
        b.set_compose(id(g, a), id(h, grp.compose(a, c.values[g])), id(gh, a));
      }
    }
  }
  return b.build();
}

MatchedPair skew_matched_pair(const Cocycle& c) {
  Groupoid gc = skew_product(c);
  const Groupoid& grp = c.target;
  const Elem e = grp.units()[0];

  // H = A acting on G(c)^0 = G^0 x A by b.(u,a) = (u, a b^-1).
  GroupAction ha;
  ha.group = grp;
  std::vector<Elem> carrier_units(gc.units());
  for (Elem u : carrier_units) ha.carrier.push_back(gc.label(u));
  std::vector<int> unit_pos(gc.size(), -1);
  for (size_t i = 0; i < carrier_units.size(); ++i) {
    unit_pos[carrier_units[i]] = static_cast<int>(i);
  }
  // Units of the skew product are (u, a); recover the twist coordinate by
  // composing within the skew product: (u, a) twisted by b is (u, a b^-1).
  // We read it off structurally instead: unit (u_dom, a) has a known label.
  ha.act.assign(static_cast<size_t>(grp.size()) * ha.carrier.size(), -1);
  for (Elem beta = 0; beta < grp.size(); ++beta) {
    for (size_t i = 0; i < carrier_units.size(); ++i) {
      Elem u = carrier_units[i];
      // u = id(g_unit, a) with label pair(g, a); decode via index arithmetic.
      Elem g_part = u / grp.size();
      Elem a_part = u % grp.size();
      Elem twisted = grp.compose(a_part, grp.inverse(beta));
      Elem target_unit = g_part * grp.size() + twisted;
      ha.act[static_cast<size_t>(beta) * ha.carrier.size() + i] = unit_pos[target_unit];
    }
  }
  Groupoid h = transformation_groupoid(ha);

  auto h_elem = [&](Elem beta, Elem gc_unit) {
    return h.element(pair_label(grp.label(beta), gc.label(gc_unit)));
  };

  std::vector<std::pair<Elem, Elem>> unit_map;
  for (Elem u : gc.units()) unit_map.emplace_back(u, h_elem(e, u));

  // Action (b,(u,a)).(g,a) = (g, a b^-1);
  // restriction (b,(u,a))|_{(g,a)} = (c(g)^-1 b c(g), (g^-1 g, a c(g))).
  std::vector<std::tuple<Elem, Elem, Elem>> action, restriction;
  for (Elem beta = 0; beta < grp.size(); ++beta) {
    for (Elem x = 0; x < gc.size(); ++x) {
      Elem g_part = x / grp.size();
      Elem a_part = x % grp.size();
      Elem hh = h_elem(beta, gc.range(x));  // r(h) must equal b(g,a) = (gg^-1, a)
      Elem acted = g_part * grp.size() + grp.compose(a_part, grp.inverse(beta));
      action.emplace_back(hh, x, acted);
      Elem cg = c.values[g_part];
      Elem conj = grp.compose(grp.compose(grp.inverse(cg), beta), cg);
      Elem t_unit = gc.source(x);  // (g^-1 g, a c(g))
      restriction.emplace_back(hh, x, h_elem(conj, t_unit));
    }
  }
  return MatchedPair(std::move(gc), std::move(h), std::move(unit_map),
                     std::move(action), std::move(restriction));
}

SkewIsoReport semidirect_skew_isomorphism_check(const Cocycle& c) {
  SkewIsoReport rep;
  CocycleCheck cc = validate_cocycle(c);
  if (!cc.ok()) {
    rep.stage = "cocycle";
    rep.detail = cc.failures[0];
    return rep;
  }
  const Groupoid& dom = c.domain;
  const Groupoid& grp = c.target;
  const int na = grp.size();

  // Semidirect product G x A: (g,a)(h,b) = (gh, c(h)^-1 a c(h) b),
  // (g,a)^-1 = (g^-1, c(g) a^-1 c(g)^-1).
  Groupoid sd;
  {
    GroupoidBuilder b;
    auto id = [&](Elem g, Elem a) { return static_cast<Elem>(g * na + a); };
    for (Elem g = 0; g < dom.size(); ++g) {
      for (Elem a = 0; a < na; ++a) {
        b.add_element(pair_label(dom.label(g), grp.label(a)));
      }
    }
    for (Elem g = 0; g < dom.size(); ++g) {
      Elem cg = c.values[g];
      for (Elem a = 0; a < na; ++a) {
        b.set_inverse(id(g, a),
                      id(dom.inverse(g),
                         grp.compose(grp.compose(cg, grp.inverse(a)), grp.inverse(cg))));
        for (Elem hh = 0; hh < dom.size(); ++hh) {
          Elem gh = dom.compose(g, hh);
          if (gh == kNoElem) continue;
          Elem ch = c.values[hh];
          for (Elem bb = 0; bb < na; ++bb) {
            Elem twisted = grp.compose(
                grp.compose(grp.compose(grp.inverse(ch), a), ch), bb);
            b.set_compose(id(g, a), id(hh, bb), id(gh, twisted));
          }
        }
      }
    }
    sd = b.build();
  }
  if (!validate(sd).ok()) {
    rep.stage = "semidirect";
    rep.detail = "G x A failed groupoid validation";
    return rep;
  }

  // c~(g, a) = c(g) a on the semidirect product.
  Cocycle ct;
  ct.domain = sd;
  ct.target = grp;
  ct.values.resize(sd.size());
  for (Elem g = 0; g < dom.size(); ++g) {
    for (Elem a = 0; a < na; ++a) {
      ct.values[g * na + a] = grp.compose(c.values[g], a);
    }
  }
  CocycleCheck ctc = validate_cocycle(ct);
  if (!ctc.ok()) {
    rep.stage = "cocycle-tilde";
    rep.detail = ctc.failures[0];
    return rep;
  }

  Groupoid lhs = skew_product(ct);

  ZsGroupoid rhs;
  try {
    rhs = build_zs_product(skew_matched_pair(c));
  } catch (const Error& err) {
    rep.stage = "zappa-szep";
    rep.detail = err.what();
    return rep;
  }

  // Phi((g,a),b) = ((g,b), (a, (g^-1 g, b c(g) a))). The two A-coordinates
  // swap sides: the skew coordinate b of the left-hand side becomes the
  // skew-product coordinate, and the semidirect coordinate a becomes the
  // acting group element.
  const Groupoid& gc = rhs.factors().vertical();
  const Groupoid& h = rhs.factors().horizontal();
  std::vector<Elem> phi(lhs.size(), kNoElem);
  for (Elem g = 0; g < dom.size(); ++g) {
    for (Elem a = 0; a < na; ++a) {
      for (Elem bb = 0; bb < na; ++bb) {
        Elem gc_elem = gc.element(pair_label(dom.label(g), grp.label(bb)));
        Elem lhs_elem = lhs.element(
            pair_label(pair_label(dom.label(g), grp.label(a)), grp.label(bb)));
        Elem twist = grp.compose(grp.compose(bb, c.values[g]), a);
        Elem h_unit_label_elem = gc.element(
            pair_label(dom.label(dom.source(g)), grp.label(twist)));
        Elem h_elem = h.element(
            pair_label(grp.label(a), gc.label(h_unit_label_elem)));
        if (lhs_elem == kNoElem || gc_elem == kNoElem || h_elem == kNoElem) {
          rep.stage = "map";
          rep.detail = "image element missing";
          return rep;
        }
        phi[lhs_elem] = rhs.pair_elem(gc_elem, h_elem);
        if (phi[lhs_elem] == kNoElem) {
          rep.stage = "map";
          rep.detail = "image pair not in the fibre product";
          return rep;
        }
      }
    }
  }
  if (!is_isomorphism(lhs, rhs.product(), phi)) {
    rep.stage = "isomorphism";
    rep.detail = "the explicit map is not a groupoid isomorphism";
    return rep;
  }
  rep.ok = true;
  rep.elements = lhs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// *-commuting endomorphisms

namespace {

void require_endo(const EndoPair& p) {
  const int n = static_cast<int>(p.carrier.size());
  if (p.s_map.size() != static_cast<size_t>(n) || p.t_map.size() != static_cast<size_t>(n)) {
    throw StructuralError("endomorphism maps must be total on the carrier");
  }
  for (const auto* m : {&p.s_map, &p.t_map}) {
    std::vector<char> hit(n, 0);
    for (int v : *m) {
      if (v < 0 || v >= n) throw StructuralError("endomorphism maps outside the carrier");
      hit[v] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw PreconditionError("endomorphisms must be surjective");
    }
  }
}

int iterate(const std::vector<int>& m, int x, int times) {
  for (int i = 0; i < times; ++i) x = m[x];
  return x;
}

// theta_{(a,b)} = S^a T^b (the maps commute).
int theta(const EndoPair& p, int a, int b, int x) {
  return iterate(p.s_map, iterate(p.t_map, x, b), a);
}

}  // namespace

StarCommuteReport star_commuting_check(const EndoPair& p) {
  require_endo(p);
  StarCommuteReport rep;
  const int n = static_cast<int>(p.carrier.size());
  rep.commute = true;
  for (int x = 0; x < n; ++x) {
    if (p.s_map[p.t_map[x]] != p.t_map[p.s_map[x]]) rep.commute = false;
  }
  rep.star_commute = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.t_map[x] != p.s_map[y]) continue;
      int count = 0;
      for (int z = 0; z < n; ++z) {
        if (p.s_map[z] == x && p.t_map[z] == y) ++count;
      }
      if (count != 1) {
        rep.star_commute = false;
        rep.witnesses.emplace_back(x, y, count);
      }
    }
  }
  return rep;
}

WindowedDr dr_window(const EndoPair& p, int lag_bound) {
  require_endo(p);
  if (lag_bound < 0) throw PreconditionError("lag bound must be nonnegative");
  WindowedDr w;
  w.lag_bound = lag_bound;
  const int n = static_cast<int>(p.carrier.size());
  for (int k1 = -lag_bound; k1 <= lag_bound; ++k1) {
    for (int k2 = -lag_bound; k2 <= lag_bound; ++k2) {
      const int m1 = std::max(k1, 0), n1 = std::max(-k1, 0);
      const int m2 = std::max(k2, 0), n2 = std::max(-k2, 0);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (theta(p, m1, m2, x) == theta(p, n1, n2, y)) {
            w.elems.push_back({x, k1, k2, y});
          }
        }
      }
    }
  }
  return w;
}

std::vector<Dr1Elem> dr_window_1d(const std::vector<int>& map, int lag_bound) {
  const int n = static_cast<int>(map.size());
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (v < 0 || v >= n) throw StructuralError("map outside the carrier");
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw PreconditionError("map must be surjective");
  }
  std::vector<Dr1Elem> out;
  for (int k = -lag_bound; k <= lag_bound; ++k) {
    const int m = std::max(k, 0), l = std::max(-k, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (iterate(map, x, m) == iterate(map, y, l)) out.push_back({x, k, y});
      }
    }
  }
  return out;
}

std::optional<DrElem> compose_windowed(const EndoPair& p, int lag_bound,
                                       const DrElem& a, const DrElem& b) {
  if (a.y != b.x) return std::nullopt;
  int k1 = a.k1 + b.k1, k2 = a.k2 + b.k2;
  if (std::abs(k1) > lag_bound || std::abs(k2) > lag_bound) return std::nullopt;
  (void)p;
  return DrElem{a.x, k1, k2, b.y};
}

DrDecompositionReport dr_zs_decomposition_check(const EndoPair& p, int lag_bound) {
  StarCommuteReport sc = star_commuting_check(p);
  if (!sc.ok()) {
    throw PreconditionError("decomposition check requires a *-commuting pair");
  }
  WindowedDr w = dr_window(p, lag_bound);
  DrDecompositionReport rep;
  rep.total = static_cast<int>(w.elems.size());
  const int n = static_cast<int>(p.carrier.size());
  for (const DrElem& el : w.elems) {
    const int m1 = std::max(el.k1, 0), n1 = std::max(-el.k1, 0);
    const int m2 = std::max(el.k2, 0), n2 = std::max(-el.k2, 0);
    // Unique z with S^{n1} z = S^{m1} x and T^{m2} z = T^{n2} y.
    int count = 0, z_found = -1;
    for (int z = 0; z < n; ++z) {
      if (iterate(p.s_map, z, n1) == iterate(p.s_map, el.x, m1) &&
          iterate(p.t_map, z, m2) == iterate(p.t_map, el.y, n2)) {
        ++count;
        z_found = z;
      }
    }
    if (count != 1) {
      rep.failures.emplace_back(el, count);
      continue;
    }
    DrElem f1{el.x, el.k1, 0, z_found};
    DrElem f2{z_found, 0, el.k2, el.y};
    bool f1_ok = theta(p, std::max(el.k1, 0), 0, f1.x) == theta(p, std::max(-el.k1, 0), 0, f1.y);
    bool f2_ok = theta(p, 0, std::max(el.k2, 0), f2.x) == theta(p, 0, std::max(-el.k2, 0), f2.y);
    auto recomposed = compose_windowed(p, lag_bound, f1, f2);
    if (f1_ok && f2_ok && recomposed && *recomposed == el) {
      ++rep.decomposed;
    } else {
      rep.failures.emplace_back(el, count);
    }
  }
  // Closure is not claimed for the window; count escapes for the record.
  for (const DrElem& a : w.elems) {
    for (const DrElem& b : w.elems) {
      if (a.y != b.x) continue;
      if (std::abs(a.k1 + b.k1) > lag_bound || std::abs(a.k2 + b.k2) > lag_bound) {
        ++rep.skipped_products;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Finite 2-graphs

namespace {

struct EdgeIndex {
  std::map<std::string, const TwoGraphEdge*> blue, red;
};

EdgeIndex index_edges(const TwoGraph& tg) {
  EdgeIndex ix;
  for (const auto& e : tg.blue) ix.blue.emplace(e.name, &e);
  for (const auto& e : tg.red) ix.red.emplace(e.name, &e);
  return ix;
}

}  // namespace

TwoGraphReport validate_two_graph(const TwoGraph& tg) {
  TwoGraphReport rep;
  std::set<std::string> verts(tg.vertices.begin(), tg.vertices.end());
  if (verts.size() != tg.vertices.size()) {
    rep.errors.push_back("duplicate vertex labels");
  }
  std::set<std::string> names;
  for (const auto* edges : {&tg.blue, &tg.red}) {
    for (const auto& e : *edges) {
      if (e.name.empty() || !names.insert(e.name).second) {
        rep.errors.push_back("duplicate or empty edge name: " + e.name);
      }
      if (!verts.count(e.range) || !verts.count(e.source)) {
        rep.errors.push_back("edge " + e.name + " references unknown vertex");
      }
    }
  }
  if (!rep.errors.empty()) return rep;

  EdgeIndex ix = index_edges(tg);
  // Keys (f, e) must enumerate the composable blue-red paths exactly once,
  // and targets (e2, f2) the composable red-blue paths.
  std::set<std::pair<std::string, std::string>> keys, targets;
  for (const auto& sq : tg.squares) {
    const auto& [f, e, e2, f2] = sq;
    auto fb = ix.blue.find(f), f2b = ix.blue.find(f2);
    auto er = ix.red.find(e), e2r = ix.red.find(e2);
    if (fb == ix.blue.end() || f2b == ix.blue.end() || er == ix.red.end() ||
        e2r == ix.red.end()) {
      rep.errors.push_back("square {" + f + "," + e + "," + e2 + "," + f2 +
                           "} references a missing edge");
      continue;
    }
    if (fb->second->source != er->second->range) {
      rep.errors.push_back("square key (" + f + ", " + e + ") is not composable");
    }
    if (e2r->second->source != f2b->second->range) {
      rep.errors.push_back("square target (" + e2 + ", " + f2 + ") is not composable");
    }
    if (e2r->second->range != fb->second->range) {
      rep.errors.push_back("square {" + f + "," + e + "," + e2 + "," + f2 +
                           "} does not preserve the range");
    }
    if (f2b->second->source != er->second->source) {
      rep.errors.push_back("square {" + f + "," + e + "," + e2 + "," + f2 +
                           "} does not preserve the source");
    }
    if (!keys.emplace(f, e).second) {
      rep.errors.push_back("square key (" + f + ", " + e + ") appears twice");
    }
    if (!targets.emplace(e2, f2).second) {
      rep.errors.push_back("square target (" + e2 + ", " + f2 + ") appears twice");
    }
  }
  for (const auto& f : tg.blue) {
    for (const auto& e : tg.red) {
      if (f.source == e.range && !keys.count({f.name, e.name})) {
        rep.errors.push_back("composable pair (" + f.name + ", " + e.name +
                             ") has no square");
      }
    }
  }
  size_t red_blue = 0;
  for (const auto& e : tg.red) {
    for (const auto& f : tg.blue) {
      if (e.source == f.range) ++red_blue;
    }
  }
  if (rep.errors.empty() && targets.size() != red_blue) {
    rep.errors.push_back("squares are not onto the red-blue composable pairs");
  }

  rep.no_sources = true;
  rep.no_sinks = true;
  for (const auto& v : tg.vertices) {
    auto has = [&](const std::vector<TwoGraphEdge>& edges, bool by_range) {
      for (const auto& e : edges) {
        if ((by_range ? e.range : e.source) == v) return true;
      }
      return false;
    };
    if (!has(tg.blue, true) || !has(tg.red, true)) rep.no_sources = false;
    if (!has(tg.blue, false) || !has(tg.red, false)) rep.no_sinks = false;
  }
  return rep;
}

CoalignReport coaligned_check(const TwoGraph& tg) {
  if (!validate_two_graph(tg).ok()) {
    throw PreconditionError("coalignment check requires a valid 2-graph");
  }
  // squares as a map (f, e) -> (e2, f2)
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> sq;
  for (const auto& s : tg.squares) {
    sq[{s[0], s[1]}] = {s[2], s[3]};
  }
  EdgeIndex ix = index_edges(tg);
  CoalignReport rep;
  rep.coaligned = true;
  for (const auto& e1 : tg.blue) {
    for (const auto& e2 : tg.red) {
      if (e1.source != e2.source) continue;
      ++rep.pairs_checked;
      // Completions: f1 blue with f1 e2 = f2 e1 for some red f2, i.e. the
      // square of (f1, e2) has second component e1.
      int count = 0;
      for (const auto& f1 : tg.blue) {
        if (f1.source != e2.range) continue;
        auto it = sq.find({f1.name, e2.name});
        if (it != sq.end() && it->second.second == e1.name) ++count;
      }
      if (count != 1) {
        rep.coaligned = false;
        rep.witnesses.emplace_back(e1.name, e2.name, count);
      }
    }
  }
  return rep;
}

std::pair<DirectedGraph, DirectedGraph> blue_red_graphs(const TwoGraph& tg) {
  DirectedGraph blue{tg.vertices, tg.blue};
  DirectedGraph red{tg.vertices, tg.red};
  return {std::move(blue), std::move(red)};
}

}  // namespace gpd
