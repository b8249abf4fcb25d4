#include "gpd/matched_pair.hpp"

#include <algorithm>

namespace gpd {

MatchedPair::MatchedPair(Groupoid vertical, Groupoid horizontal,
                         std::vector<std::pair<Elem, Elem>> unit_map,
                         std::vector<std::tuple<Elem, Elem, Elem>> action,
                         std::vector<std::tuple<Elem, Elem, Elem>> restriction)
    : g_(std::move(vertical)), h_(std::move(horizontal)) {
  g_to_h_.assign(g_.size(), kNoElem);
  h_to_g_.assign(h_.size(), kNoElem);
  for (auto [gu, hu] : unit_map) {
    if (gu < 0 || gu >= g_.size() || hu < 0 || hu >= h_.size()) {
      throw StructuralError("unit_map references unknown element id");
    }
    if (g_to_h_[gu] != kNoElem || h_to_g_[hu] != kNoElem) {
      throw StructuralError("unit_map maps a unit twice: " + g_.label(gu) +
                            " -> " + h_.label(hu));
    }
    g_to_h_[gu] = hu;
    h_to_g_[hu] = gu;
  }
  action_.assign(static_cast<size_t>(h_.size()) * g_.size(), kNoElem);
  restriction_.assign(action_.size(), kNoElem);
  auto fill = [&](std::vector<Elem>& table,
                  const std::vector<std::tuple<Elem, Elem, Elem>>& entries,
                  const Groupoid& target, const char* what) {
    for (auto [h, g, v] : entries) {
      if (h < 0 || h >= h_.size() || g < 0 || g >= g_.size() || v < 0 ||
          v >= target.size()) {
        throw StructuralError(std::string(what) + " table references unknown id");
      }
      Elem& slot = table[idx(h, g)];
      if (slot != kNoElem && slot != v) {
        throw StructuralError(std::string(what) + " table has conflicting entries at (" +
                              h_.label(h) + ", " + g_.label(g) + ")");
      }
      slot = v;
    }
  };
  fill(action_, action, g_, "action");
  fill(restriction_, restriction, h_, "restriction");
}

bool MatchedPair::in_domain(Elem h, Elem g) const {
  Elem rh = h_.source(h);  // r = source of a horizontal arrow
  Elem bg = g_.range(g);   // b = range of a vertical arrow
  if (rh == kNoElem || bg == kNoElem) return false;
  return g_to_h_[bg] == rh;
}

const char* axiom_name(ZsAxiom a) {
  static const char* names[] = {"ZS1", "ZS2", "ZS3", "ZS4", "ZS5",
                                "ZS6", "ZS7", "ZS8", "ZS9"};
  return names[static_cast<int>(a)];
}

namespace {

// Evaluation context: every table lookup is funnelled through here so an
// out-of-domain access turns into a recorded domain error for the axiom
// under evaluation instead of an axiom violation.
class ZsChecker {
 public:
  ZsChecker(const MatchedPair& mp, ZsVerifyReport& rep, int cap)
      : mp_(mp), g_(mp.vertical()), h_(mp.horizontal()), rep_(rep), cap_(cap) {}

  bool bad_ = false;  // set when the current evaluation hit a domain error

  Elem act(ZsAxiom axiom, Elem h, Elem g) {
    Elem v = mp_.action(h, g);
    if (v == kNoElem) domain_error(axiom, "action undefined at (" + h_.label(h) +
                                              ", " + g_.label(g) + ")");
    return v;
  }

  Elem res(ZsAxiom axiom, Elem h, Elem g) {
    Elem v = mp_.restriction(h, g);
    if (v == kNoElem) domain_error(axiom, "restriction undefined at (" +
                                              h_.label(h) + ", " + g_.label(g) + ")");
    return v;
  }

  Elem gmul(ZsAxiom axiom, Elem x, Elem y) {
    if (x == kNoElem || y == kNoElem) return kNoElem;
    Elem v = g_.compose(x, y);
    if (v == kNoElem) domain_error(axiom, "vertical product undefined at (" +
                                              g_.label(x) + ", " + g_.label(y) + ")");
    return v;
  }

  Elem hmul(ZsAxiom axiom, Elem x, Elem y) {
    if (x == kNoElem || y == kNoElem) return kNoElem;
    Elem v = h_.compose(x, y);
    if (v == kNoElem) domain_error(axiom, "horizontal product undefined at (" +
                                              h_.label(x) + ", " + h_.label(y) + ")");
    return v;
  }

  void compare(ZsAxiom axiom, Elem lhs, Elem rhs, const Groupoid& side,
               std::string tuple) {
    if (bad_) {
      bad_ = false;
      return;  // already recorded as a domain error
    }
    if (lhs == rhs) return;
    mark(axiom);
    if (static_cast<int>(rep_.violations.size()) >= cap_) {
      rep_.truncated = true;
      return;
    }
    rep_.violations.push_back({axiom, std::move(tuple),
                               lhs == kNoElem ? "undefined" : side.label(lhs),
                               rhs == kNoElem ? "undefined" : side.label(rhs)});
  }

  void mark(ZsAxiom axiom) { rep_.axiom_ok[static_cast<int>(axiom)] = false; }

 private:
  void domain_error(ZsAxiom axiom, std::string msg) {
    bad_ = true;
    mark(axiom);
    if (rep_.domain_errors.size() < 100) {
      rep_.domain_errors.push_back(std::string(axiom_name(axiom)) + ": " +
                                   std::move(msg));
    } else {
      rep_.truncated = true;
    }
  }

  const MatchedPair& mp_;
  const Groupoid& g_;
  const Groupoid& h_;
  ZsVerifyReport& rep_;
  int cap_;
};

std::string tup(std::initializer_list<std::string> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ", ";
    out += p;
    first = false;
  }
  return out + ")";
}

}  // namespace

ZsVerifyReport verify_matched_pair(const MatchedPair& mp, int max_violations) {
  ZsVerifyReport rep;
  const Groupoid& g = mp.vertical();
  const Groupoid& h = mp.horizontal();

  if (!validate(g).ok()) {
    rep.precondition_failures.push_back("vertical factor fails groupoid validation");
  }
  if (!validate(h).ok()) {
    rep.precondition_failures.push_back("horizontal factor fails groupoid validation");
  }
  if (!rep.precondition_failures.empty()) return rep;

  // Unit identification must be a bijection between the unit sets.
  for (Elem u : g.units()) {
    Elem hu = mp.to_h_unit(u);
    if (hu == kNoElem) {
      rep.precondition_failures.push_back("g-unit " + g.label(u) + " not mapped");
    } else if (!h.is_unit(hu)) {
      rep.precondition_failures.push_back("unit_map sends " + g.label(u) +
                                          " to non-unit " + h.label(hu));
    }
  }
  for (Elem u : h.units()) {
    if (mp.to_g_unit(u) == kNoElem) {
      rep.precondition_failures.push_back("h-unit " + h.label(u) + " not mapped");
    }
  }
  for (Elem x = 0; x < g.size(); ++x) {
    if (mp.to_h_unit(x) != kNoElem && !g.is_unit(x)) {
      rep.precondition_failures.push_back("unit_map keyed on non-unit " + g.label(x));
    }
  }
  for (Elem x = 0; x < h.size(); ++x) {
    if (mp.to_g_unit(x) != kNoElem && !h.is_unit(x)) {
      rep.precondition_failures.push_back("unit_map targets non-unit " + h.label(x));
    }
  }
  if (!rep.precondition_failures.empty()) return rep;

  // Domain correctness: tables defined exactly on the fibre product.
  for (Elem hh = 0; hh < h.size(); ++hh) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      bool dom = mp.in_domain(hh, gg);
      bool has_a = mp.action(hh, gg) != kNoElem;
      bool has_r = mp.restriction(hh, gg) != kNoElem;
      if (dom && (!has_a || !has_r)) {
        rep.domain_errors.push_back("fibre pair (" + h.label(hh) + ", " +
                                    g.label(gg) + ") missing " +
                                    (has_a ? "restriction" : "action"));
      } else if (!dom && (has_a || has_r)) {
        rep.domain_errors.push_back("(" + h.label(hh) + ", " + g.label(gg) +
                                    ") defined off the fibre product");
      }
    }
  }
  if (!rep.domain_errors.empty()) return rep;

  ZsChecker c(mp, rep, max_violations);
  const auto& gu_of = [&](Elem hu) { return mp.to_g_unit(hu); };
  const auto& hu_of = [&](Elem gu) { return mp.to_h_unit(gu); };

  // Composable pairs in each factor.
  std::vector<std::pair<Elem, Elem>> hcomp, gcomp;
  for (Elem x = 0; x < h.size(); ++x)
    for (Elem y = 0; y < h.size(); ++y)
      if (h.composable(x, y)) hcomp.emplace_back(x, y);
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (g.composable(x, y)) gcomp.emplace_back(x, y);

  // ZS1: (h1 h2).g = h1.(h2.g); ZS4: (h1 h2)|_g = (h1|_{h2.g})(h2|_g).
  for (auto [h1, h2] : hcomp) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      if (!mp.in_domain(h2, gg)) continue;
      Elem h12 = h.compose(h1, h2);
      {
        Elem lhs = c.act(ZsAxiom::ZS1, h12, gg);
        Elem h2g = c.act(ZsAxiom::ZS1, h2, gg);
        Elem rhs = h2g == kNoElem ? kNoElem : c.act(ZsAxiom::ZS1, h1, h2g);
        c.compare(ZsAxiom::ZS1, lhs, rhs, g,
                  tup({h.label(h1), h.label(h2), g.label(gg)}));
      }
      {
        Elem lhs = c.res(ZsAxiom::ZS4, h12, gg);
        Elem h2g = c.act(ZsAxiom::ZS4, h2, gg);
        Elem left = h2g == kNoElem ? kNoElem : c.res(ZsAxiom::ZS4, h1, h2g);
        Elem right = c.res(ZsAxiom::ZS4, h2, gg);
        Elem rhs = c.hmul(ZsAxiom::ZS4, left, right);
        c.compare(ZsAxiom::ZS4, lhs, rhs, h,
                  tup({h.label(h1), h.label(h2), g.label(gg)}));
      }
    }
  }

  // ZS2: h.(g1 g2) = (h.g1)(h|_{g1}.g2); ZS3: h|_{g1 g2} = (h|_{g1})|_{g2}.
  for (auto [g1, g2] : gcomp) {
    for (Elem hh = 0; hh < h.size(); ++hh) {
      if (!mp.in_domain(hh, g1)) continue;
      Elem g12 = g.compose(g1, g2);
      {
        Elem lhs = c.act(ZsAxiom::ZS2, hh, g12);
        Elem hg1 = c.act(ZsAxiom::ZS2, hh, g1);
        Elem hr = c.res(ZsAxiom::ZS2, hh, g1);
        Elem hg2 = hr == kNoElem ? kNoElem : c.act(ZsAxiom::ZS2, hr, g2);
        Elem rhs = c.gmul(ZsAxiom::ZS2, hg1, hg2);
        c.compare(ZsAxiom::ZS2, lhs, rhs, g,
                  tup({h.label(hh), g.label(g1), g.label(g2)}));
      }
      {
        Elem lhs = c.res(ZsAxiom::ZS3, hh, g12);
        Elem hr = c.res(ZsAxiom::ZS3, hh, g1);
        Elem rhs = hr == kNoElem ? kNoElem : c.res(ZsAxiom::ZS3, hr, g2);
        c.compare(ZsAxiom::ZS3, lhs, rhs, h,
                  tup({h.label(hh), g.label(g1), g.label(g2)}));
      }
    }
  }

  // ZS5-ZS7 over the fibre product.
  for (Elem hh = 0; hh < h.size(); ++hh) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      if (!mp.in_domain(hh, gg)) continue;
      Elem hg = c.act(ZsAxiom::ZS5, hh, gg);
      if (hg != kNoElem) {
        Elem b_hg = g.range(hg);
        c.compare(ZsAxiom::ZS5, b_hg == kNoElem ? kNoElem : hu_of(b_hg),
                  h.range(hh), h, tup({h.label(hh), g.label(gg)}));
      } else {
        c.bad_ = false;
      }
      Elem hres = c.res(ZsAxiom::ZS6, hh, gg);
      if (hres != kNoElem) {
        Elem r_hres = h.source(hres);
        c.compare(ZsAxiom::ZS6, r_hres == kNoElem ? kNoElem : gu_of(r_hres),
                  g.source(gg), g, tup({h.label(hh), g.label(gg)}));
      } else {
        c.bad_ = false;
      }
      if (hg != kNoElem && hres != kNoElem) {
        Elem t_hg = g.source(hg);
        c.compare(ZsAxiom::ZS7, t_hg == kNoElem ? kNoElem : hu_of(t_hg),
                  h.range(hres), h, tup({h.label(hh), g.label(gg)}));
      }
    }
  }

  // ZS8: b(g).g = g, acting through the identified horizontal unit.
  for (Elem gg = 0; gg < g.size(); ++gg) {
    Elem hu = hu_of(g.range(gg));
    Elem lhs = c.act(ZsAxiom::ZS8, hu, gg);
    c.compare(ZsAxiom::ZS8, lhs, gg, g, tup({g.label(gg)}));
  }

  // ZS9: h|_{r(h)} = h, restricting along the identified vertical unit.
  for (Elem hh = 0; hh < h.size(); ++hh) {
    Elem gu = gu_of(h.source(hh));
    Elem lhs = c.res(ZsAxiom::ZS9, hh, gu);
    c.compare(ZsAxiom::ZS9, lhs, hh, h, tup({h.label(hh)}));
  }

  return rep;
}

DerivedIdentityReport check_derived_identities(const MatchedPair& mp) {
  if (!verify_matched_pair(mp).ok()) {
    throw PreconditionError("derived identities require a verified matched pair");
  }
  const Groupoid& g = mp.vertical();
  const Groupoid& h = mp.horizontal();
  DerivedIdentityReport rep;
  auto fail = [&](int which, std::string msg) {
    rep.identity_ok[which] = false;
    rep.failures.push_back(std::move(msg));
  };

  // (1) h . r(h) = l(h)
  for (Elem hh = 0; hh < h.size(); ++hh) {
    Elem gu = mp.to_g_unit(h.source(hh));
    if (mp.action(hh, gu) != mp.to_g_unit(h.range(hh))) {
      fail(0, "h.r(h) != l(h) at h = " + h.label(hh));
    }
  }
  // (2) b(g)|_g = t(g)
  for (Elem gg = 0; gg < g.size(); ++gg) {
    Elem hu = mp.to_h_unit(g.range(gg));
    if (mp.restriction(hu, gg) != mp.to_h_unit(g.source(gg))) {
      fail(1, "b(g)|_g != t(g) at g = " + g.label(gg));
    }
  }
  // (3) (h.g)^-1 = h|_g . g^-1 and (4) (h|_g)^-1 = h^-1|_{h.g}
  for (Elem hh = 0; hh < h.size(); ++hh) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      if (!mp.in_domain(hh, gg)) continue;
      Elem hg = mp.action(hh, gg);
      Elem hr = mp.restriction(hh, gg);
      if (g.inverse(hg) != mp.action(hr, g.inverse(gg))) {
        fail(2, "(h.g)^-1 != h|_g.g^-1 at (" + h.label(hh) + ", " + g.label(gg) + ")");
      }
      if (h.inverse(hr) != mp.restriction(h.inverse(hh), hg)) {
        fail(3, "(h|_g)^-1 != h^-1|_{h.g} at (" + h.label(hh) + ", " + g.label(gg) + ")");
      }
    }
  }
  return rep;
}

}  // namespace gpd
