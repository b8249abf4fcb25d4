#include "gpd/zs_product.hpp"

#include <algorithm>

#include "gpd/standard.hpp"

namespace gpd {

ZsGroupoid build_zs_product(const MatchedPair& mp) {
  ZsVerifyReport ver = verify_matched_pair(mp);
  if (!ver.ok()) {
    std::string why = !ver.precondition_failures.empty() ? ver.precondition_failures[0]
                      : !ver.domain_errors.empty()       ? ver.domain_errors[0]
                      : std::string(axiom_name(ver.violations[0].axiom)) +
                            " fails at " + ver.violations[0].tuple;
    throw PreconditionError("matched pair fails verification: " + why);
  }

  const Groupoid& g = mp.vertical();
  const Groupoid& h = mp.horizontal();
  ZsGroupoid zs;
  zs.pair_ = mp;
  zs.elem_of_.assign(static_cast<size_t>(g.size()) * h.size(), kNoElem);

  GroupoidBuilder builder;
  for (Elem gg = 0; gg < g.size(); ++gg) {
    for (Elem hh = 0; hh < h.size(); ++hh) {
      if (mp.to_h_unit(g.source(gg)) != h.range(hh)) continue;  // t(g) = l(h)
      Elem p = builder.add_element(pair_label(g.label(gg), h.label(hh)));
      zs.elem_of_[static_cast<size_t>(gg) * h.size() + hh] = p;
      zs.g_of_.push_back(gg);
      zs.h_of_.push_back(hh);
    }
  }
  const int n = static_cast<int>(zs.g_of_.size());
  for (Elem p = 0; p < n; ++p) {
    Elem gg = zs.g_of_[p], hh = zs.h_of_[p];
    Elem gi = g.inverse(gg), hi = h.inverse(hh);
    Elem inv_g = mp.action(hi, gi);
    Elem inv_h = mp.restriction(hi, gi);
    builder.set_inverse(p, zs.pair_elem(inv_g, inv_h));
  }
  for (Elem p = 0; p < n; ++p) {
    Elem g1 = zs.g_of_[p], h1 = zs.h_of_[p];
    for (Elem q = 0; q < n; ++q) {
      Elem g2 = zs.g_of_[q], h2 = zs.h_of_[q];
      if (h.source(h1) != mp.to_h_unit(g.range(g2))) continue;  // r(h1) = b(g2)
      Elem left = g.compose(g1, mp.action(h1, g2));
      Elem right = h.compose(mp.restriction(h1, g2), h2);
      builder.set_compose(p, q, zs.pair_elem(left, right));
    }
  }
  zs.product_ = builder.build();

  // (ZS1-9) make this a groupoid; a validation failure here is a bug.
  if (!validate(zs.product_).ok()) {
    throw std::logic_error("Zappa-Szep product failed groupoid validation");
  }

  zs.embed_g_.assign(g.size(), kNoElem);
  for (Elem gg = 0; gg < g.size(); ++gg) {
    zs.embed_g_[gg] = zs.pair_elem(gg, mp.to_h_unit(g.source(gg)));
  }
  zs.embed_h_.assign(h.size(), kNoElem);
  for (Elem hh = 0; hh < h.size(); ++hh) {
    zs.embed_h_[hh] = zs.pair_elem(mp.to_g_unit(h.range(hh)), hh);
  }
  return zs;
}

InternalDecomposeResult internal_decompose(const Groupoid& k,
                                           const std::vector<Elem>& gsub,
                                           const std::vector<Elem>& hsub) {
  if (!validate(k).ok()) {
    throw PreconditionError("internal decomposition requires a valid groupoid");
  }
  if (!is_subgroupoid(k, gsub)) {
    throw PreconditionError("gsub is not a subgroupoid");
  }
  if (!is_subgroupoid(k, hsub)) {
    throw PreconditionError("hsub is not a subgroupoid");
  }

  InternalDecomposeResult result;

  // Factorizations x = g.h, indexed by x.
  std::vector<std::pair<Elem, Elem>> factor(k.size(), {kNoElem, kNoElem});
  std::vector<int> count(k.size(), 0);
  for (Elem gg : gsub) {
    for (Elem hh : hsub) {
      Elem x = k.compose(gg, hh);
      if (x == kNoElem) continue;
      ++count[x];
      factor[x] = {gg, hh};
    }
  }
  for (Elem x = 0; x < k.size(); ++x) {
    if (count[x] != 1) {
      result.witness = x;
      result.factorizations = count[x];
      return result;
    }
  }

  Groupoid gv = induced_subgroupoid(k, gsub);
  Groupoid hv = induced_subgroupoid(k, hsub);
  auto g_index = [&](Elem x) { return gv.element(k.label(x)); };
  auto h_index = [&](Elem x) { return hv.element(k.label(x)); };

  // Shared unit set: unique factorization forces K0 = G0 = H0.
  std::vector<std::pair<Elem, Elem>> unit_map;
  for (Elem u : k.units()) {
    Elem ug = g_index(u), uh = h_index(u);
    if (ug == kNoElem || uh == kNoElem) {
      result.witness = u;
      result.factorizations = 0;
      return result;
    }
    unit_map.emplace_back(ug, uh);
  }

  // Action and restriction by refactoring hg = (h.g)(h|_g).
  std::vector<std::tuple<Elem, Elem, Elem>> action, restriction;
  for (Elem hh : hsub) {
    for (Elem gg : gsub) {
      Elem prod = k.compose(hh, gg);
      if (prod == kNoElem) continue;
      auto [pg, ph] = factor[prod];
      action.emplace_back(h_index(hh), g_index(gg), g_index(pg));
      restriction.emplace_back(h_index(hh), g_index(gg), h_index(ph));
    }
  }

  MatchedPair mp(std::move(gv), std::move(hv), std::move(unit_map),
                 std::move(action), std::move(restriction));
  ZsGroupoid zs = build_zs_product(mp);  // throws if the tables fail (ZS1-9)

  std::vector<Elem> product_to_k(zs.product().size(), kNoElem);
  for (Elem p = 0; p < zs.product().size(); ++p) {
    Elem gg = k.element(mp.vertical().label(zs.g_of(p)));
    Elem hh = k.element(mp.horizontal().label(zs.h_of(p)));
    product_to_k[p] = k.compose(gg, hh);
  }

  result.decomposition =
      InternalDecomposition{std::move(mp), std::move(zs), std::move(product_to_k)};
  return result;
}

ReverseFactorization reverse_decomposition(const ZsGroupoid& zs, Elem p) {
  const MatchedPair& mp = zs.factors();
  const Groupoid& g = mp.vertical();
  const Groupoid& h = mp.horizontal();
  Elem gg = zs.g_of(p), hh = zs.h_of(p);
  Elem gi = g.inverse(gg), hi = h.inverse(hh);

  // h' = h|_{h^-1.g^-1} and g' = h^-1|_{g^-1}.g
  Elem h_prime = mp.restriction(hh, mp.action(hi, gi));
  Elem g_prime = mp.action(mp.restriction(hi, gi), gg);

  ReverseFactorization out;
  out.h_embedded = zs.embed_h(h_prime);
  out.g_embedded = zs.embed_g(g_prime);
  out.recomposes = zs.product().compose(out.h_embedded, out.g_embedded) == p;
  out.candidates = 0;
  for (Elem x = 0; x < h.size(); ++x) {
    for (Elem y = 0; y < g.size(); ++y) {
      if (zs.product().compose(zs.embed_h(x), zs.embed_g(y)) == p) ++out.candidates;
    }
  }
  return out;
}

}  // namespace gpd
