#pragma once

#include <optional>
#include <vector>

#include "gpd/matched_pair.hpp"

namespace gpd {

// The product groupoid on {(g, h) : t(g) = l(h)} with
//   (g1,h1)(g2,h2) = (g1(h1.g2), h1|_{g2} h2)   and
//   (g,h)^-1 = (h^-1.g^-1, h^-1|_{g^-1}),
// keeping back references to the factors and the two embeddings.
class ZsGroupoid {
 public:
  const Groupoid& product() const { return product_; }
  const MatchedPair& factors() const { return pair_; }

  // Product element for the fibre pair (g, h); kNoElem when t(g) != l(h).
  Elem pair_elem(Elem g, Elem h) const {
    return elem_of_[static_cast<size_t>(g) * pair_.horizontal().size() + h];
  }
  Elem g_of(Elem p) const { return g_of_[p]; }
  Elem h_of(Elem p) const { return h_of_[p]; }

  // g -> (g, t(g)) and h -> (l(h), h).
  Elem embed_g(Elem g) const { return embed_g_[g]; }
  Elem embed_h(Elem h) const { return embed_h_[h]; }

 private:
  friend ZsGroupoid build_zs_product(const MatchedPair&);

  Groupoid product_;
  MatchedPair pair_{Groupoid{}, Groupoid{}, {}, {}, {}};
  std::vector<Elem> elem_of_, g_of_, h_of_, embed_g_, embed_h_;
};

// Refuses (PreconditionError) unless verify_matched_pair passes. The result
// is revalidated; by the structure theorem this cannot fail, so a failure
// throws logic_error.
ZsGroupoid build_zs_product(const MatchedPair& mp);

struct InternalDecomposition {
  MatchedPair pair;
  ZsGroupoid product;
  // Isomorphism product -> k, sending (g, h) to gh.
  std::vector<Elem> product_to_k;
};

struct InternalDecomposeResult {
  std::optional<InternalDecomposition> decomposition;
  // On failure: a k-element with != 1 factorizations, and the count seen.
  Elem witness = kNoElem;
  int factorizations = 0;

  bool ok() const { return decomposition.has_value(); }
};

// Checks that every element of k factors uniquely as g.h with g in gsub and
// h in hsub; on success extracts action and restriction by unique
// refactoring of the products hg and returns the matched pair together with
// the isomorphism. gsub/hsub must pass is_subgroupoid.
InternalDecomposeResult internal_decompose(const Groupoid& k,
                                           const std::vector<Elem>& gsub,
                                           const std::vector<Elem>& hsub);

struct ReverseFactorization {
  Elem h_embedded;  // (l(h'), h') in the product
  Elem g_embedded;  // (g', t(g')) in the product
  bool recomposes;  // h_embedded . g_embedded = the input element
  int candidates;   // all (h-embedded, g-embedded) pairs multiplying to it

  bool unique() const { return recomposes && candidates == 1; }
};

// The horizontal-then-vertical rewriting
//   (g,h) = (b(g), h|_{h^-1.g^-1}) (h^-1|_{g^-1}.g, r(h)),
// verified by recomposition, with uniqueness established by exhaustive
// search over candidate factorizations.
ReverseFactorization reverse_decomposition(const ZsGroupoid& zs, Elem p);

}  // namespace gpd
