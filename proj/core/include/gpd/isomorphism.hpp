#pragma once

#include <optional>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// Searches for a bijection phi with phi(xy) = phi(x)phi(y) on all composable
// pairs; multiplicativity plus bijectivity forces preservation of units,
// inverses, range and source. Backtracking over unit-compatible assignments
// in element order, so the result is deterministic. Both groupoids must
// pass validate(). Throws SizeGuardError above max_size elements.
std::optional<std::vector<Elem>> find_isomorphism(const Groupoid& a,
                                                  const Groupoid& b,
                                                  int max_size = kDefaultSizeGuard);

// Checks that phi (a map from a-elements to b-elements) is a groupoid
// isomorphism. Used to double-check search results and claimed maps.
bool is_isomorphism(const Groupoid& a, const Groupoid& b,
                    const std::vector<Elem>& phi);

}  // namespace gpd
