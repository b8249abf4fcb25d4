#pragma once

#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// A slice (bisection) is a subset on which range and source are both
// injective. Every subset of a finite discrete groupoid is open and
// precompact, so this is the whole condition.
bool is_slice(const Groupoid& g, const std::vector<Elem>& subset);

// All slices maximal under inclusion, each sorted ascending, the list in
// lexicographic order. Throws SizeGuardError above max_size elements.
std::vector<std::vector<Elem>> maximal_slices(const Groupoid& g,
                                              int max_size = kDefaultSizeGuard);

}  // namespace gpd
