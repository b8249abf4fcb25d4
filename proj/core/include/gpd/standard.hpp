#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"
#include "gpd/matched_pair.hpp"

namespace gpd {

// Stock groupoids used throughout the tests, the CLI fixtures and the
// benchmarks. Labels avoid bare commas and parentheses so that nested
// product labels "(x,y)" stay unambiguous.

// Cyclic group of order n with labels "0".."n-1" (or the given ones).
Groupoid cyclic_group(int n);
Groupoid cyclic_group(int n, std::vector<std::string> labels);

// Units only: every element is its own unit.
Groupoid unit_groupoid(std::vector<std::string> labels);

// Pair groupoid on n points: elements (i,j), (i,j).(j,k) = (i,k).
Groupoid pair_groupoid(int n);

// Symmetric group on three letters; labels e, r, rr, s, rs, rrs where
// r = (1 2 3) and s = (1 2). A3 = {e, r, rr}.
Groupoid symmetric_s3();

Groupoid klein_four();

// A random disjoint union of (pair groupoid on p points) x (finite group)
// blocks. Every finite groupoid is of this shape, so the generator covers
// the whole class up to isomorphism. Deterministic in the seed.
Groupoid random_groupoid(std::uint64_t seed, int max_elements = 40);

// The matched pair with trivial action h.g = g and trivial restriction
// h|_g = h over a single shared unit. Both factors must be groups; the
// product is the direct product.
MatchedPair direct_product_pair(const Groupoid& g, const Groupoid& h);

// "(a,b)" with the convention above.
std::string pair_label(const std::string& a, const std::string& b);

}  // namespace gpd
