#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gpd/algebra.hpp"
#include "gpd/zs_product.hpp"

namespace gpd {

// The embeddings of the factor algebras into the product algebra:
//   i(xi)(g,h)  = xi(g)  when h = t(g), 0 otherwise
//   j(eta)(g,h) = eta(h) when g = l(h), 0 otherwise.
GroupoidFunction embed_i(const ZsGroupoid& zs, const GroupoidFunction& xi);
GroupoidFunction embed_j(const ZsGroupoid& zs, const GroupoidFunction& eta);

struct HomReport {
  bool i_ok = false;
  bool j_ok = false;
  int trials = 0;
  double max_error = 0.0;
  std::string first_failure;

  bool ok() const { return i_ok && j_ok; }
};

// Checks multiplicativity and *-preservation of both embeddings:
// exhaustively on all point-mass pairs, then on `trials` random complex
// pairs within tolerance. Deterministic in the seed.
HomReport check_embeddings_are_homomorphisms(const ZsGroupoid& zs, int trials = 100,
                                             Tolerance tol = {},
                                             std::uint64_t seed = 0x5eed);

struct DensityReport {
  int span_rank = 0;
  int target_dim = 0;
  double threshold = 0.0;  // singular value cutoff used

  bool dense() const { return span_rank == target_dim; }
};

// Rank of the span of {i(delta_g) * j(delta_h)} inside the product algebra.
// In finite dimension density is exactly spanning. The default singular
// value cutoff is max_dim * eps * sigma_max; rank_tol overrides it as a
// relative cutoff.
DensityReport blend_density(const ZsGroupoid& zs,
                            std::optional<double> rank_tol = std::nullopt);

struct EquivalenceReport {
  int ab_rank = 0;
  int ba_rank = 0;
  int joint_rank = 0;     // rank of the two product families stacked
  bool spans_equal = false;
  bool ab_convolution_closed = false;
  bool ab_involution_closed = false;

  bool ok() const {
    return spans_equal && ab_convolution_closed && ab_involution_closed;
  }
};

// span{a*b} = span{b*a} as subspaces, and span{a*b} closed under
// convolution and involution: the finite-scale form of the equivalent
// characterisations of a blend.
EquivalenceReport check_blend_equivalences(const ZsGroupoid& zs,
                                           std::optional<double> rank_tol = std::nullopt);

struct BlendWitness {
  int span_rank = 0;
  int target_dim = 0;
  bool i_hom_ok = false;
  bool j_hom_ok = false;
  bool commuting_spans_ok = false;

  bool dense() const { return span_rank == target_dim; }
  bool ok() const { return dense() && i_hom_ok && j_hom_ok && commuting_spans_ok; }
};

// Runs the density, homomorphism and span-equivalence checks in one go.
BlendWitness blend_witness(const ZsGroupoid& zs, int trials = 100,
                           Tolerance tol = {},
                           std::optional<double> rank_tol = std::nullopt);

}  // namespace gpd
