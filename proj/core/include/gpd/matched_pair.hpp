#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// Two groupoids over a common unit set together with action and restriction
// maps on the fibre product {(h, g) : r(h) = b(g)}. The vertical factor's
// range/source are written b/t and the horizontal factor's l/r, matching the
// arrow pictures the axioms come from. Tables are explicit finite maps.
class MatchedPair {
 public:
  MatchedPair(Groupoid vertical, Groupoid horizontal,
              std::vector<std::pair<Elem, Elem>> unit_map,
              std::vector<std::tuple<Elem, Elem, Elem>> action,
              std::vector<std::tuple<Elem, Elem, Elem>> restriction);

  const Groupoid& vertical() const { return g_; }
  const Groupoid& horizontal() const { return h_; }

  // Unit identification, kNoElem when the argument is not a mapped unit.
  Elem to_h_unit(Elem g_unit) const { return g_to_h_[g_unit]; }
  Elem to_g_unit(Elem h_unit) const { return h_to_g_[h_unit]; }

  // h . g and h|_g; kNoElem where the tables are undefined.
  Elem action(Elem h, Elem g) const { return action_[idx(h, g)]; }
  Elem restriction(Elem h, Elem g) const { return restriction_[idx(h, g)]; }

  // Whether (h, g) lies on the fibre product r(h) = b(g). Meaningful only
  // when both factors validate.
  bool in_domain(Elem h, Elem g) const;

 private:
  size_t idx(Elem h, Elem g) const {
    return static_cast<size_t>(h) * g_.size() + g;
  }

  Groupoid g_, h_;
  std::vector<Elem> g_to_h_, h_to_g_;
  std::vector<Elem> action_, restriction_;
};

enum class ZsAxiom { ZS1, ZS2, ZS3, ZS4, ZS5, ZS6, ZS7, ZS8, ZS9 };

const char* axiom_name(ZsAxiom a);

struct ZsViolation {
  ZsAxiom axiom;
  std::string tuple;  // the offending elements, by label
  std::string lhs;    // both evaluated sides, for debugging
  std::string rhs;
};

struct ZsVerifyReport {
  // Precondition problems: factor validation, unit bijection.
  std::vector<std::string> precondition_failures;
  // Action/restriction defined off the fibre product or missing on it, or an
  // out-of-domain lookup hit while evaluating an axiom.
  std::vector<std::string> domain_errors;
  std::vector<ZsViolation> violations;
  std::array<bool, 9> axiom_ok{true, true, true, true, true, true, true, true, true};
  bool truncated = false;

  bool ok() const {
    return precondition_failures.empty() && domain_errors.empty() &&
           violations.empty();
  }
};

// Exhaustively checks (ZS1)-(ZS9) on their natural domains: ZS1/ZS4 over
// composable h1 h2 with r(h2) = b(g), ZS2/ZS3 over composable g1 g2 with
// r(h) = b(g1), ZS5-ZS7 over the fibre product, ZS8 over all g, ZS9 over
// all h. Out-of-domain lookups hit during evaluation are reported as domain
// errors, not axiom failures.
ZsVerifyReport verify_matched_pair(const MatchedPair& mp, int max_violations = 100);

struct DerivedIdentityReport {
  // The four identities: h.r(h) = l(h); b(g)|_g = t(g); (h.g)^-1 = h|_g.g^-1;
  // (h|_g)^-1 = h^-1|_{h.g}. They are theorems, so a failure means the
  // implementation or the input tables are broken.
  std::array<bool, 4> identity_ok{true, true, true, true};
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Requires verify_matched_pair(mp).ok(); throws PreconditionError otherwise.
DerivedIdentityReport check_derived_identities(const MatchedPair& mp);

}  // namespace gpd
