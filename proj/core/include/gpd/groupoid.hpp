#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gpd/types.hpp"

namespace gpd {

// A finite groupoid given by an explicit partial composition table and a
// total inversion map. Units, range and source are derived from the tables,
// never stored independently. Immutable after construction; build one with
// GroupoidBuilder.
class Groupoid {
 public:
  Groupoid() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // kNoElem if the label is unknown.
  Elem element(std::string_view label) const;

  Elem inverse(Elem x) const { return inverse_[x]; }

  // kNoElem when (x, y) is not a composable pair.
  Elem compose(Elem x, Elem y) const { return table_[x * size() + y]; }
  bool composable(Elem x, Elem y) const { return compose(x, y) != kNoElem; }

  // r(x) = x x^-1 and s(x) = x^-1 x, read off the tables. On a groupoid that
  // fails validation these may be kNoElem.
  Elem range(Elem x) const { return compose(x, inverse(x)); }
  Elem source(Elem x) const { return compose(inverse(x), x); }

  // The set {x x^-1}, in ascending element order.
  const std::vector<Elem>& units() const { return units_; }
  bool is_unit(Elem x) const { return is_unit_[x]; }

 private:
  friend class GroupoidBuilder;

  std::vector<std::string> labels_;
  std::map<std::string, Elem, std::less<>> index_;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;  // size*size, kNoElem where undefined
  std::vector<Elem> units_;
  std::vector<char> is_unit_;
};

class GroupoidBuilder {
 public:
  // Throws StructuralError on empty or duplicate labels.
  Elem add_element(std::string label);

  void set_inverse(Elem x, Elem inv);

  // Declares x . y = xy. Conflicting redefinition is an error.
  void set_compose(Elem x, Elem y, Elem xy);

  // Checks the inverse map is total and hands over the tables. The builder
  // is left empty. Axioms are deliberately not checked here; see validate().
  Groupoid build();

 private:
  void check_elem(Elem x, const char* what) const;

  Groupoid g_;
};

enum class GroupoidAxiom {
  kAssociativity,   // g(hk) = (gh)k with both sides defined
  kInvolution,      // (g^-1)^-1 = g
  kCancellation,    // (g, g^-1) composable; g^-1(gh) = h; (gh)h^-1 = g
  kComposability,   // (g, h) composable iff s(g) = r(h)
};

const char* axiom_name(GroupoidAxiom a);

struct GroupoidViolation {
  GroupoidAxiom axiom;
  std::vector<Elem> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<GroupoidViolation> violations;
  bool truncated = false;

  bool ok() const { return violations.empty(); }
};

// Exhaustively checks the three groupoid axioms plus the derived
// composability criterion. Reporting stops at max_violations.
ValidationReport validate(const Groupoid& g, int max_violations = 100);

// True iff sub is closed under inversion and composition.
// Throws StructuralError on out-of-range ids.
bool is_subgroupoid(const Groupoid& g, const std::vector<Elem>& sub);

// The groupoid structure restricted to a closed subset. Element order and
// labels follow sub.
Groupoid induced_subgroupoid(const Groupoid& g, const std::vector<Elem>& sub);

}  // namespace gpd
