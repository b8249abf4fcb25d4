#include "gpd/groupoid.hpp"

#include <algorithm>
#include <set>

namespace gpd {

Elem Groupoid::element(std::string_view label) const {
  auto it = index_.find(label);
  return it == index_.end() ? kNoElem : it->second;
}

Elem GroupoidBuilder::add_element(std::string label) {
  if (label.empty()) {
    throw StructuralError("element labels must be non-empty");
  }
  if (g_.index_.count(label) != 0) {
    throw StructuralError("duplicate element label: " + label);
  }
  Elem id = static_cast<Elem>(g_.labels_.size());
  g_.index_.emplace(label, id);
  g_.labels_.push_back(std::move(label));
  g_.inverse_.push_back(kNoElem);
  return id;
}

void GroupoidBuilder::check_elem(Elem x, const char* what) const {
  if (x < 0 || x >= static_cast<Elem>(g_.labels_.size())) {
    throw StructuralError(std::string(what) + " references unknown element id " +
                          std::to_string(x));
  }
}

void GroupoidBuilder::set_inverse(Elem x, Elem inv) {
  check_elem(x, "inverse");
  check_elem(inv, "inverse");
  g_.inverse_[x] = inv;
}

void GroupoidBuilder::set_compose(Elem x, Elem y, Elem xy) {
  check_elem(x, "compose");
  check_elem(y, "compose");
  check_elem(xy, "compose");
  const int n = static_cast<int>(g_.labels_.size());
  if (g_.table_.size() != static_cast<size_t>(n) * n) {
    // Table is sized on first use; adding elements after that is a misuse.
    if (!g_.table_.empty()) {
      throw StructuralError("all elements must be added before compose entries");
    }
    g_.table_.assign(static_cast<size_t>(n) * n, kNoElem);
  }
  Elem& slot = g_.table_[static_cast<size_t>(x) * n + y];
  if (slot != kNoElem && slot != xy) {
    throw StructuralError("conflicting compose entries for (" + g_.labels_[x] +
                          ", " + g_.labels_[y] + ")");
  }
  slot = xy;
}

Groupoid GroupoidBuilder::build() {
  const int n = static_cast<int>(g_.labels_.size());
  if (g_.table_.empty()) {
    g_.table_.assign(static_cast<size_t>(n) * n, kNoElem);
  }
  for (Elem x = 0; x < n; ++x) {
    if (g_.inverse_[x] == kNoElem) {
      throw StructuralError("inverse undefined for element " + g_.labels_[x]);
    }
  }
  std::set<Elem> units;
  for (Elem x = 0; x < n; ++x) {
    Elem r = g_.range(x);
    if (r != kNoElem) units.insert(r);
  }
  g_.units_.assign(units.begin(), units.end());
  g_.is_unit_.assign(n, 0);
  for (Elem u : g_.units_) g_.is_unit_[u] = 1;
  Groupoid out = std::move(g_);
  g_ = Groupoid{};
  return out;
}

const char* axiom_name(GroupoidAxiom a) {
  switch (a) {
    case GroupoidAxiom::kAssociativity: return "associativity";
    case GroupoidAxiom::kInvolution: return "involution";
    case GroupoidAxiom::kCancellation: return "cancellation";
    case GroupoidAxiom::kComposability: return "composability";
  }
  return "?";
}

namespace {

class ViolationSink {
 public:
  ViolationSink(ValidationReport& rep, int cap) : rep_(rep), cap_(cap) {}

  void add(GroupoidAxiom axiom, std::vector<Elem> witness, std::string detail) {
    if (static_cast<int>(rep_.violations.size()) >= cap_) {
      rep_.truncated = true;
      return;
    }
    rep_.violations.push_back({axiom, std::move(witness), std::move(detail)});
  }

 private:
  ValidationReport& rep_;
  int cap_;
};

}  // namespace

ValidationReport validate(const Groupoid& g, int max_violations) {
  ValidationReport rep;
  ViolationSink sink(rep, max_violations);
  const int n = g.size();

  // Axiom 2: (g^-1)^-1 = g.
  for (Elem x = 0; x < n; ++x) {
    if (g.inverse(g.inverse(x)) != x) {
      sink.add(GroupoidAxiom::kInvolution, {x},
               "(" + g.label(x) + "^-1)^-1 = " + g.label(g.inverse(g.inverse(x))));
    }
  }

  std::vector<std::vector<Elem>> right(n);  // right[x] = {y : x.y defined}
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (g.composable(x, y)) right[x].push_back(y);
    }
  }

  // Axiom 1: associativity with closure of the composable set.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : right[x]) {
      Elem xy = g.compose(x, y);
      for (Elem z : right[y]) {
        Elem yz = g.compose(y, z);
        Elem lhs = g.compose(xy, z);
        Elem rhs = g.compose(x, yz);
        if (lhs == kNoElem || rhs == kNoElem || lhs != rhs) {
          std::string detail =
              "(" + g.label(x) + "." + g.label(y) + ")." + g.label(z) + " = " +
              (lhs == kNoElem ? "undefined" : g.label(lhs)) + " vs " +
              g.label(x) + ".(" + g.label(y) + "." + g.label(z) + ") = " +
              (rhs == kNoElem ? "undefined" : g.label(rhs));
          sink.add(GroupoidAxiom::kAssociativity, {x, y, z}, std::move(detail));
        }
      }
    }
  }

  // Axiom 3: (g, g^-1) composable, and two-sided cancellation.
  for (Elem x = 0; x < n; ++x) {
    if (!g.composable(x, g.inverse(x))) {
      sink.add(GroupoidAxiom::kCancellation, {x},
               "(" + g.label(x) + ", " + g.label(g.inverse(x)) + ") not composable");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : right[x]) {
      Elem xy = g.compose(x, y);
      Elem lhs = g.compose(g.inverse(x), xy);
      if (lhs != y) {
        sink.add(GroupoidAxiom::kCancellation, {x, y},
                 g.label(x) + "^-1.(" + g.label(x) + "." + g.label(y) + ") = " +
                     (lhs == kNoElem ? "undefined" : g.label(lhs)) + ", expected " +
                     g.label(y));
      }
      Elem rhs = g.compose(xy, g.inverse(y));
      if (rhs != x) {
        sink.add(GroupoidAxiom::kCancellation, {x, y},
                 "(" + g.label(x) + "." + g.label(y) + ")." + g.label(y) + "^-1 = " +
                     (rhs == kNoElem ? "undefined" : g.label(rhs)) + ", expected " +
                     g.label(x));
      }
    }
  }

  // Derived criterion: (x, y) composable iff s(x) = r(y). Implied by the
  // axioms, but checked directly so table bugs get a pointed witness.
  for (Elem x = 0; x < n; ++x) {
    Elem sx = g.source(x);
    for (Elem y = 0; y < n; ++y) {
      bool defined = g.composable(x, y);
      bool expected = sx != kNoElem && sx == g.range(y);
      if (defined != expected) {
        sink.add(GroupoidAxiom::kComposability, {x, y},
                 "(" + g.label(x) + ", " + g.label(y) + ") " +
                     (defined ? "composable but s(x) != r(y)"
                              : "not composable but s(x) = r(y)"));
      }
    }
  }

  return rep;
}

bool is_subgroupoid(const Groupoid& g, const std::vector<Elem>& sub) {
  std::vector<char> in(g.size(), 0);
  for (Elem x : sub) {
    if (x < 0 || x >= g.size()) {
      throw StructuralError("subgroupoid test references unknown element id " +
                            std::to_string(x));
    }
    in[x] = 1;
  }
  for (Elem x : sub) {
    if (!in[g.inverse(x)]) return false;
    for (Elem y : sub) {
      Elem xy = g.compose(x, y);
      if (xy != kNoElem && !in[xy]) return false;
    }
  }
  return true;
}

Groupoid induced_subgroupoid(const Groupoid& g, const std::vector<Elem>& sub) {
  std::vector<Elem> to_sub(g.size(), kNoElem);
  GroupoidBuilder b;
  for (Elem x : sub) {
    if (x < 0 || x >= g.size()) {
      throw StructuralError("induced subgroupoid references unknown element id " +
                            std::to_string(x));
    }
    to_sub[x] = b.add_element(g.label(x));
  }
  for (Elem x : sub) {
    Elem ix = g.inverse(x);
    if (to_sub[ix] == kNoElem) {
      throw PreconditionError("subset not closed under inversion at " + g.label(x));
    }
    b.set_inverse(to_sub[x], to_sub[ix]);
  }
  for (Elem x : sub) {
    for (Elem y : sub) {
      Elem xy = g.compose(x, y);
      if (xy == kNoElem) continue;
      if (to_sub[xy] == kNoElem) {
        throw PreconditionError("subset not closed under composition at (" +
                                g.label(x) + ", " + g.label(y) + ")");
      }
      b.set_compose(to_sub[x], to_sub[y], to_sub[xy]);
    }
  }
  return b.build();
}

}  // namespace gpd
