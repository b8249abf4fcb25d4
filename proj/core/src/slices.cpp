#include "gpd/slices.hpp"

#include <algorithm>
#include <functional>

namespace gpd {

bool is_slice(const Groupoid& g, const std::vector<Elem>& subset) {
  std::vector<char> r_seen(g.size(), 0), s_seen(g.size(), 0);
  for (Elem x : subset) {
    if (x < 0 || x >= g.size()) {
      throw StructuralError("slice test references unknown element id " +
                            std::to_string(x));
    }
    Elem r = g.range(x), s = g.source(x);
    if (r == kNoElem || s == kNoElem) return false;
    if (r_seen[r] || s_seen[s]) return false;
    r_seen[r] = 1;
    s_seen[s] = 1;
  }
  return true;
}

std::vector<std::vector<Elem>> maximal_slices(const Groupoid& g, int max_size) {
  const int n = g.size();
  if (n > max_size) {
    throw SizeGuardError("slice enumeration too large: " + std::to_string(n) +
                         " elements exceeds bound " + std::to_string(max_size));
  }

  // conflicts[x] = elements sharing a range or a source with x.
  std::vector<std::vector<Elem>> conflicts(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x == y) continue;
      if (g.range(x) == g.range(y) || g.source(x) == g.source(y)) {
        conflicts[x].push_back(y);
      }
    }
  }

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> chosen;
  std::vector<char> r_used(n, 0), s_used(n, 0);
  // For each skipped element, whether some chosen element already blocks it.
  std::vector<Elem> skipped;
  std::vector<char> covered;

  std::function<void(Elem)> go = [&](Elem i) {
    if (i == n) {
      for (size_t k = 0; k < skipped.size(); ++k) {
        if (!covered[k]) return;  // not maximal: skipped[k] could be added
      }
      out.push_back(chosen);
      return;
    }
    bool fits = !r_used[g.range(i)] && !s_used[g.source(i)];
    if (fits) {
      chosen.push_back(i);
      r_used[g.range(i)] = 1;
      s_used[g.source(i)] = 1;
      std::vector<char> saved = covered;
      for (size_t k = 0; k < skipped.size(); ++k) {
        if (!covered[k] && (g.range(skipped[k]) == g.range(i) ||
                            g.source(skipped[k]) == g.source(i))) {
          covered[k] = 1;
        }
      }
      go(i + 1);
      covered = std::move(saved);
      r_used[g.range(i)] = 0;
      s_used[g.source(i)] = 0;
      chosen.pop_back();
      // Skipping i can only lead to a maximal slice if something blocks it
      // later on; prune when no remaining element conflicts with i.
      bool blockable = !fits;
      for (Elem y : conflicts[i]) {
        if (y > i) {
          blockable = true;
          break;
        }
      }
      if (!blockable) return;
    }
    skipped.push_back(i);
    covered.push_back(fits ? 0 : 1);
    go(i + 1);
    skipped.pop_back();
    covered.pop_back();
  };

  // Groupoids with broken tables have no well-defined slices beyond this.
  for (Elem x = 0; x < n; ++x) {
    if (g.range(x) == kNoElem || g.source(x) == kNoElem) {
      throw PreconditionError("slice enumeration requires a valid groupoid");
    }
  }
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gpd
