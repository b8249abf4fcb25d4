#include "gpd/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace gpd {

namespace {

struct ElemSignature {
  bool unit;
  bool self_inverse;
  bool self_composable;
  int out_degree;  // |{y : xy defined}|

  auto key() const { return std::tie(unit, self_inverse, self_composable, out_degree); }
  bool operator==(const ElemSignature& o) const { return key() == o.key(); }
  bool operator<(const ElemSignature& o) const { return key() < o.key(); }
};

ElemSignature signature(const Groupoid& g, Elem x) {
  int deg = 0;
  for (Elem y = 0; y < g.size(); ++y) {
    if (g.composable(x, y)) ++deg;
  }
  return {g.is_unit(x), g.inverse(x) == x, g.composable(x, x), deg};
}

}  // namespace

bool is_isomorphism(const Groupoid& a, const Groupoid& b,
                    const std::vector<Elem>& phi) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(phi.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (phi[x] < 0 || phi[x] >= n || hit[phi[x]]) return false;
    hit[phi[x]] = 1;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem xy = a.compose(x, y);
      Elem pxy = b.compose(phi[x], phi[y]);
      if ((xy == kNoElem) != (pxy == kNoElem)) return false;
      if (xy != kNoElem && phi[xy] != pxy) return false;
    }
  }
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const Groupoid& a,
                                                  const Groupoid& b,
                                                  int max_size) {
  const int n = a.size();
  if (n > max_size || b.size() > max_size) {
    throw SizeGuardError("isomorphism search too large: " +
                         std::to_string(std::max(n, b.size())) +
                         " elements exceeds bound " + std::to_string(max_size));
  }
  if (b.size() != n) return std::nullopt;
  if (a.units().size() != b.units().size()) return std::nullopt;

  std::vector<ElemSignature> sig_a(n), sig_b(n);
  for (Elem x = 0; x < n; ++x) sig_a[x] = signature(a, x);
  for (Elem x = 0; x < n; ++x) sig_b[x] = signature(b, x);
  {
    auto ma = sig_a, mb = sig_b;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }

  std::vector<Elem> phi(n, kNoElem);
  std::vector<char> used(n, 0);

  // Necessary conditions only; a full check runs at the end.
  auto consistent = [&](Elem x, Elem y) {
    if (!(sig_a[x] == sig_b[y])) return false;
    Elem ra = a.range(x), sa = a.source(x);
    if (phi[ra] != kNoElem && phi[ra] != b.range(y)) return false;
    if (phi[sa] != kNoElem && phi[sa] != b.source(y)) return false;
    if (phi[a.inverse(x)] != kNoElem && phi[a.inverse(x)] != b.inverse(y)) return false;
    for (Elem z = 0; z < n; ++z) {
      if (phi[z] == kNoElem) continue;
      Elem xz = a.compose(x, z), zx = a.compose(z, x);
      Elem yz = b.compose(y, phi[z]), zy = b.compose(phi[z], y);
      if ((xz == kNoElem) != (yz == kNoElem)) return false;
      if ((zx == kNoElem) != (zy == kNoElem)) return false;
      if (xz != kNoElem && phi[xz] != kNoElem && phi[xz] != yz) return false;
      if (zx != kNoElem && phi[zx] != kNoElem && phi[zx] != zy) return false;
    }
    Elem xx = a.compose(x, x), yy = b.compose(y, y);
    if ((xx == kNoElem) != (yy == kNoElem)) return false;
    return true;
  };

  std::function<bool(Elem)> go = [&](Elem i) -> bool {
    if (i == n) return is_isomorphism(a, b, phi);
    if (phi[i] != kNoElem) return go(i + 1);
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || !consistent(i, y)) continue;
      phi[i] = y;
      used[y] = 1;
      // Force the inverse assignment along with it.
      Elem ix = a.inverse(i), iy = b.inverse(y);
      bool forced = ix != i && phi[ix] == kNoElem;
      bool feasible = true;
      if (forced) {
        if (used[iy] || !consistent(ix, iy)) {
          feasible = false;
        } else {
          phi[ix] = iy;
          used[iy] = 1;
        }
      }
      if (feasible && go(i + 1)) return true;
      if (forced && feasible) {
        phi[ix] = kNoElem;
        used[iy] = 0;
      }
      phi[i] = kNoElem;
      used[y] = 0;
    }
    return false;
  };

  if (go(0)) return phi;
  return std::nullopt;
}

}  // namespace gpd
