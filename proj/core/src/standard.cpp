#include "gpd/standard.hpp"

#include <array>
#include <random>

namespace gpd {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

Groupoid cyclic_group(int n, std::vector<std::string> labels) {
  GroupoidBuilder b;
  for (auto& l : labels) b.add_element(std::move(l));
  for (Elem i = 0; i < n; ++i) {
    b.set_inverse(i, (n - i) % n);
    for (Elem j = 0; j < n; ++j) b.set_compose(i, j, (i + j) % n);
  }
  return b.build();
}

Groupoid cyclic_group(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return cyclic_group(n, std::move(labels));
}

Groupoid unit_groupoid(std::vector<std::string> labels) {
  GroupoidBuilder b;
  const int n = static_cast<int>(labels.size());
  for (auto& l : labels) b.add_element(std::move(l));
  for (Elem i = 0; i < n; ++i) {
    b.set_inverse(i, i);
    b.set_compose(i, i, i);
  }
  return b.build();
}

Groupoid pair_groupoid(int n) {
  GroupoidBuilder b;
  auto id = [n](int i, int j) { return static_cast<Elem>(i * n + j); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.add_element(pair_label(std::to_string(i + 1), std::to_string(j + 1)));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.set_inverse(id(i, j), id(j, i));
      for (int k = 0; k < n; ++k) b.set_compose(id(i, j), id(j, k), id(i, k));
    }
  }
  return b.build();
}

namespace {

// Permutations of {0,1,2} for S3: value perm[i] is the image of i.
using Perm3 = std::array<int, 3>;

Perm3 mul(const Perm3& a, const Perm3& b) {
  return {a[b[0]], a[b[1]], a[b[2]]};  // (a b)(x) = a(b(x))
}

}  // namespace

Groupoid symmetric_s3() {
  const Perm3 e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  std::vector<std::pair<std::string, Perm3>> elems = {
      {"e", e},          {"r", r},           {"rr", mul(r, r)},
      {"s", s},          {"rs", mul(r, s)},  {"rrs", mul(mul(r, r), s)},
  };
  auto index_of = [&](const Perm3& p) {
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].second == p) return static_cast<Elem>(i);
    }
    return kNoElem;
  };
  GroupoidBuilder b;
  for (auto& [label, perm] : elems) b.add_element(label);
  for (size_t i = 0; i < elems.size(); ++i) {
    const Perm3& p = elems[i].second;
    Perm3 inv{};
    for (int k = 0; k < 3; ++k) inv[p[k]] = k;
    b.set_inverse(static_cast<Elem>(i), index_of(inv));
    for (size_t j = 0; j < elems.size(); ++j) {
      b.set_compose(static_cast<Elem>(i), static_cast<Elem>(j),
                    index_of(mul(p, elems[j].second)));
    }
  }
  return b.build();
}

Groupoid klein_four() {
  GroupoidBuilder b;
  for (const char* l : {"e", "x", "y", "xy"}) b.add_element(l);
  for (Elem i = 0; i < 4; ++i) {
    b.set_inverse(i, i);
    for (Elem j = 0; j < 4; ++j) b.set_compose(i, j, i ^ j);
  }
  return b.build();
}

Groupoid random_groupoid(std::uint64_t seed, int max_elements) {
  std::mt19937_64 rng(seed);
  // Small group catalog as (order, compose, inverse) on indices.
  struct GroupSpec {
    int order;
    Elem (*mul)(Elem, Elem);
    Elem (*inv)(Elem);
  };
  static const GroupSpec kGroups[] = {
      {1, [](Elem, Elem) { return Elem{0}; }, [](Elem) { return Elem{0}; }},
      {2, [](Elem a, Elem b) { return Elem((a + b) % 2); },
       [](Elem a) { return Elem((2 - a) % 2); }},
      {3, [](Elem a, Elem b) { return Elem((a + b) % 3); },
       [](Elem a) { return Elem((3 - a) % 3); }},
      {4, [](Elem a, Elem b) { return Elem((a + b) % 4); },
       [](Elem a) { return Elem((4 - a) % 4); }},
      {4, [](Elem a, Elem b) { return Elem(a ^ b); }, [](Elem a) { return a; }},
      {5, [](Elem a, Elem b) { return Elem((a + b) % 5); },
       [](Elem a) { return Elem((5 - a) % 5); }},
      {6, [](Elem a, Elem b) { return Elem((a + b) % 6); },
       [](Elem a) { return Elem((6 - a) % 6); }},
  };

  GroupoidBuilder b;
  struct Block {
    int base;    // first element id
    int points;  // pair-groupoid width
    const GroupSpec* grp;
  };
  std::vector<Block> blocks;
  int total = 0;
  while (true) {
    int points = static_cast<int>(rng() % 3) + 1;
    const GroupSpec& grp = kGroups[rng() % std::size(kGroups)];
    int count = points * points * grp.order;
    if (total + count > max_elements) {
      if (blocks.empty() && max_elements >= 1) {
        blocks.push_back({0, 1, &kGroups[0]});
        total = 1;
      }
      break;
    }
    blocks.push_back({total, points, &grp});
    total += count;
    if (total >= max_elements || (rng() % 4) == 0) break;
  }

  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& blk = blocks[bi];
    for (int i = 0; i < blk.points; ++i) {
      for (int j = 0; j < blk.points; ++j) {
        for (Elem a = 0; a < blk.grp->order; ++a) {
          b.add_element("c" + std::to_string(bi) + "_" + std::to_string(i) + "_" +
                        std::to_string(j) + "_" + std::to_string(a));
        }
      }
    }
  }
  for (const Block& blk : blocks) {
    const int p = blk.points, m = blk.grp->order;
    auto id = [&](int i, int j, Elem a) {
      return static_cast<Elem>(blk.base + (i * p + j) * m + a);
    };
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        for (Elem a = 0; a < m; ++a) {
          b.set_inverse(id(i, j, a), id(j, i, blk.grp->inv(a)));
          for (int k = 0; k < p; ++k) {
            for (Elem c = 0; c < m; ++c) {
              b.set_compose(id(i, j, a), id(j, k, c), id(i, k, blk.grp->mul(a, c)));
            }
          }
        }
      }
    }
  }
  return b.build();
}

MatchedPair direct_product_pair(const Groupoid& g, const Groupoid& h) {
  if (g.units().size() != 1 || h.units().size() != 1) {
    throw PreconditionError("direct product pair requires two groups");
  }
  std::vector<std::pair<Elem, Elem>> unit_map = {{g.units()[0], h.units()[0]}};
  std::vector<std::tuple<Elem, Elem, Elem>> action, restriction;
  for (Elem hh = 0; hh < h.size(); ++hh) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      action.emplace_back(hh, gg, gg);
      restriction.emplace_back(hh, gg, hh);
    }
  }
  return MatchedPair(g, h, std::move(unit_map), std::move(action),
                     std::move(restriction));
}

}  // namespace gpd
