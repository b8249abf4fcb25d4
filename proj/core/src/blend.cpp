#include "gpd/blend.hpp"

#include <Eigen/SVD>
#include <random>

namespace gpd {

GroupoidFunction embed_i(const ZsGroupoid& zs, const GroupoidFunction& xi) {
  if (&xi.base() != &zs.factors().vertical()) {
    throw PreconditionError("embed_i expects a function on the vertical factor");
  }
  GroupoidFunction out(zs.product());
  for (const auto& [g, v] : xi.coeffs()) out.set(zs.embed_g(g), v);
  return out;
}

GroupoidFunction embed_j(const ZsGroupoid& zs, const GroupoidFunction& eta) {
  if (&eta.base() != &zs.factors().horizontal()) {
    throw PreconditionError("embed_j expects a function on the horizontal factor");
  }
  GroupoidFunction out(zs.product());
  for (const auto& [h, v] : eta.coeffs()) out.set(zs.embed_h(h), v);
  return out;
}

namespace {

double max_coeff_deviation(const GroupoidFunction& a, const GroupoidFunction& b) {
  double m = 0.0;
  for (Elem p = 0; p < a.base().size(); ++p) {
    m = std::max(m, std::abs(a.at(p) - b.at(p)));
  }
  return m;
}

GroupoidFunction random_function(const Groupoid& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  GroupoidFunction f(g);
  for (Elem x = 0; x < g.size(); ++x) {
    f.set(x, Scalar(dist(rng), dist(rng)));
  }
  return f;
}

// Rows = vectors over the product elements; rank by singular values.
int numerical_rank(const Eigen::MatrixXcd& m, std::optional<double> rank_tol,
                   double* threshold_out = nullptr) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  double sigma_max = sv(0);
  double threshold = rank_tol
                         ? *rank_tol * sigma_max
                         : std::max(m.rows(), m.cols()) *
                               std::numeric_limits<double>::epsilon() * sigma_max;
  if (threshold_out) *threshold_out = threshold;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

Eigen::MatrixXcd stack(const std::vector<GroupoidFunction>& rows, int dim) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(rows.size()), dim);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [p, v] : rows[r].coeffs()) m(static_cast<int>(r), p) = v;
  }
  return m;
}

}  // namespace

HomReport check_embeddings_are_homomorphisms(const ZsGroupoid& zs, int trials,
                                             Tolerance tol, std::uint64_t seed) {
  const Groupoid& g = zs.factors().vertical();
  const Groupoid& h = zs.factors().horizontal();
  HomReport rep;
  rep.trials = trials;
  rep.i_ok = rep.j_ok = true;

  auto check_pair = [&](bool vertical, const GroupoidFunction& f1,
                        const GroupoidFunction& f2, const char* what) {
    auto embed = [&](const GroupoidFunction& f) {
      return vertical ? embed_i(zs, f) : embed_j(zs, f);
    };
    double e1 = max_coeff_deviation(embed(convolve(f1, f2)),
                                    convolve(embed(f1), embed(f2)));
    double e2 = max_coeff_deviation(embed(involve(f1)), involve(embed(f1)));
    double e = std::max(e1, e2);
    rep.max_error = std::max(rep.max_error, e);
    if (!tol.close(e, 0.0)) {
      (vertical ? rep.i_ok : rep.j_ok) = false;
      if (rep.first_failure.empty()) rep.first_failure = what;
    }
  };

  // Exhaustive on point masses.
  for (Elem x = 0; x < g.size(); ++x) {
    for (Elem y = 0; y < g.size(); ++y) {
      check_pair(true, GroupoidFunction::delta(g, x), GroupoidFunction::delta(g, y),
                 "i on point masses");
    }
  }
  for (Elem x = 0; x < h.size(); ++x) {
    for (Elem y = 0; y < h.size(); ++y) {
      check_pair(false, GroupoidFunction::delta(h, x), GroupoidFunction::delta(h, y),
                 "j on point masses");
    }
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    check_pair(true, random_function(g, rng), random_function(g, rng),
               "i on random pair");
    check_pair(false, random_function(h, rng), random_function(h, rng),
               "j on random pair");
  }
  return rep;
}

namespace {

std::vector<GroupoidFunction> product_family(const ZsGroupoid& zs, bool i_first) {
  const Groupoid& g = zs.factors().vertical();
  const Groupoid& h = zs.factors().horizontal();
  std::vector<GroupoidFunction> rows;
  rows.reserve(static_cast<size_t>(g.size()) * h.size());
  for (Elem x = 0; x < g.size(); ++x) {
    GroupoidFunction ix = embed_i(zs, GroupoidFunction::delta(g, x));
    for (Elem y = 0; y < h.size(); ++y) {
      GroupoidFunction jy = embed_j(zs, GroupoidFunction::delta(h, y));
      rows.push_back(i_first ? convolve(ix, jy) : convolve(jy, ix));
    }
  }
  return rows;
}

}  // namespace

DensityReport blend_density(const ZsGroupoid& zs, std::optional<double> rank_tol) {
  DensityReport rep;
  rep.target_dim = zs.product().size();
  auto rows = product_family(zs, /*i_first=*/true);
  rep.span_rank = numerical_rank(stack(rows, rep.target_dim), rank_tol,
                                 &rep.threshold);
  return rep;
}

EquivalenceReport check_blend_equivalences(const ZsGroupoid& zs,
                                           std::optional<double> rank_tol) {
  const int dim = zs.product().size();
  EquivalenceReport rep;
  auto ab = product_family(zs, true);
  auto ba = product_family(zs, false);

  Eigen::MatrixXcd mab = stack(ab, dim);
  Eigen::MatrixXcd mba = stack(ba, dim);
  rep.ab_rank = numerical_rank(mab, rank_tol);
  rep.ba_rank = numerical_rank(mba, rank_tol);
  Eigen::MatrixXcd joint(mab.rows() + mba.rows(), dim);
  joint << mab, mba;
  rep.joint_rank = numerical_rank(joint, rank_tol);
  rep.spans_equal = rep.ab_rank == rep.ba_rank && rep.ab_rank == rep.joint_rank;

  // Closure of span{a*b}: append candidates and watch the rank.
  auto closed_under = [&](auto&& make_candidate, size_t count) {
    for (size_t k = 0; k < count; ++k) {
      GroupoidFunction cand = make_candidate(k);
      Eigen::MatrixXcd ext(mab.rows() + 1, dim);
      ext.topRows(mab.rows()) = mab;
      ext.row(mab.rows()).setZero();
      for (const auto& [p, v] : cand.coeffs()) ext(mab.rows(), p) = v;
      if (numerical_rank(ext, rank_tol) > rep.ab_rank) return false;
    }
    return true;
  };
  rep.ab_convolution_closed = closed_under(
      [&](size_t k) {
        return convolve(ab[k / ab.size()], ab[k % ab.size()]);
      },
      ab.size() * ab.size());
  rep.ab_involution_closed =
      closed_under([&](size_t k) { return involve(ab[k]); }, ab.size());
  return rep;
}

BlendWitness blend_witness(const ZsGroupoid& zs, int trials, Tolerance tol,
                           std::optional<double> rank_tol) {
  BlendWitness w;
  DensityReport d = blend_density(zs, rank_tol);
  w.span_rank = d.span_rank;
  w.target_dim = d.target_dim;
  HomReport h = check_embeddings_are_homomorphisms(zs, trials, tol);
  w.i_hom_ok = h.i_ok;
  w.j_hom_ok = h.j_ok;
  w.commuting_spans_ok = check_blend_equivalences(zs, rank_tol).ok();
  return w;
}

}  // namespace gpd
