#include "gpd/algebra.hpp"

#include <Eigen/SVD>

#include "gpd/slices.hpp"

namespace gpd {

GroupoidFunction GroupoidFunction::delta(const Groupoid& base, Elem x, Scalar c) {
  GroupoidFunction f(base);
  f.set(x, c);
  return f;
}

void GroupoidFunction::set(Elem x, Scalar v) {
  if (x < 0 || x >= base_->size()) {
    throw StructuralError("coefficient index out of range: " + std::to_string(x));
  }
  if (v == Scalar{0.0}) {
    coeffs_.erase(x);
  } else {
    coeffs_[x] = v;
  }
}

std::vector<Elem> GroupoidFunction::support() const {
  std::vector<Elem> s;
  s.reserve(coeffs_.size());
  for (const auto& [x, v] : coeffs_) s.push_back(x);
  return s;
}

namespace {

void require_same_base(const GroupoidFunction& a, const GroupoidFunction& b) {
  if (&a.base() != &b.base()) {
    throw PreconditionError("functions live on different base groupoids");
  }
}

}  // namespace

GroupoidFunction& GroupoidFunction::operator+=(const GroupoidFunction& o) {
  require_same_base(*this, o);
  for (const auto& [x, v] : o.coeffs_) set(x, at(x) + v);
  return *this;
}

GroupoidFunction& GroupoidFunction::operator*=(Scalar c) {
  if (c == Scalar{0.0}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [x, v] : coeffs_) v *= c;
  return *this;
}

GroupoidFunction convolve(const GroupoidFunction& xi, const GroupoidFunction& eta) {
  require_same_base(xi, eta);
  const Groupoid& g = xi.base();
  GroupoidFunction out(g);
  for (const auto& [x, vx] : xi.coeffs()) {
    for (const auto& [y, vy] : eta.coeffs()) {
      Elem xy = g.compose(x, y);
      if (xy != kNoElem) out.add(xy, vx * vy);
    }
  }
  return out;
}

GroupoidFunction involve(const GroupoidFunction& xi) {
  const Groupoid& g = xi.base();
  GroupoidFunction out(g);
  for (const auto& [x, v] : xi.coeffs()) out.set(g.inverse(x), std::conj(v));
  return out;
}

double i_norm(const GroupoidFunction& xi) {
  const Groupoid& g = xi.base();
  std::vector<double> in_sum(g.size(), 0.0), out_sum(g.size(), 0.0);
  for (const auto& [x, v] : xi.coeffs()) {
    in_sum[g.range(x)] += std::abs(v);
    out_sum[g.source(x)] += std::abs(v);
  }
  double sup = 0.0;
  for (Elem u : g.units()) {
    sup = std::max(sup, std::max(in_sum[u], out_sum[u]));
  }
  return sup;
}

double sup_norm(const GroupoidFunction& xi) {
  double m = 0.0;
  for (const auto& [x, v] : xi.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

RegularRep regular_representation(const GroupoidFunction& xi, Elem unit) {
  const Groupoid& g = xi.base();
  if (unit < 0 || unit >= g.size() || !g.is_unit(unit)) {
    throw PreconditionError("regular representation requires a unit");
  }
  RegularRep rep;
  rep.unit = unit;
  for (Elem x = 0; x < g.size(); ++x) {
    if (g.source(x) == unit) rep.basis.push_back(x);
  }
  const int d = static_cast<int>(rep.basis.size());
  rep.matrix = Eigen::MatrixXcd::Zero(d, d);
  for (int row = 0; row < d; ++row) {
    for (int col = 0; col < d; ++col) {
      // x y^-1 is defined for any x, y with source u.
      Elem arg = g.compose(rep.basis[row], g.inverse(rep.basis[col]));
      rep.matrix(row, col) = xi.at(arg);
    }
  }
  return rep;
}

double reduced_norm(const GroupoidFunction& xi) {
  const Groupoid& g = xi.base();
  double sup = 0.0;
  for (Elem u : g.units()) {
    RegularRep rep = regular_representation(xi, u);
    if (rep.matrix.rows() == 0) continue;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rep.matrix);
    sup = std::max(sup, svd.singularValues()(0));
  }
  return sup;
}

SliceNormReport check_slice_norms(const GroupoidFunction& xi, Tolerance tol) {
  SliceNormReport rep;
  rep.slice_supported = is_slice(xi.base(), xi.support());
  rep.sup = sup_norm(xi);
  rep.i = i_norm(xi);
  rep.reduced = reduced_norm(xi);
  if (rep.slice_supported) {
    rep.equal_within_tol =
        tol.close(rep.sup, rep.i) && tol.close(rep.i, rep.reduced) &&
        tol.close(rep.sup, rep.reduced);
  }
  return rep;
}

}  // namespace gpd
