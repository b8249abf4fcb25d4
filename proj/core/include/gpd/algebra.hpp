#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

using Scalar = std::complex<double>;

// An element of the convolution *-algebra of a finite groupoid: a
// complex-valued function on the elements, sparse over a fixed base.
// Exact zeros are pruned so the support is the true support. Functions are
// compatible only when they reference the same base object.
class GroupoidFunction {
 public:
  explicit GroupoidFunction(const Groupoid& base) : base_(&base) {}

  static GroupoidFunction delta(const Groupoid& base, Elem x, Scalar c = 1.0);

  const Groupoid& base() const { return *base_; }

  Scalar at(Elem x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? Scalar{0.0} : it->second;
  }

  void set(Elem x, Scalar v);
  void add(Elem x, Scalar v) { set(x, at(x) + v); }

  // Coefficients in element order; values are never exactly zero.
  const std::map<Elem, Scalar>& coeffs() const { return coeffs_; }
  std::vector<Elem> support() const;
  bool is_zero() const { return coeffs_.empty(); }

  GroupoidFunction& operator+=(const GroupoidFunction& o);
  GroupoidFunction& operator*=(Scalar c);
  friend GroupoidFunction operator+(GroupoidFunction a, const GroupoidFunction& b) {
    a += b;
    return a;
  }
  friend GroupoidFunction operator*(Scalar c, GroupoidFunction f) {
    f *= c;
    return f;
  }

 private:
  const Groupoid* base_;
  std::map<Elem, Scalar> coeffs_;
};

// (xi * eta)(g) = sum over factorizations g1 g2 = g of xi(g1) eta(g2).
GroupoidFunction convolve(const GroupoidFunction& xi, const GroupoidFunction& eta);

// xi*(g) = conj(xi(g^-1)).
GroupoidFunction involve(const GroupoidFunction& xi);

// sup over units of max(incoming, outgoing) absolute coefficient sums.
double i_norm(const GroupoidFunction& xi);

// max |xi(g)|.
double sup_norm(const GroupoidFunction& xi);

// The left regular representation at a unit u on l2(s^-1(u)): the matrix
// with entry (row x, column y) = xi(x y^-1), so convolution becomes matrix
// multiplication and involution the conjugate transpose.
struct RegularRep {
  Elem unit;
  std::vector<Elem> basis;  // s^-1(u) in element order
  Eigen::MatrixXcd matrix;
};

RegularRep regular_representation(const GroupoidFunction& xi, Elem unit);

// sup over units of the operator norm (largest singular value) of the
// regular representation. For a finite groupoid the full norm coincides
// with this reduced norm, so it is the C*-norm outright.
double reduced_norm(const GroupoidFunction& xi);

struct SliceNormReport {
  bool slice_supported = false;
  double sup = 0.0;
  double i = 0.0;
  double reduced = 0.0;
  // Set only when slice_supported: the three norms agree within tol.
  bool equal_within_tol = false;
};

// Computes the three norms; when the support is a slice, asserts they agree
// within tolerance (the slice lemma at finite scale).
SliceNormReport check_slice_norms(const GroupoidFunction& xi, Tolerance tol = {});

}  // namespace gpd
