#pragma once

#include <vector>

#include "rbx/linalg.hpp"

namespace rbx {

/// Dense n-linear map V^{(x)n} -> W between based spaces, stored as a
/// (dim V)^n x (dim W) coefficient matrix. Row index is the source basis
/// tuple flattened in lexicographic order (first argument most
/// significant); column k holds the k-th coordinate of the value.
/// Degree 0 cochains are plain target vectors (a single row).
struct Cochain {
  int degree = 0;
  Index src_dim = 0;
  Index tgt_dim = 0;
  Mat coeffs;  // ipow(src_dim, degree) rows, tgt_dim cols

  static Cochain zero(int degree, Index src_dim, Index tgt_dim) {
    return {degree, src_dim, tgt_dim, Mat::Zero(ipow(src_dim, degree), tgt_dim)};
  }

  Index rows() const { return coeffs.rows(); }

  bool is_zero() const { return rbx::is_zero(coeffs); }

  bool same_shape(const Cochain& o) const {
    return degree == o.degree && src_dim == o.src_dim && tgt_dim == o.tgt_dim;
  }

  /// Value on a basis tuple, as target coordinates.
  Vec value(Index flat_tuple) const { return coeffs.row(flat_tuple).transpose(); }

  /// Flattened coordinates (row-major: tuple index, then target index),
  /// the fixed basis for all matrix representations of operators.
  Vec flatten() const {
    Vec v(rows() * tgt_dim);
    for (Index r = 0; r < rows(); ++r)
      for (Index k = 0; k < tgt_dim; ++k) v(r * tgt_dim + k) = coeffs(r, k);
    return v;
  }

  static Cochain from_flat(const Vec& v, int degree, Index src_dim, Index tgt_dim) {
    Cochain c = zero(degree, src_dim, tgt_dim);
    for (Index r = 0; r < c.rows(); ++r)
      for (Index k = 0; k < tgt_dim; ++k) c.coeffs(r, k) = v(r * tgt_dim + k);
    return c;
  }

  friend Cochain operator+(const Cochain& a, const Cochain& b) {
    return {a.degree, a.src_dim, a.tgt_dim, a.coeffs + b.coeffs};
  }
  friend Cochain operator-(const Cochain& a, const Cochain& b) {
    return {a.degree, a.src_dim, a.tgt_dim, a.coeffs - b.coeffs};
  }
  friend Cochain operator*(const Rational& s, const Cochain& c) {
    return {c.degree, c.src_dim, c.tgt_dim, c.coeffs * s};
  }
  Cochain operator-() const { return {degree, src_dim, tgt_dim, -coeffs}; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.same_shape(b) && a.coeffs == b.coeffs;
  }
};

/// f with its argument order reversed.
Cochain reverse_arguments(const Cochain& f);

/// f(..., m(arg), ...) with the linear map applied in one slot (0-based).
Cochain precompose_slot(const Cochain& f, int slot, const Mat& m);

/// m applied to every value of f.
Cochain postcompose(const Cochain& f, const Mat& m);

/// Matrix of a linear operator on flattened cochain coordinates, assembled
/// column by column from its action on the coordinate basis.
template <typename Op>
Mat operator_matrix(int degree, Index src_dim, Index tgt_dim, int out_degree, Index out_src_dim, Index out_tgt_dim, Op&& op) {
  const Index cols = ipow(src_dim, degree) * tgt_dim;
  const Index rows = ipow(out_src_dim, out_degree) * out_tgt_dim;
  Mat m(rows, cols);
  Vec unit = Vec::Zero(cols);
  for (Index j = 0; j < cols; ++j) {
    unit(j) = 1;
    const Cochain image = op(Cochain::from_flat(unit, degree, src_dim, tgt_dim));
    m.col(j) = image.flatten();
    unit(j) = 0;
  }
  return m;
}

}  // namespace rbx
