#pragma once

#include <optional>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/cochain.hpp"
#include "rbx/hochschild.hpp"

namespace rbx {

struct RBOperator;

/// Two products prec / succ whose sum is associative, subject to the three
/// dendriform axioms. The involution, when present, must reverse them:
/// (a prec b)* = b* succ a*.
struct DendriformAlgebra {
  Index dim = 0;
  Mat prec;  // (dim*dim) x dim
  Mat succ;  // (dim*dim) x dim
  std::optional<Mat> inv;

  Vec prec_of(const Vec& a, const Vec& b) const { return bilinear(prec, a, b); }
  Vec succ_of(const Vec& a, const Vec& b) const { return bilinear(succ, a, b); }

private:
  Vec bilinear(const Mat& tensor, const Vec& a, const Vec& b) const {
    Vec out = Vec::Zero(dim);
    for (Index i = 0; i < dim; ++i) {
      if (a(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j) {
        if (b(j).is_zero()) continue;
        out += a(i) * b(j) * tensor.row(i * dim + j).transpose();
      }
    }
    return out;
  }
};

ValidationReport validate_dendriform(const DendriformAlgebra& d);

/// Element of O(n) = Hom(K[C_n] (x) D^n, D): one n-linear component per
/// label [1]..[n], stored label-major (row (r-1)*dim^n + tuple).
struct DendCochain {
  int arity = 0;
  Index dim = 0;
  Mat coeffs;  // (arity * dim^arity) x dim

  static DendCochain zero(int arity, Index dim) {
    return {arity, dim, Mat::Zero(arity * ipow(dim, arity), dim)};
  }

  Index rows_per_label() const { return ipow(dim, arity); }
  bool is_zero() const { return rbx::is_zero(coeffs); }

  /// The n-linear component at a 1-based label, as a plain cochain.
  Cochain label_slice(int r) const {
    return {arity, dim, dim, coeffs.middleRows((r - 1) * rows_per_label(), rows_per_label())};
  }
  void set_label_slice(int r, const Cochain& c) {
    coeffs.middleRows((r - 1) * rows_per_label(), rows_per_label()) = c.coeffs;
  }

  Vec flatten() const {
    Vec v(coeffs.rows() * dim);
    for (Index r = 0; r < coeffs.rows(); ++r)
      for (Index k = 0; k < dim; ++k) v(r * dim + k) = coeffs(r, k);
    return v;
  }
  static DendCochain from_flat(const Vec& v, int arity, Index dim) {
    DendCochain c = zero(arity, dim);
    for (Index r = 0; r < c.coeffs.rows(); ++r)
      for (Index k = 0; k < dim; ++k) c.coeffs(r, k) = v(r * dim + k);
    return c;
  }

  friend DendCochain operator+(const DendCochain& a, const DendCochain& b) { return {a.arity, a.dim, a.coeffs + b.coeffs}; }
  friend DendCochain operator-(const DendCochain& a, const DendCochain& b) { return {a.arity, a.dim, a.coeffs - b.coeffs}; }
  friend DendCochain operator*(const Rational& s, const DendCochain& c) { return {c.arity, c.dim, c.coeffs * s}; }
  friend bool operator==(const DendCochain& a, const DendCochain& b) {
    return a.arity == b.arity && a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

/// Partial composition of the nonsymmetric operad O, with the three-case
/// label rule; "[1]+...+[n]" means summing g over all of its labels.
DendCochain operad_compose(const DendCochain& f, int i, const DendCochain& g);

/// Graded Lie bracket on O(.+1).
DendCochain dend_bracket(const DendCochain& f, const DendCochain& g);

/// The Maurer-Cartan element of a dendriform algebra: pi([1];a,b) = a prec b,
/// pi([2];a,b) = a succ b.
DendCochain dendriform_pi(const DendriformAlgebra& d);

/// delta_pi f = (-1)^{n-1} [pi, f] for f in O(n).
DendCochain dend_differential(const DendriformAlgebra& d, const DendCochain& f);

/// Matrix of the label-reversing involution on O(n):
/// (S f)([r]; a_1..a_n) = (-1)^{(n-1)(n-2)/2} f([n-r+1]; a_n*..a_1*)*.
DendCochain dend_s_action(const DendCochain& f, const Mat& inv);
Mat dend_s_matrix(int arity, Index dim, const Mat& inv);
bool dend_is_involutive(const DendCochain& f, const Mat& inv);

/// Basis of iC^n_dend(D,D), the fixed space of the label-reversing
/// involution. Requires an involution on d.
std::vector<DendCochain> dend_involutive_basis(const DendriformAlgebra& d, int arity);

/// Cohomology of the (involutive) dendriform algebra per arity
/// 1..max_degree. The involutive/skew variants need d.inv.
CohomologyReport dend_cohomology(const DendriformAlgebra& d, int max_degree, Variant variant);

std::vector<DegreeData> dend_complex_data(const DendriformAlgebra& d, int max_degree, Variant variant);

/// Theta_n: iHom(M^n, A) -> iC^{n+1}_dend(M, M) for a relative Rota-Baxter
/// operator's module. Rejects non-involutive P; the image is verified to be
/// involutive.
DendCochain theta(const Cochain& p, const RBOperator& op);

}  // namespace rbx
