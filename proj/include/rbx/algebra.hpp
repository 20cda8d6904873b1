#pragma once

#include <string>
#include <vector>

#include "rbx/linalg.hpp"

namespace rbx {

/// One failed axiom instance: which law, at which basis tuple, and the two
/// sides that should have agreed (as coordinate vectors).
struct Violation {
  std::string axiom;
  std::vector<Index> indices;
  Vec lhs;
  Vec rhs;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<Index> indices, Vec lhs, Vec rhs) {
    violations.push_back({std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)});
  }
};

/// Finite-dimensional associative algebra with involution, given by a
/// chosen basis: mul is the structure-constant tensor with row (i*dim + j)
/// holding the coordinates of e_i * e_j, and inv is the matrix of a |-> a*
/// acting on column coordinate vectors.
struct InvolutiveAlgebra {
  Index dim = 0;
  Mat mul;  // (dim*dim) x dim
  Mat inv;  // dim x dim

  /// Coordinates of e_i * e_j.
  Vec product(Index i, Index j) const { return mul.row(i * dim + j).transpose(); }

  /// Bilinear product of coordinate vectors.
  Vec product(const Vec& a, const Vec& b) const {
    Vec out = Vec::Zero(dim);
    for (Index i = 0; i < dim; ++i) {
      if (a(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j) {
        if (b(j).is_zero()) continue;
        out += a(i) * b(j) * mul.row(i * dim + j).transpose();
      }
    }
    return out;
  }

  Vec star(const Vec& a) const { return inv * a; }
  Vec basis(Index i) const { return Vec::Unit(dim, i); }
};

/// Bimodule over an involutive algebra. left has row (i*dim + p) holding
/// the coordinates of e_i . f_p, right has row (p*algebra_dim + i) for
/// f_p . e_i, and inv is the module involution u |-> u*.
struct InvolutiveBimodule {
  Index dim = 0;
  Index algebra_dim = 0;
  Mat left;   // (algebra_dim*dim) x dim
  Mat right;  // (dim*algebra_dim) x dim
  Mat inv;    // dim x dim

  Vec left_act(Index i, Index p) const { return left.row(i * dim + p).transpose(); }
  Vec right_act(Index p, Index i) const { return right.row(p * algebra_dim + i).transpose(); }

  Vec left_act(const Vec& a, const Vec& u) const {
    Vec out = Vec::Zero(dim);
    for (Index i = 0; i < algebra_dim; ++i) {
      if (a(i).is_zero()) continue;
      for (Index p = 0; p < dim; ++p) {
        if (u(p).is_zero()) continue;
        out += a(i) * u(p) * left.row(i * dim + p).transpose();
      }
    }
    return out;
  }

  Vec right_act(const Vec& u, const Vec& a) const {
    Vec out = Vec::Zero(dim);
    for (Index p = 0; p < dim; ++p) {
      if (u(p).is_zero()) continue;
      for (Index i = 0; i < algebra_dim; ++i) {
        if (a(i).is_zero()) continue;
        out += u(p) * a(i) * right.row(p * algebra_dim + i).transpose();
      }
    }
    return out;
  }

  Vec star(const Vec& u) const { return inv * u; }
};

/// Exhaustive check of associativity, sigma^2 = id and the
/// anti-multiplicativity of the involution over all basis tuples.
/// Throws ShapeError when the tensors do not match dim.
ValidationReport validate_algebra(const InvolutiveAlgebra& a);

/// Bimodule axioms, tau^2 = id, and (au)* = u*a*, (ua)* = a*u* over basis
/// tuples. Assumes validate_algebra(a) passed.
ValidationReport validate_bimodule(const InvolutiveAlgebra& a, const InvolutiveBimodule& m);

/// The semi-direct product algebra on A (+) M, with product
/// (a,u)(b,v) = (ab, av + ub) and involution (a,u)* = (a*, u*).
/// A-basis vectors come first.
InvolutiveAlgebra semidirect_product(const InvolutiveAlgebra& a, const InvolutiveBimodule& m);

/// M = A with left/right multiplication and the algebra involution.
InvolutiveBimodule regular_bimodule(const InvolutiveAlgebra& a);

}  // namespace rbx
