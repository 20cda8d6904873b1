#include "rbx/algebra.hpp"

#include "rbx/errors.hpp"

namespace rbx {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw ShapeError(what);
}

}  // namespace

ValidationReport validate_algebra(const InvolutiveAlgebra& a) {
  require_shape(a.mul.rows() == a.dim * a.dim && a.mul.cols() == a.dim, "mul tensor must be (dim*dim) x dim");
  require_shape(a.inv.rows() == a.dim && a.inv.cols() == a.dim, "involution must be dim x dim");

  ValidationReport report;
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j)
      for (Index k = 0; k < a.dim; ++k) {
        const Vec lhs = a.product(a.product(i, j), a.basis(k));
        const Vec rhs = a.product(a.basis(i), a.product(j, k));
        if (lhs != rhs) report.add("associativity", {i, j, k}, lhs, rhs);
      }

  const Mat square = a.inv * a.inv;
  if (square != Mat::Identity(a.dim, a.dim))
    for (Index i = 0; i < a.dim; ++i) {
      const Vec lhs = square.col(i);
      const Vec rhs = a.basis(i);
      if (lhs != rhs) report.add("involution squares to identity", {i}, lhs, rhs);
    }

  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j) {
      const Vec lhs = a.star(a.product(i, j));
      const Vec rhs = a.product(a.star(a.basis(j)), a.star(a.basis(i)));
      if (lhs != rhs) report.add("involution anti-multiplicative", {i, j}, lhs, rhs);
    }
  return report;
}

ValidationReport validate_bimodule(const InvolutiveAlgebra& a, const InvolutiveBimodule& m) {
  require_shape(m.algebra_dim == a.dim, "bimodule algebra_dim must match the algebra");
  require_shape(m.left.rows() == a.dim * m.dim && m.left.cols() == m.dim, "left action must be (algebra_dim*dim) x dim");
  require_shape(m.right.rows() == m.dim * a.dim && m.right.cols() == m.dim, "right action must be (dim*algebra_dim) x dim");
  require_shape(m.inv.rows() == m.dim && m.inv.cols() == m.dim, "module involution must be dim x dim");

  ValidationReport report;
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j)
      for (Index p = 0; p < m.dim; ++p) {
        const Vec u = Vec::Unit(m.dim, p);
        const Vec lhs = m.left_act(a.product(i, j), u);
        const Vec rhs = m.left_act(a.basis(i), m.left_act(a.basis(j), u));
        if (lhs != rhs) report.add("(ab)u = a(bu)", {i, j, p}, lhs, rhs);

        const Vec lhs2 = m.right_act(u, a.product(i, j));
        const Vec rhs2 = m.right_act(m.right_act(u, a.basis(i)), a.basis(j));
        if (lhs2 != rhs2) report.add("u(ab) = (ua)b", {p, i, j}, lhs2, rhs2);

        const Vec lhs3 = m.right_act(m.left_act(a.basis(i), u), a.basis(j));
        const Vec rhs3 = m.left_act(a.basis(i), m.right_act(u, a.basis(j)));
        if (lhs3 != rhs3) report.add("(au)b = a(ub)", {i, p, j}, lhs3, rhs3);
      }

  const Mat square = m.inv * m.inv;
  if (square != Mat::Identity(m.dim, m.dim))
    for (Index p = 0; p < m.dim; ++p) {
      const Vec lhs = square.col(p);
      const Vec rhs = Vec::Unit(m.dim, p);
      if (lhs != rhs) report.add("module involution squares to identity", {p}, lhs, rhs);
    }

  for (Index i = 0; i < a.dim; ++i)
    for (Index p = 0; p < m.dim; ++p) {
      const Vec u = Vec::Unit(m.dim, p);
      const Vec lhs = m.star(m.left_act(a.basis(i), u));
      const Vec rhs = m.right_act(m.star(u), a.star(a.basis(i)));
      if (lhs != rhs) report.add("(au)* = u*a*", {i, p}, lhs, rhs);

      const Vec lhs2 = m.star(m.right_act(u, a.basis(i)));
      const Vec rhs2 = m.left_act(a.star(a.basis(i)), m.star(u));
      if (lhs2 != rhs2) report.add("(ua)* = a*u*", {p, i}, lhs2, rhs2);
    }
  return report;
}

InvolutiveAlgebra semidirect_product(const InvolutiveAlgebra& a, const InvolutiveBimodule& m) {
  const Index da = a.dim, dm = m.dim, d = da + dm;
  InvolutiveAlgebra out;
  out.dim = d;
  out.mul = Mat::Zero(d * d, d);
  out.inv = Mat::Zero(d, d);

  // (a,u)(b,v) = (ab, av + ub): A x A lands in A, A x M and M x A in M,
  // M x M vanishes.
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out.mul.row(i * d + j).head(da) = a.product(i, j).transpose();
  for (Index i = 0; i < da; ++i)
    for (Index p = 0; p < dm; ++p) out.mul.row(i * d + (da + p)).tail(dm) = m.left_act(i, p).transpose();
  for (Index p = 0; p < dm; ++p)
    for (Index i = 0; i < da; ++i) out.mul.row((da + p) * d + i).tail(dm) = m.right_act(p, i).transpose();

  out.inv.topLeftCorner(da, da) = a.inv;
  out.inv.bottomRightCorner(dm, dm) = m.inv;
  return out;
}

InvolutiveBimodule regular_bimodule(const InvolutiveAlgebra& a) {
  InvolutiveBimodule m;
  m.dim = a.dim;
  m.algebra_dim = a.dim;
  m.left = a.mul;
  m.right = a.mul;
  m.inv = a.inv;
  return m;
}

}  // namespace rbx
