#include "rbx/dendriform.hpp"

#include "rbx/errors.hpp"
#include "rbx/rota_baxter.hpp"

namespace rbx {

ValidationReport validate_dendriform(const DendriformAlgebra& d) {
  if (d.prec.rows() != d.dim * d.dim || d.prec.cols() != d.dim || d.succ.rows() != d.dim * d.dim || d.succ.cols() != d.dim)
    throw ShapeError("dendriform products must be (dim*dim) x dim");
  if (d.inv && (d.inv->rows() != d.dim || d.inv->cols() != d.dim)) throw ShapeError("involution must be dim x dim");

  ValidationReport report;
  for (Index i = 0; i < d.dim; ++i)
    for (Index j = 0; j < d.dim; ++j)
      for (Index k = 0; k < d.dim; ++k) {
        const Vec a = Vec::Unit(d.dim, i), b = Vec::Unit(d.dim, j), c = Vec::Unit(d.dim, k);
        const Vec ab_prec = d.prec.row(i * d.dim + j).transpose();
        const Vec ab_succ = d.succ.row(i * d.dim + j).transpose();
        const Vec bc_prec = d.prec.row(j * d.dim + k).transpose();
        const Vec bc_succ = d.succ.row(j * d.dim + k).transpose();

        const Vec l1 = d.prec_of(ab_prec, c);
        const Vec r1 = d.prec_of(a, bc_prec + bc_succ);
        if (l1 != r1) report.add("(a<b)<c = a<(b<c + b>c)", {i, j, k}, l1, r1);

        const Vec l2 = d.prec_of(ab_succ, c);
        const Vec r2 = d.succ_of(a, bc_prec);
        if (l2 != r2) report.add("(a>b)<c = a>(b<c)", {i, j, k}, l2, r2);

        const Vec l3 = d.succ_of(ab_prec + ab_succ, c);
        const Vec r3 = d.succ_of(a, bc_succ);
        if (l3 != r3) report.add("(a<b + a>b)>c = a>(b>c)", {i, j, k}, l3, r3);
      }

  if (d.inv) {
    const Mat& inv = *d.inv;
    const Mat square = inv * inv;
    if (square != Mat::Identity(d.dim, d.dim))
      for (Index i = 0; i < d.dim; ++i) {
        const Vec lhs = square.col(i);
        const Vec rhs = Vec::Unit(d.dim, i);
        if (lhs != rhs) report.add("involution squares to identity", {i}, lhs, rhs);
      }
    for (Index i = 0; i < d.dim; ++i)
      for (Index j = 0; j < d.dim; ++j) {
        const Vec lhs = inv * d.prec.row(i * d.dim + j).transpose();
        const Vec rhs = d.succ_of(inv * Vec::Unit(d.dim, j), inv * Vec::Unit(d.dim, i));
        if (lhs != rhs) report.add("(a<b)* = b*>a*", {i, j}, lhs, rhs);
      }
  }
  return report;
}

DendCochain operad_compose(const DendCochain& f, int i, const DendCochain& g) {
  if (f.dim != g.dim) throw ShapeError("operad composition needs matching spaces");
  const int m = f.arity, n = g.arity;
  if (i < 1 || i > m) throw ShapeError("composition position out of range");

  Cochain g_sum = Cochain::zero(n, g.dim, g.dim);
  for (int s = 1; s <= n; ++s) g_sum = g_sum + g.label_slice(s);

  DendCochain out = DendCochain::zero(m + n - 1, f.dim);
  for (int r = 1; r <= m + n - 1; ++r) {
    if (r <= i - 1)
      out.set_label_slice(r, compose_at(f.label_slice(r), i, g_sum));
    else if (r <= i + n - 1)
      out.set_label_slice(r, compose_at(f.label_slice(i), i, g.label_slice(r - i + 1)));
    else
      out.set_label_slice(r, compose_at(f.label_slice(r - n + 1), i, g_sum));
  }
  return out;
}

DendCochain dend_bracket(const DendCochain& f, const DendCochain& g) {
  const int fm = f.arity - 1, gn = g.arity - 1;  // graded degrees
  DendCochain out = DendCochain::zero(f.arity + g.arity - 1, f.dim);
  for (int i = 1; i <= f.arity; ++i) {
    const bool neg = ((i - 1) * gn) % 2 != 0;
    const DendCochain c = operad_compose(f, i, g);
    out.coeffs += neg ? (-c.coeffs).eval() : c.coeffs;
  }
  for (int i = 1; i <= g.arity; ++i) {
    const bool neg = (fm * gn + (i - 1) * fm) % 2 == 0;  // minus the swap term
    const DendCochain c = operad_compose(g, i, f);
    out.coeffs += neg ? (-c.coeffs).eval() : c.coeffs;
  }
  return out;
}

DendCochain dendriform_pi(const DendriformAlgebra& d) {
  DendCochain pi = DendCochain::zero(2, d.dim);
  pi.set_label_slice(1, Cochain{2, d.dim, d.dim, d.prec});
  pi.set_label_slice(2, Cochain{2, d.dim, d.dim, d.succ});
  return pi;
}

DendCochain dend_differential(const DendriformAlgebra& d, const DendCochain& f) {
  DendCochain out = dend_bracket(dendriform_pi(d), f);
  if (f.arity % 2 == 0) out.coeffs = -out.coeffs;  // (-1)^{n-1}
  return out;
}

DendCochain dend_s_action(const DendCochain& f, const Mat& inv) {
  DendCochain out = DendCochain::zero(f.arity, f.dim);
  for (int r = 1; r <= f.arity; ++r) out.set_label_slice(r, s_action(f.label_slice(f.arity - r + 1), inv, inv));
  return out;
}

Mat dend_s_matrix(int arity, Index dim, const Mat& inv) {
  const Index n = arity * ipow(dim, arity) * dim;
  Mat m(n, n);
  Vec unit = Vec::Zero(n);
  for (Index j = 0; j < n; ++j) {
    unit(j) = 1;
    m.col(j) = dend_s_action(DendCochain::from_flat(unit, arity, dim), inv).flatten();
    unit(j) = 0;
  }
  return m;
}

bool dend_is_involutive(const DendCochain& f, const Mat& inv) { return dend_s_action(f, inv) == f; }

std::vector<DendCochain> dend_involutive_basis(const DendriformAlgebra& d, int arity) {
  if (!d.inv) throw PreconditionError("involutive basis requires an involution on the dendriform algebra");
  const SubspaceBasis b = eigenspace_basis(dend_s_matrix(arity, d.dim, *d.inv), +1);
  std::vector<DendCochain> out;
  for (Index k = 0; k < b.dim(); ++k) out.push_back(DendCochain::from_flat(b.cols.col(k), arity, d.dim));
  return out;
}

std::vector<DegreeData> dend_complex_data(const DendriformAlgebra& d, int max_degree, Variant variant) {
  if (variant != Variant::ordinary && !d.inv)
    throw PreconditionError("involutive/skew dendriform cohomology requires an involution");
  std::vector<Mat> diffs;
  for (int n = 1; n <= max_degree; ++n) {
    const Index in_dim = n * ipow(d.dim, n) * d.dim;
    Mat m((n + 1) * ipow(d.dim, n + 1) * d.dim, in_dim);
    Vec unit = Vec::Zero(in_dim);
    for (Index j = 0; j < in_dim; ++j) {
      unit(j) = 1;
      m.col(j) = dend_differential(d, DendCochain::from_flat(unit, n, d.dim)).flatten();
      unit(j) = 0;
    }
    diffs.push_back(std::move(m));
  }
  std::vector<std::optional<SubspaceBasis>> bases(static_cast<std::size_t>(max_degree) + 1);
  if (variant != Variant::ordinary) {
    const int eig = variant == Variant::involutive ? +1 : -1;
    for (int n = 1; n <= max_degree + 1; ++n)
      bases[static_cast<std::size_t>(n - 1)] = eigenspace_basis(dend_s_matrix(n, d.dim, *d.inv), eig);
  }
  return analyze_complex(bases, diffs);
}

CohomologyReport dend_cohomology(const DendriformAlgebra& d, int max_degree, Variant variant) {
  return make_report(variant, dend_complex_data(d, max_degree, variant), /*first_degree=*/1);
}

DendCochain theta(const Cochain& p, const RBOperator& op) {
  const InvolutiveBimodule& m = op.bimodule;
  if (p.src_dim != m.dim || p.tgt_dim != op.algebra.dim || p.degree < 1)
    throw ShapeError("theta needs an A-valued cochain on M of degree >= 1");
  if (!is_involutive(p, m.inv, op.algebra.inv)) throw PreconditionError("theta requires an involutive cochain");

  const int n = p.degree;
  const Index dm = m.dim;
  DendCochain out = DendCochain::zero(n + 1, dm);
  std::vector<Index> u(static_cast<std::size_t>(n + 1));
  Cochain first = Cochain::zero(n + 1, dm, dm), last = Cochain::zero(n + 1, dm, dm);
  const bool neg = (n + 1) % 2 != 0;
  for (Index r = 0; r < first.rows(); ++r) {
    decode_tuple(r, dm, n + 1, u.data());
    {
      const auto val = p.coeffs.row(encode_tuple(u.data() + 1, dm, n));  // P(u_2..u_{n+1})
      for (Index k = 0; k < p.tgt_dim; ++k) {
        if (val(k).is_zero()) continue;
        const Rational c = neg ? Rational(-val(k)) : val(k);
        first.coeffs.row(r) += c * m.right.row(u[0] * p.tgt_dim + k);  // u_1 P(...)
      }
    }
    {
      const auto val = p.coeffs.row(encode_tuple(u.data(), dm, n));  // P(u_1..u_n)
      for (Index k = 0; k < p.tgt_dim; ++k) {
        if (val(k).is_zero()) continue;
        last.coeffs.row(r) += val(k) * m.left.row(k * dm + u[static_cast<std::size_t>(n)]);  // P(...) u_{n+1}
      }
    }
  }
  out.set_label_slice(1, first);
  out.set_label_slice(n + 1, last);
  internal_check(dend_is_involutive(out, m.inv), "theta image must be an involutive dendriform cochain");
  return out;
}

}  // namespace rbx
