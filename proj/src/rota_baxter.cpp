#include "rbx/rota_baxter.hpp"

#include <utility>

#include "rbx/dendriform.hpp"

namespace rbx {

ValidationReport check_relative_rb(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Mat& t) {
  if (t.rows() != a.dim || t.cols() != m.dim) throw ShapeError("operator must be algebra_dim x module_dim");
  ValidationReport report;
  for (Index p = 0; p < m.dim; ++p) {
    const Vec u = Vec::Unit(m.dim, p);
    const Vec lhs = t * m.star(u);
    const Vec rhs = a.star(t * u);
    if (lhs != rhs) report.add("T(u*) = T(u)*", {p}, lhs, rhs);
  }
  for (Index p = 0; p < m.dim; ++p)
    for (Index q = 0; q < m.dim; ++q) {
      const Vec u = Vec::Unit(m.dim, p), v = Vec::Unit(m.dim, q);
      const Vec tu = t * u, tv = t * v;
      const Vec lhs = a.product(tu, tv);
      const Vec rhs = t * (m.right_act(u, tv) + m.left_act(tu, v));
      if (lhs != rhs) report.add("T(u)T(v) = T(uT(v) + T(u)v)", {p, q}, lhs, rhs);
    }
  return report;
}

ValidationReport check_rb_on_algebra(const InvolutiveAlgebra& a, const Mat& r) {
  return check_relative_rb(a, regular_bimodule(a), r);
}

RBOperator make_rb_operator(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, Mat t) {
  const ValidationReport report = check_relative_rb(a, m, t);
  if (!report.ok()) throw PreconditionError("not a relative Rota-Baxter operator (first failure: " + report.violations.front().axiom + ")");
  return {a, m, std::move(t)};
}

bool graph_check(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Mat& t) {
  if (t.rows() != a.dim || t.cols() != m.dim) throw ShapeError("operator must be algebra_dim x module_dim");
  const InvolutiveAlgebra sd = semidirect_product(a, m);
  Mat graph = Mat::Zero(sd.dim, m.dim);
  graph.topRows(a.dim) = t;
  graph.bottomRows(m.dim) = Mat::Identity(m.dim, m.dim);
  for (Index p = 0; p < m.dim; ++p) {
    if (!solve(graph, sd.star(graph.col(p)))) return false;
    for (Index q = 0; q < m.dim; ++q)
      if (!solve(graph, sd.product(graph.col(p), graph.col(q)))) return false;
  }
  return true;
}

InducedStructures induced_structures(const RBOperator& op) {
  const InvolutiveAlgebra& a = op.algebra;
  const InvolutiveBimodule& m = op.bimodule;
  const Mat& t = op.matrix;
  const Index da = a.dim, dm = m.dim;
  InducedStructures ind;
  ind.prec = Mat::Zero(dm * dm, dm);
  ind.succ = Mat::Zero(dm * dm, dm);
  ind.left = Mat::Zero(dm * da, da);
  ind.right = Mat::Zero(da * dm, da);
  for (Index p = 0; p < dm; ++p)
    for (Index q = 0; q < dm; ++q) {
      const Vec u = Vec::Unit(dm, p), v = Vec::Unit(dm, q);
      ind.prec.row(p * dm + q) = m.right_act(u, t * v).transpose();
      ind.succ.row(p * dm + q) = m.left_act(t * u, v).transpose();
    }
  ind.star = ind.prec + ind.succ;
  for (Index p = 0; p < dm; ++p)
    for (Index i = 0; i < da; ++i) {
      const Vec u = Vec::Unit(dm, p), x = a.basis(i);
      ind.left.row(p * da + i) = (a.product(t * u, x) - t * m.right_act(u, x)).transpose();
      ind.right.row(i * dm + p) = (a.product(x, t * u) - t * m.left_act(x, u)).transpose();
    }
  return ind;
}

InvolutiveAlgebra star_algebra(const RBOperator& op, const InducedStructures& ind) {
  return {op.bimodule.dim, ind.star, op.bimodule.inv};
}

InvolutiveBimodule coefficient_bimodule(const RBOperator& op, const InducedStructures& ind) {
  InvolutiveBimodule out;
  out.dim = op.algebra.dim;
  out.algebra_dim = op.bimodule.dim;
  out.left = ind.left;
  out.right = ind.right;
  out.inv = op.algebra.inv;
  return out;
}

InducedStructures induced_dendriform(const RBOperator& op) {
  InducedStructures ind = induced_structures(op);
  const DendriformAlgebra d{op.bimodule.dim, ind.prec, ind.succ, op.bimodule.inv};
  const ValidationReport report = validate_dendriform(d);
  internal_check(report.ok(), "induced dendriform products violate the dendriform axioms");
  return ind;
}

InducedStructures induced_bimodule(const RBOperator& op) {
  InducedStructures ind = induced_structures(op);
  const InvolutiveAlgebra star = star_algebra(op, ind);
  internal_check(validate_algebra(star).ok(), "(M, star) is not an involutive algebra");
  internal_check(validate_bimodule(star, coefficient_bimodule(op, ind)).ok(),
                 "(A, l_T, r_T) is not an involutive bimodule over (M, star)");
  const InvolutiveAlgebra& a = op.algebra;
  const InvolutiveBimodule& m = op.bimodule;
  for (Index p = 0; p < m.dim; ++p)
    for (Index i = 0; i < a.dim; ++i) {
      const Vec lhs = a.star(ind.left.row(p * a.dim + i).transpose());
      Vec rhs = Vec::Zero(a.dim);
      const Vec us = m.star(Vec::Unit(m.dim, p)), as = a.star(a.basis(i));
      for (Index j = 0; j < a.dim; ++j) {
        if (as(j).is_zero()) continue;
        for (Index q = 0; q < m.dim; ++q) {
          if (us(q).is_zero()) continue;
          rhs += as(j) * us(q) * ind.right.row(j * m.dim + q).transpose();
        }
      }
      internal_check(lhs == rhs, "l_T(u,a)* = r_T(a*,u*) fails");
    }
  return ind;
}

namespace {

// Shared expansion for the four action sums of the derived bracket.
// The value of `inner` on its argument block acts on one neighbour
// argument (left or right module action), and `outer` is evaluated with
// the result in one slot.
void accumulate_action_terms(Cochain& out, const Cochain& outer, const Cochain& inner,
                             const InvolutiveBimodule& m, bool act_left, int base_sign_parity,
                             int per_index_parity, const std::vector<Index>& u, Index row) {
  const int deg_outer = outer.degree, deg_inner = inner.degree;
  const Index dm = m.dim;
  std::vector<Index> args(static_cast<std::size_t>(deg_outer));
  for (int i = 1; i <= deg_outer; ++i) {
    // Arguments consumed: u[i-1 .. i+deg_inner-1] in total; the module
    // element sits on the acted side.
    const Index acted = act_left ? u[static_cast<std::size_t>(i + deg_inner - 1)] : u[static_cast<std::size_t>(i - 1)];
    const Index inner_base = act_left ? static_cast<Index>(i - 1) : static_cast<Index>(i);
    const auto ival = inner.coeffs.row(encode_tuple(u.data() + inner_base, dm, deg_inner));
    // Combination in M: inner-value (in A) acting on e_acted.
    Vec comb = Vec::Zero(dm);
    for (Index k = 0; k < inner.tgt_dim; ++k) {
      if (ival(k).is_zero()) continue;
      if (act_left)
        comb += ival(k) * m.left.row(k * dm + acted).transpose();
      else
        comb += ival(k) * m.right.row(acted * inner.tgt_dim + k).transpose();
    }
    for (int j = 0; j < i - 1; ++j) args[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)];
    for (int j = i; j < deg_outer; ++j) args[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j + deg_inner)];
    const bool neg = (base_sign_parity + i * per_index_parity) % 2 != 0;
    for (Index q = 0; q < dm; ++q) {
      if (comb(q).is_zero()) continue;
      args[static_cast<std::size_t>(i - 1)] = q;
      const Rational c = neg ? Rational(-comb(q)) : comb(q);
      out.coeffs.row(row) += c * outer.coeffs.row(encode_tuple(args.data(), dm, deg_outer));
    }
  }
}

}  // namespace

Cochain derived_bracket_explicit(const Cochain& p, const Cochain& q,
                                 const InvolutiveAlgebra& a, const InvolutiveBimodule& m) {
  if (p.src_dim != m.dim || p.tgt_dim != a.dim || q.src_dim != m.dim || q.tgt_dim != a.dim)
    throw ShapeError("derived bracket needs A-valued cochains on M");
  const int dm_deg = p.degree, dn_deg = q.degree;
  const Index dm = m.dim, da = a.dim;
  Cochain out = Cochain::zero(dm_deg + dn_deg, dm, da);
  const int mn = dm_deg * dn_deg;
  std::vector<Index> u(static_cast<std::size_t>(dm_deg + dn_deg));
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, dm, dm_deg + dn_deg, u.data());

    // sum_i (-1)^{(i-1)n} P(..., Q(u_i..u_{i+n-1}) u_{i+n}, ...)
    accumulate_action_terms(out, p, q, m, /*act_left=*/true, dn_deg, dn_deg, u, r);
    // - sum_i (-1)^{in} P(..., u_i Q(u_{i+1}..u_{i+n}), ...)
    accumulate_action_terms(out, p, q, m, /*act_left=*/false, 1, dn_deg, u, r);
    // - (-1)^{mn} sum_i (-1)^{(i-1)m} Q(..., P(...) u_{i+m}, ...)
    accumulate_action_terms(out, q, p, m, /*act_left=*/true, mn + 1 + dm_deg, dm_deg, u, r);
    // + (-1)^{mn} sum_i (-1)^{im} Q(..., u_i P(...), ...)
    accumulate_action_terms(out, q, p, m, /*act_left=*/false, mn, dm_deg, u, r);

    // (-1)^{mn} P(u_1..u_m) Q(u_{m+1}..u_{m+n}) - Q(u_1..u_n) P(u_{n+1}..u_{m+n})
    {
      const auto pv = p.coeffs.row(encode_tuple(u.data(), dm, dm_deg));
      const auto qv = q.coeffs.row(encode_tuple(u.data() + dm_deg, dm, dn_deg));
      const bool neg = mn % 2 != 0;
      for (Index k = 0; k < da; ++k) {
        if (pv(k).is_zero()) continue;
        for (Index l = 0; l < da; ++l) {
          if (qv(l).is_zero()) continue;
          const Rational c = pv(k) * qv(l);
          out.coeffs.row(r) += (neg ? Rational(-c) : c) * a.mul.row(k * da + l);
        }
      }
      const auto qv2 = q.coeffs.row(encode_tuple(u.data(), dm, dn_deg));
      const auto pv2 = p.coeffs.row(encode_tuple(u.data() + dn_deg, dm, dm_deg));
      for (Index k = 0; k < da; ++k) {
        if (qv2(k).is_zero()) continue;
        for (Index l = 0; l < da; ++l) {
          if (pv2(l).is_zero()) continue;
          out.coeffs.row(r) -= qv2(k) * pv2(l) * a.mul.row(k * da + l);
        }
      }
    }
  }
  return out;
}

namespace {

Cochain lift_to_semidirect(const Cochain& c, Index da, Index dm) {
  const Index d = da + dm;
  Cochain out = Cochain::zero(c.degree, d, d);
  std::vector<Index> u(static_cast<std::size_t>(c.degree));
  for (Index r = 0; r < c.rows(); ++r) {
    decode_tuple(r, dm, c.degree, u.data());
    for (auto& x : u) x += da;  // M-block indices in A (+) M
    out.coeffs.row(encode_tuple(u.data(), d, c.degree)).head(da) = c.coeffs.row(r);
  }
  return out;
}

}  // namespace

Cochain derived_bracket_semidirect(const Cochain& p, const Cochain& q,
                                   const InvolutiveAlgebra& a, const InvolutiveBimodule& m) {
  const Index da = a.dim, dm = m.dim;
  const InvolutiveAlgebra sd = semidirect_product(a, m);
  const Cochain mu_hat{2, sd.dim, sd.dim, sd.mul};
  const Cochain inner = gerstenhaber_bracket(mu_hat, lift_to_semidirect(p, da, dm));
  const Cochain outer = gerstenhaber_bracket(inner, lift_to_semidirect(q, da, dm));
  Cochain out = Cochain::zero(p.degree + q.degree, dm, da);
  std::vector<Index> u(static_cast<std::size_t>(out.degree));
  const bool neg = p.degree % 2 != 0;
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, dm, out.degree, u.data());
    for (auto& x : u) x += da;
    const auto row = outer.coeffs.row(encode_tuple(u.data(), sd.dim, out.degree)).head(da);
    out.coeffs.row(r) = neg ? (-row).eval() : row;
  }
  return out;
}

Cochain derived_bracket(const Cochain& p, const Cochain& q,
                        const InvolutiveAlgebra& a, const InvolutiveBimodule& m) {
  Cochain out = derived_bracket_explicit(p, q, a, m);
  internal_check(out == derived_bracket_semidirect(p, q, a, m),
                 "derived bracket: explicit expansion and semidirect double bracket disagree");
  return out;
}

Cochain delta_t_hochschild(const RBOperator& op, const Cochain& f) {
  const InducedStructures ind = induced_structures(op);
  return hochschild_differential(star_algebra(op, ind), coefficient_bimodule(op, ind), f);
}

Cochain rb_differential(const RBOperator& op, const Cochain& f) {
  const Cochain t_cochain{1, op.bimodule.dim, op.algebra.dim, op.matrix.transpose()};
  Cochain out = derived_bracket_explicit(t_cochain, f, op.algebra, op.bimodule);
  Cochain hoch = delta_t_hochschild(op, f);
  if (f.degree % 2 != 0) hoch.coeffs = -hoch.coeffs;
  internal_check(out == hoch, "d_T != (-1)^n delta_T");
  if (is_involutive(f, op.bimodule.inv, op.algebra.inv))
    internal_check(is_involutive(out, op.bimodule.inv, op.algebra.inv),
                   "d_T does not preserve the involutive subspace");
  return out;
}

Mat rb_s_matrix(const RBOperator& op, int degree) {
  return s_matrix(degree, op.bimodule.dim, op.algebra.dim, op.bimodule.inv, op.algebra.inv);
}

std::vector<DegreeData> rb_complex_data(const RBOperator& op, int max_degree, Variant variant) {
  const Index dm = op.bimodule.dim, da = op.algebra.dim;
  std::vector<Mat> diffs;
  for (int n = 0; n <= max_degree; ++n)
    diffs.push_back(operator_matrix(n, dm, da, n + 1, dm, da,
                                    [&](const Cochain& f) { return rb_differential(op, f); }));
  std::vector<std::optional<SubspaceBasis>> bases(static_cast<std::size_t>(max_degree) + 2);
  if (variant != Variant::ordinary) {
    const int eig = variant == Variant::involutive ? +1 : -1;
    for (int n = 0; n <= max_degree + 1; ++n)
      bases[static_cast<std::size_t>(n)] = eigenspace_basis(rb_s_matrix(op, n), eig);
  }
  return analyze_complex(bases, diffs);
}

CohomologyReport rb_cohomology(const RBOperator& op, int max_degree, Variant variant) {
  return make_report(variant, rb_complex_data(op, max_degree, variant));
}

RBOperator gauge_transform(const RBOperator& op, const Mat& b) {
  const InvolutiveAlgebra& a = op.algebra;
  const InvolutiveBimodule& m = op.bimodule;
  if (b.rows() != m.dim || b.cols() != a.dim) throw ShapeError("cocycle must be module_dim x algebra_dim");

  for (Index i = 0; i < a.dim; ++i) {
    const Vec lhs = b * a.star(a.basis(i));
    const Vec rhs = m.star(b * a.basis(i));
    if (lhs != rhs)
      throw GaugeError(GaugeError::Kind::not_involutive,
                       "B is not involutive: B(a*) != B(a)* at basis index " + std::to_string(i), lhs - rhs);
  }
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j) {
      const Vec val = m.left_act(a.basis(i), b * a.basis(j)) - b * a.product(i, j) +
                      m.right_act(b * a.basis(i), a.basis(j));
      if (!rbx::is_zero(val))
        throw GaugeError(GaugeError::Kind::not_a_cocycle,
                         "B is not a Hochschild 1-cocycle: (delta B)(e_" + std::to_string(i) + ", e_" +
                             std::to_string(j) + ") != 0",
                         val);
    }

  const Mat k = Mat::Identity(m.dim, m.dim) + b * op.matrix;
  const Mat ker = kernel_matrix(k);
  if (ker.cols() > 0)
    throw GaugeError(GaugeError::Kind::singular, "id + B o T is singular; kernel certificate attached", ker.col(0));
  const Mat kinv = *inverse(k);

  RBOperator out{a, m, op.matrix * kinv};
  internal_check(check_relative_rb(a, m, out.matrix).ok(), "gauge transform is not a relative Rota-Baxter operator");
  return out;
}

}  // namespace rbx
