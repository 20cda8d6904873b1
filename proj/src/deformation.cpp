#include "rbx/deformation.hpp"

#include <string>

namespace rbx {

Cochain cochain_of_operator(const RBOperator& op, const Mat& t) {
  return {1, op.bimodule.dim, op.algebra.dim, t.transpose()};
}

Mat operator_of_cochain(const Cochain& c) { return c.coeffs.transpose(); }

DeformationSeries make_deformation_series(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                          const std::vector<Mat>& terms) {
  if (terms.empty()) throw ShapeError("a deformation series needs at least the order-0 term");
  for (const Mat& t : terms)
    if (t.rows() != a.dim || t.cols() != m.dim) throw ShapeError("series terms must be algebra_dim x module_dim");
  DeformationSeries s{make_rb_operator(a, m, terms[0]), {terms.begin() + 1, terms.end()}};
  return s;
}

ValidationReport check_deformation(const DeformationSeries& s) {
  const InvolutiveAlgebra& a = s.base.algebra;
  const InvolutiveBimodule& m = s.base.bimodule;
  ValidationReport report;
  for (int k = 1; k <= s.order(); ++k) {
    const Mat& tk = s.term(k);
    for (Index p = 0; p < m.dim; ++p) {
      const Vec u = Vec::Unit(m.dim, p);
      const Vec lhs = tk * m.star(u);
      const Vec rhs = a.star(tk * u);
      if (lhs != rhs) report.add("order " + std::to_string(k) + ": T_k(u*) = T_k(u)*", {p}, lhs, rhs);
    }

    // Bilinear defect of the order-k equation.
    Cochain defect = Cochain::zero(2, m.dim, a.dim);
    for (Index p = 0; p < m.dim; ++p)
      for (Index q = 0; q < m.dim; ++q) {
        const Vec u = Vec::Unit(m.dim, p), v = Vec::Unit(m.dim, q);
        Vec val = Vec::Zero(a.dim);
        for (int i = 0; i <= k; ++i) {
          const Mat& ti = s.term(i);
          const Mat& tj = s.term(k - i);
          val += a.product(ti * u, tj * v) - ti * (m.right_act(u, tj * v) + m.left_act(tj * u, v));
        }
        defect.coeffs.row(p * m.dim + q) = val.transpose();
        if (!rbx::is_zero(val))
          report.add("order " + std::to_string(k) + ": sum T_i(u)T_j(v) = sum T_i(uT_j(v) + T_j(u)v)", {p, q}, val,
                     Vec::Zero(a.dim));
      }

    // Same defect via d_T(T_k) + 1/2 sum_{i+j=k, i,j>=1} [[T_i, T_j]].
    Cochain bracket_defect = rb_differential(s.base, cochain_of_operator(s.base, tk));
    for (int i = 1; i <= k - 1; ++i) {
      const Cochain ci = cochain_of_operator(s.base, s.term(i));
      const Cochain cj = cochain_of_operator(s.base, s.term(k - i));
      bracket_defect = bracket_defect + Rational(1, 2) * derived_bracket_explicit(ci, cj, a, m);
    }
    internal_check(defect == -bracket_defect,
                   "order-k deformation equation: bilinear and bracket formulations disagree");
  }
  return report;
}

namespace {

void require_deformation_ok(const DeformationSeries& s, const char* who) {
  const ValidationReport r = check_deformation(s);
  if (!r.ok())
    throw PreconditionError(std::string(who) + ": deformation equations violated (" + r.violations.front().axiom + ")");
}

}  // namespace

Infinitesimal infinitesimal(const DeformationSeries& s) {
  if (s.order() < 1) throw PreconditionError("infinitesimal: series has no order-1 term");
  // Only orders <= 1 matter here.
  DeformationSeries trunc{s.base, {s.higher.front()}};
  const ValidationReport r = check_deformation(trunc);
  if (!r.ok()) throw PreconditionError("infinitesimal: order-1 equation fails (" + r.violations.front().axiom + ")");

  const Cochain t1 = cochain_of_operator(s.base, s.term(1));
  internal_check(rb_differential(s.base, t1).is_zero(), "infinitesimal must be a d_T-cocycle");
  const auto data = rb_complex_data(s.base, 1, Variant::involutive);
  return {t1, class_coordinates(data[1], t1.flatten())};
}

ValidationReport check_equivalence(const DeformationSeries& s, const DeformationSeries& s2, const EquivalenceData& e) {
  const InvolutiveAlgebra& a = s.base.algebra;
  const InvolutiveBimodule& m = s.base.bimodule;
  if (e.a.size() != a.dim) throw ShapeError("equivalence element must live in A");
  if (a.star(e.a) != -e.a) throw PreconditionError("equivalence element must satisfy a* = -a");

  // phi_t = id + t(ad^l_a - ad^r_a) + sum_{j>=2} t^j phi_j, same pattern for psi_t.
  std::vector<Mat> phi{Mat::Identity(a.dim, a.dim)}, psi{Mat::Identity(m.dim, m.dim)};
  {
    Mat phi1 = Mat::Zero(a.dim, a.dim), psi1 = Mat::Zero(m.dim, m.dim);
    for (Index j = 0; j < a.dim; ++j)
      phi1.col(j) = a.product(e.a, a.basis(j)) - a.product(a.basis(j), e.a);
    for (Index q = 0; q < m.dim; ++q) {
      const Vec u = Vec::Unit(m.dim, q);
      psi1.col(q) = m.left_act(e.a, u) - m.right_act(u, e.a);
    }
    phi.push_back(std::move(phi1));
    psi.push_back(std::move(psi1));
  }
  for (const Mat& pj : e.phi) {
    if (pj.rows() != a.dim || pj.cols() != a.dim) throw ShapeError("phi_j must be dim(A) x dim(A)");
    if (pj * a.inv != a.inv * pj) throw PreconditionError("phi_j must be involutive: phi(a*) = phi(a)*");
    phi.push_back(pj);
  }
  for (const Mat& pj : e.psi) {
    if (pj.rows() != m.dim || pj.cols() != m.dim) throw ShapeError("psi_j must be dim(M) x dim(M)");
    if (pj * m.inv != m.inv * pj) throw PreconditionError("psi_j must be involutive: psi(u*) = psi(u)*");
    psi.push_back(pj);
  }

  const int max_order = std::min({s.order(), s2.order(), e.order});
  const auto phi_at = [&](int j) { return j < static_cast<int>(phi.size()) ? phi[static_cast<std::size_t>(j)] : Mat::Zero(a.dim, a.dim); };
  const auto psi_at = [&](int j) { return j < static_cast<int>(psi.size()) ? psi[static_cast<std::size_t>(j)] : Mat::Zero(m.dim, m.dim); };

  ValidationReport report;
  for (int k = 0; k <= max_order; ++k) {
    const std::string ord = "order " + std::to_string(k);

    for (Index x = 0; x < a.dim; ++x)
      for (Index y = 0; y < a.dim; ++y) {
        Vec lhs = Vec::Zero(a.dim);
        for (int i = 0; i <= k; ++i) lhs += a.product(phi_at(i) * a.basis(x), phi_at(k - i) * a.basis(y));
        const Vec rhs = phi_at(k) * a.product(x, y);
        if (lhs != rhs) report.add(ord + ": phi_t(a)phi_t(b) = phi_t(ab)", {x, y}, lhs, rhs);
      }

    {
      Mat lhs = Mat::Zero(a.dim, m.dim), rhs = Mat::Zero(a.dim, m.dim);
      for (int i = 0; i <= k; ++i) {
        lhs += s2.term(i) * psi_at(k - i);
        rhs += phi_at(i) * s.term(k - i);
      }
      if (lhs != rhs)
        for (Index q = 0; q < m.dim; ++q)
          if (Vec(lhs.col(q)) != Vec(rhs.col(q)))
            report.add(ord + ": T'_t o psi_t = phi_t o T_t", {q}, lhs.col(q), rhs.col(q));
    }

    for (Index x = 0; x < a.dim; ++x)
      for (Index q = 0; q < m.dim; ++q) {
        const Vec u = Vec::Unit(m.dim, q);
        const Vec lhs = psi_at(k) * m.left_act(a.basis(x), u);
        Vec rhs = Vec::Zero(m.dim);
        for (int i = 0; i <= k; ++i) rhs += m.left_act(phi_at(i) * a.basis(x), psi_at(k - i) * u);
        if (lhs != rhs) report.add(ord + ": psi_t(au) = phi_t(a)psi_t(u)", {x, q}, lhs, rhs);

        const Vec lhs2 = psi_at(k) * m.right_act(u, a.basis(x));
        Vec rhs2 = Vec::Zero(m.dim);
        for (int i = 0; i <= k; ++i) rhs2 += m.right_act(psi_at(i) * u, phi_at(k - i) * a.basis(x));
        if (lhs2 != rhs2) report.add(ord + ": psi_t(ua) = psi_t(u)phi_t(a)", {x, q}, lhs2, rhs2);
      }
  }

  // Order-1 byproduct: the intertwining condition at k = 1 is exactly
  // T_1 - T_1' = delta_T(a).
  if (max_order >= 1) {
    const Cochain a0{0, m.dim, a.dim, e.a.transpose()};
    const Mat delta_a = operator_of_cochain(delta_t_hochschild(s.base, a0));
    const bool direct = s.term(1) - s2.term(1) == delta_a;
    bool reported = false;
    for (const auto& v : report.violations) reported = reported || v.axiom == "order 1: T'_t o psi_t = phi_t o T_t";
    internal_check(direct == !reported, "order-1 intertwining and T_1 - T_1' = delta_T(a) must agree");
  }
  return report;
}

ObstructionResult obstruction(const DeformationSeries& s) {
  require_deformation_ok(s, "obstruction");
  const InvolutiveAlgebra& a = s.base.algebra;
  const InvolutiveBimodule& m = s.base.bimodule;
  const int next = s.order() + 1;
  Cochain ob = Cochain::zero(2, m.dim, a.dim);
  for (int i = 1; i <= next - 1; ++i) {
    const int j = next - i;
    if (j > s.order()) continue;
    ob = ob - Rational(1, 2) * derived_bracket(cochain_of_operator(s.base, s.term(i)),
                                               cochain_of_operator(s.base, s.term(j)), a, m);
  }
  internal_check(rb_differential(s.base, ob).is_zero(), "obstruction must be a d_T 2-cocycle");
  internal_check(is_involutive(ob, m.inv, a.inv), "obstruction must be an involutive cochain");
  const auto data = rb_complex_data(s.base, 2, Variant::involutive);
  return {ob, class_coordinates(data[2], ob.flatten())};
}

ExtensionResult try_extend(const DeformationSeries& s) {
  const ObstructionResult ob = obstruction(s);
  const bool trivial_class = [&] {
    for (Index i = 0; i < ob.class_coords.size(); ++i)
      if (!ob.class_coords(i).is_zero()) return false;
    return true;
  }();

  // Solve d_T(T_{N+1}) = Ob inside the involutive degree-1 cochains.
  const RBOperator& op = s.base;
  const SubspaceBasis b1 = eigenspace_basis(rb_s_matrix(op, 1), +1);
  const Mat d1 = operator_matrix(1, op.bimodule.dim, op.algebra.dim, 2, op.bimodule.dim, op.algebra.dim,
                                 [&](const Cochain& f) { return rb_differential(op, f); });
  const auto x = solve_matrix(d1 * b1.cols, ob.cocycle.flatten());
  internal_check(x.has_value() == trivial_class, "extension solvability must match obstruction class vanishing");
  if (!x) return {std::nullopt, ob.class_coords};

  const Mat term = operator_of_cochain(
      Cochain::from_flat(b1.cols * x->col(0), 1, op.bimodule.dim, op.algebra.dim));
  DeformationSeries extended = s;
  extended.higher.push_back(term);
  require_deformation_ok(extended, "try_extend (re-validation)");
  return {term, ob.class_coords};
}

}  // namespace rbx
