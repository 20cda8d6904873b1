#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rbx/deformation.hpp"
#include "rbx/rota_baxter.hpp"

using namespace rbx;

TEST_CASE("check_relative_rb: fixtures pass, zero passes, identity on dual numbers fails") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    CHECK(check_relative_rb(f.algebra, f.bimodule, f.op).ok());
    CHECK(check_relative_rb(f.algebra, f.bimodule, Mat::Zero(f.algebra.dim, f.bimodule.dim)).ok());
  }
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const ValidationReport report = check_rb_on_algebra(a, Mat::Identity(2, 2));
  CHECK_FALSE(report.ok());
  // Witness at (1,1) in paper terms = basis pair (0,0): 1*1 = 1 but R(1*1 + 1*1) = 2.
  REQUIRE_FALSE(report.violations.empty());
  const auto& v = report.violations.front();
  CHECK(v.indices == std::vector<Index>{0, 0});
  CHECK(v.lhs(0) == Rational(1));
  CHECK(v.rhs(0) == Rational(2));
}

TEST_CASE("graph characterization agrees with the identity check") {
  oracles::Rng rng(21);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    CHECK(graph_check(f.algebra, f.bimodule, f.op));
    CHECK(graph_check(f.algebra, f.bimodule, Mat::Zero(f.algebra.dim, f.bimodule.dim)));
    for (int t = 0; t < 25; ++t) {
      const Mat cand = rng.matrix(f.algebra.dim, f.bimodule.dim, /*integral=*/true);
      CHECK(graph_check(f.algebra, f.bimodule, cand) == check_relative_rb(f.algebra, f.bimodule, cand).ok());
    }
  }
}

TEST_CASE("induced dendriform products on the dual-numbers fixture") {
  const auto f = fixtures::all()[0];
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
  const InducedStructures ind = induced_dendriform(op);
  // 1 prec 1 = 1*T(1) = eps; 1 succ 1 = T(1)*1 = eps; eps prec 1 = eps*eps = 0.
  CHECK(ind.prec(0, 1) == Rational(1));
  CHECK(ind.prec(0, 0) == Rational(0));
  CHECK(ind.succ(0, 1) == Rational(1));
  CHECK(is_zero(ind.prec.row(1 * 2 + 0)));
  // The star product is associative (dendriform sum).
  const InvolutiveAlgebra star = star_algebra(op, ind);
  CHECK(validate_algebra(star).ok());
}

TEST_CASE("induced bimodule on the dual-numbers fixture") {
  const auto f = fixtures::all()[0];
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
  const InducedStructures ind = induced_bimodule(op);
  // l_T(1,1) = T(1)*1 - T(1*1) = eps - eps = 0.
  CHECK(is_zero(ind.left.row(0 * 2 + 0)));
  // r_T(1, eps) = 1*T(eps) - T(eps) = 0.
  CHECK(is_zero(ind.right.row(0 * 2 + 1)));
}

TEST_CASE("T = 0 induces zero structures") {
  const auto f = fixtures::all()[1];
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, Mat::Zero(3, 3));
  const InducedStructures ind = induced_structures(op);
  CHECK(is_zero(ind.prec));
  CHECK(is_zero(ind.succ));
  CHECK(is_zero(ind.left));
  CHECK(is_zero(ind.right));
}

TEST_CASE("derived bracket: [[a,b]] = ab - ba and the MC equation") {
  const auto f = fixtures::all()[0];  // commutative, so [[a,b]] = 0
  oracles::Rng rng(22);
  const Cochain a0 = fixtures::random_cochain(rng, 0, f.bimodule.dim, f.algebra.dim);
  const Cochain b0 = fixtures::random_cochain(rng, 0, f.bimodule.dim, f.algebra.dim);
  CHECK(derived_bracket(a0, b0, f.algebra, f.bimodule).is_zero());

  for (const auto& fx : fixtures::all()) {
    CAPTURE(fx.name);
    const Cochain t{1, fx.bimodule.dim, fx.algebra.dim, fx.op.transpose()};
    CHECK(derived_bracket(t, t, fx.algebra, fx.bimodule).is_zero());
  }
}

TEST_CASE("derived bracket of a non-operator measures the defect") {
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const InvolutiveBimodule m = regular_bimodule(a);
  const Mat id = Mat::Identity(2, 2);
  const Cochain t{1, 2, 2, id.transpose()};
  const Cochain tt = derived_bracket(t, t, a, m);
  CHECK_FALSE(tt.is_zero());
  // [[T,T]](u,v) = 2( T(uT(v)) + T(T(u)v) - T(u)T(v) ) for degree-1 maps.
  for (Index p = 0; p < 2; ++p)
    for (Index q = 0; q < 2; ++q) {
      const Vec u = Vec::Unit(2, p), v = Vec::Unit(2, q);
      const Vec expect = Rational(2) * (id * (m.right_act(u, id * v) + m.left_act(id * u, v)) - a.product(id * u, id * v));
      CHECK(Vec(tt.coeffs.row(p * 2 + q).transpose()) == expect);
    }
}

TEST_CASE("derived bracket: explicit formula equals the semidirect double bracket") {
  oracles::Rng rng(23);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    for (int t = 0; t < 6; ++t) {
      const int dm = rng.int_in(0, 2), dn = rng.int_in(0, 2);
      const Cochain p = fixtures::random_cochain(rng, dm, f.bimodule.dim, f.algebra.dim);
      const Cochain q = fixtures::random_cochain(rng, dn, f.bimodule.dim, f.algebra.dim);
      CHECK(derived_bracket_explicit(p, q, f.algebra, f.bimodule) ==
            derived_bracket_semidirect(p, q, f.algebra, f.bimodule));
    }
  }
}

TEST_CASE("derived bracket is graded antisymmetric and restricts to involutive cochains") {
  oracles::Rng rng(24);
  for (const auto& f : fixtures::all()) {
    for (int t = 0; t < 5; ++t) {
      const int dm = rng.int_in(1, 2), dn = rng.int_in(1, 2);
      const Cochain p = fixtures::random_cochain(rng, dm, f.bimodule.dim, f.algebra.dim);
      const Cochain q = fixtures::random_cochain(rng, dn, f.bimodule.dim, f.algebra.dim);
      const Cochain pq = derived_bracket_explicit(p, q, f.algebra, f.bimodule);
      const Cochain qp = derived_bracket_explicit(q, p, f.algebra, f.bimodule);
      CHECK(pq == ((dm * dn) % 2 != 0 ? qp : -qp));

      const Cochain pi = fixtures::random_involutive_cochain(rng, dm, f.bimodule.dim, f.algebra.dim,
                                                             f.bimodule.inv, f.algebra.inv);
      const Cochain qi = fixtures::random_involutive_cochain(rng, dn, f.bimodule.dim, f.algebra.dim,
                                                             f.bimodule.inv, f.algebra.inv);
      CHECK(is_involutive(derived_bracket_explicit(pi, qi, f.algebra, f.bimodule), f.bimodule.inv, f.algebra.inv));
    }
  }
}

TEST_CASE("rb differential: d_T T = 0, degree-0 formula, d_T^2 = 0") {
  oracles::Rng rng(25);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);

    const Cochain t{1, f.bimodule.dim, f.algebra.dim, f.op.transpose()};
    CHECK(rb_differential(op, t).is_zero());

    // Degree 0: (d_T a)(u) = T(au - ua) - (a T(u) - T(u) a).
    const Cochain a0 = fixtures::random_cochain(rng, 0, f.bimodule.dim, f.algebra.dim);
    const Cochain da = rb_differential(op, a0);
    const Vec avec = a0.coeffs.row(0).transpose();
    for (Index p = 0; p < f.bimodule.dim; ++p) {
      const Vec u = Vec::Unit(f.bimodule.dim, p);
      const Vec tu = f.op * u;
      const Vec expect = f.op * (f.bimodule.left_act(avec, u) - f.bimodule.right_act(u, avec)) -
                         (f.algebra.product(avec, tu) - f.algebra.product(tu, avec));
      CHECK(Vec(da.coeffs.row(p).transpose()) == expect);
    }

    for (int deg = 0; deg <= 2; ++deg) {
      const Cochain c = fixtures::random_cochain(rng, deg, f.bimodule.dim, f.algebra.dim);
      CHECK(rb_differential(op, rb_differential(op, c)).is_zero());
    }
  }
}

TEST_CASE("sign relation d_T = (-1)^n delta_T on random cochains") {
  oracles::Rng rng(26);
  const auto f = fixtures::all()[0];
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
  for (int n = 0; n <= 3; ++n) {
    const Cochain c = fixtures::random_cochain(rng, n, f.bimodule.dim, f.algebra.dim);
    Cochain rhs = delta_t_hochschild(op, c);
    if (n % 2 != 0) rhs.coeffs = -rhs.coeffs;
    CHECK(rb_differential(op, c) == rhs);
    // delta o delta = 0 as well.
    CHECK(delta_t_hochschild(op, delta_t_hochschild(op, c)).is_zero());
  }
}

TEST_CASE("rb cohomology: T = 0 on the zero algebra has vanishing differential") {
  const InvolutiveAlgebra a = fixtures::zero_mult();
  const InvolutiveBimodule m = regular_bimodule(a);
  const RBOperator op = make_rb_operator(a, m, Mat::Zero(2, 2));
  const CohomologyReport report = rb_cohomology(op, 2, Variant::ordinary);
  for (const auto& d : report.degrees) {
    CHECK(d.dim_cohomology == d.dim_cochains);
    CHECK(d.dim_coboundaries == 0);
  }
}

TEST_CASE("rb cohomology splitting on all fixtures, degrees <= 2") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
    const auto ord = rb_cohomology(op, 2, Variant::ordinary);
    const auto inv = rb_cohomology(op, 2, Variant::involutive);
    const auto skew = rb_cohomology(op, 2, Variant::skew);
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(n);
      CHECK(ord.degrees[n].dim_cohomology ==
            inv.degrees[n].dim_cohomology + skew.degrees[n].dim_cohomology);
    }
  }
}

TEST_CASE("gauge transform: identity gauge, derivation gauge, rejections") {
  const auto f = fixtures::all()[0];
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);

  // B = 0 leaves T unchanged.
  CHECK(gauge_transform(op, Mat::Zero(2, 2)).matrix == op.matrix);

  // B(1) = 0, B(eps) = lambda eps is an involutive 1-cocycle; here
  // T o B o T = 0, so the transform returns T itself.
  Mat b = Mat::Zero(2, 2);
  b(1, 1) = Rational(3, 2);
  const RBOperator out = gauge_transform(op, b);
  CHECK(out.matrix == op.matrix);
  CHECK(check_relative_rb(f.algebra, f.bimodule, out.matrix).ok());

  // A non-cocycle is rejected before any inversion.
  Mat bad = Mat::Zero(2, 2);
  bad(0, 1) = 1;  // B(eps) = 1: delta B (eps, eps) = eps*1 + 1*eps != 0
  CHECK_THROWS_AS(gauge_transform(op, bad), GaugeError);
  try {
    gauge_transform(op, bad);
  } catch (const GaugeError& e) {
    CHECK(e.kind == GaugeError::Kind::not_a_cocycle);
  }

  // Non-involutive cocycles are rejected on the zero-multiplication fixture
  // (everything is a cocycle there, so involutivity is the only gate).
  const auto z = fixtures::all()[2];
  const RBOperator zop = make_rb_operator(z.algebra, z.bimodule, z.op);
  Mat noninv = Mat::Zero(2, 2);
  noninv(0, 0) = 1;  // does not commute with the swap involution
  try {
    gauge_transform(zop, noninv);
    CHECK(false);
  } catch (const GaugeError& e) {
    CHECK(e.kind == GaugeError::Kind::not_involutive);
  }

  // Singular id + B o T: on the zero-mult fixture T = id, pick B = -id
  // (equivariant, a cocycle since all products vanish).
  try {
    gauge_transform(zop, -Mat::Identity(2, 2));
    CHECK(false);
  } catch (const GaugeError& e) {
    CHECK(e.kind == GaugeError::Kind::singular);
    CHECK_FALSE(is_zero(e.certificate));
  }
}

TEST_CASE("gauge transforms along cocycle bases stay Rota-Baxter") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
    // Basis of involutive Hochschild 1-cocycles of (A, M).
    const Mat d1 = operator_matrix(1, f.algebra.dim, f.bimodule.dim, 2, f.algebra.dim, f.bimodule.dim,
                                   [&](const Cochain& c) { return hochschild_differential(f.algebra, f.bimodule, c); });
    const Mat s1 = s_matrix(1, f.algebra.dim, f.bimodule.dim, f.algebra.inv, f.bimodule.inv);
    const SubspaceBasis inv_basis = eigenspace_basis(s1, +1);
    const Mat cocycles = inv_basis.cols * kernel_matrix(d1 * inv_basis.cols);
    int transformed = 0;
    for (Index k = 0; k < cocycles.cols(); ++k) {
      const Mat b = Cochain::from_flat(cocycles.col(k), 1, f.algebra.dim, f.bimodule.dim).coeffs.transpose();
      const Mat check = Mat::Identity(f.bimodule.dim, f.bimodule.dim) + b * op.matrix;
      if (rank(check) < f.bimodule.dim) continue;
      const RBOperator out = gauge_transform(op, b);
      CHECK(check_relative_rb(f.algebra, f.bimodule, out.matrix).ok());
      CHECK(graph_check(f.algebra, f.bimodule, out.matrix));
      ++transformed;
    }
    CHECK(transformed > 0);
  }
}
