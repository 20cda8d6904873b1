#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rbx/dendriform.hpp"
#include "rbx/rota_baxter.hpp"

using namespace rbx;

namespace {

DendriformAlgebra induced_fixture_dendriform(const fixtures::Fixture& f) {
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
  const InducedStructures ind = induced_dendriform(op);
  return {op.bimodule.dim, ind.prec, ind.succ, op.bimodule.inv};
}

DendCochain random_dend(oracles::Rng& rng, int arity, Index dim) {
  DendCochain c = DendCochain::zero(arity, dim);
  for (Index r = 0; r < c.coeffs.rows(); ++r)
    for (Index k = 0; k < dim; ++k) c.coeffs(r, k) = rng.rational(3, 2);
  return c;
}

DendCochain random_involutive_dend(oracles::Rng& rng, int arity, Index dim, const Mat& inv) {
  const DendCochain c = random_dend(rng, arity, dim);
  return Rational(1, 2) * (c + dend_s_action(c, inv));
}

}  // namespace

TEST_CASE("validate_dendriform: zero products, induced fixtures, and a broken magma") {
  DendriformAlgebra zero{2, Mat::Zero(4, 2), Mat::Zero(4, 2), std::nullopt};
  CHECK(validate_dendriform(zero).ok());

  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    CHECK(validate_dendriform(induced_fixture_dendriform(f)).ok());
  }

  // prec = succ = a non-associative magma product fails.
  DendriformAlgebra broken{2, Mat::Zero(4, 2), Mat::Zero(4, 2), std::nullopt};
  broken.prec(0 * 2 + 0, 1) = 1;  // x*x = y
  broken.prec(1 * 2 + 0, 0) = 1;  // y*x = x
  broken.succ = broken.prec;
  CHECK_FALSE(validate_dendriform(broken).ok());
}

TEST_CASE("operad composition: unit, the instantiated three-case example, associativity") {
  oracles::Rng rng(31);
  const Index dim = 2;

  DendCochain unit = DendCochain::zero(1, dim);
  unit.set_label_slice(1, Cochain{1, dim, dim, Mat::Identity(dim, dim)});

  for (int t = 0; t < 4; ++t) {
    const DendCochain f = random_dend(rng, rng.int_in(1, 3), dim);
    for (int i = 1; i <= f.arity; ++i) CHECK(operad_compose(f, i, unit) == f);
    CHECK(operad_compose(unit, 1, f) == f);
  }

  // m = n = 2, i = 1, r = 3: third case, f([2]; g([1]+[2]; a1, a2), a3).
  const DendCochain f = random_dend(rng, 2, dim);
  const DendCochain g = random_dend(rng, 2, dim);
  const DendCochain fg = operad_compose(f, 1, g);
  const Cochain gsum = g.label_slice(1) + g.label_slice(2);
  CHECK(fg.label_slice(3) == compose_at(f.label_slice(2), 1, gsum));

  // Operad associativity: (f o_i g) o_{i+j-1} h = f o_i (g o_j h).
  for (int t = 0; t < 6; ++t) {
    const DendCochain a = random_dend(rng, rng.int_in(1, 2), dim);
    const DendCochain b = random_dend(rng, rng.int_in(1, 2), dim);
    const DendCochain c = random_dend(rng, rng.int_in(1, 2), dim);
    for (int i = 1; i <= a.arity; ++i)
      for (int j = 1; j <= b.arity; ++j)
        CHECK(operad_compose(operad_compose(a, i, b), i + j - 1, c) == operad_compose(a, i, operad_compose(b, j, c)));
  }
}

TEST_CASE("pi is a Maurer-Cartan element exactly when the axioms hold") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DendriformAlgebra d = induced_fixture_dendriform(f);
    CHECK(dend_bracket(dendriform_pi(d), dendriform_pi(d)).is_zero());
  }
  DendriformAlgebra broken{2, Mat::Zero(4, 2), Mat::Zero(4, 2), std::nullopt};
  broken.prec(0, 1) = 1;
  broken.prec(1 * 2 + 0, 0) = 1;
  broken.succ = broken.prec;
  CHECK_FALSE(dend_bracket(dendriform_pi(broken), dendriform_pi(broken)).is_zero());
}

TEST_CASE("dend bracket graded antisymmetry") {
  oracles::Rng rng(32);
  for (int t = 0; t < 8; ++t) {
    const DendCochain f = random_dend(rng, rng.int_in(1, 3), 2);
    const DendCochain g = random_dend(rng, rng.int_in(1, 3), 2);
    const int m = f.arity - 1, n = g.arity - 1;
    const DendCochain fg = dend_bracket(f, g);
    const DendCochain gf = dend_bracket(g, f);
    CHECK(fg == ((m * n) % 2 != 0 ? gf : Rational(-1) * gf));
  }
}

TEST_CASE("dend differential squares to zero, arity <= 3") {
  oracles::Rng rng(33);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DendriformAlgebra d = induced_fixture_dendriform(f);
    CHECK(dend_differential(d, dendriform_pi(d)).is_zero());  // MC element
    for (int arity = 1; arity <= 3; ++arity) {
      const DendCochain c = random_dend(rng, arity, d.dim);
      CHECK(dend_differential(d, dend_differential(d, c)).is_zero());
      CHECK(dend_differential(d, DendCochain::zero(arity, d.dim)).is_zero());
    }
  }
}

TEST_CASE("label involution: S^2 = id, arity-1 case, eigenspace dimension count") {
  oracles::Rng rng(34);
  for (const auto& f : fixtures::all()) {
    const DendriformAlgebra d = induced_fixture_dendriform(f);
    const Mat& inv = *d.inv;
    for (int arity = 1; arity <= 3; ++arity) {
      const DendCochain c = random_dend(rng, arity, d.dim);
      CHECK(dend_s_action(dend_s_action(c, inv), inv) == c);
    }
    // arity 1: label reversal is trivial; condition is f(a)* = f(a*).
    const DendCochain c1 = random_dend(rng, 1, d.dim);
    const Cochain slice = c1.label_slice(1);
    CHECK((dend_s_action(c1, inv) == c1) == (is_involutive(slice, inv, inv)));

    // dim iC^n + dim skew = n * dim^{n+1}.
    for (int arity = 1; arity <= 2; ++arity) {
      const Mat s = dend_s_matrix(arity, d.dim, inv);
      const Index plus = eigenspace_basis(s, +1).dim();
      const Index minus = eigenspace_basis(s, -1).dim();
      CHECK(plus + minus == arity * ipow(d.dim, arity) * d.dim);
    }
  }
}

TEST_CASE("pi_T is an involutive dendriform cochain; delta preserves the subspace") {
  oracles::Rng rng(35);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DendriformAlgebra d = induced_fixture_dendriform(f);
    CHECK(dend_is_involutive(dendriform_pi(d), *d.inv));
    for (int arity = 1; arity <= 2; ++arity) {
      const DendCochain c = random_involutive_dend(rng, arity, d.dim, *d.inv);
      CHECK(dend_is_involutive(dend_differential(d, c), *d.inv));
    }
    for (const DendCochain& b : dend_involutive_basis(d, 2)) CHECK(dend_is_involutive(b, *d.inv));
  }
}

TEST_CASE("dend cohomology: zero products give dim O(n); splitting holds") {
  DendriformAlgebra zero{2, Mat::Zero(4, 2), Mat::Zero(4, 2), Mat::Identity(2, 2)};
  const CohomologyReport r = dend_cohomology(zero, 3, Variant::ordinary);
  REQUIRE(r.degrees.size() == 3);
  for (const auto& deg : r.degrees) {
    CHECK(deg.dim_cohomology == deg.dim_cochains);
    CHECK(deg.dim_cochains == deg.degree * ipow(2, deg.degree) * 2);
  }

  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DendriformAlgebra d = induced_fixture_dendriform(f);
    const auto ord = dend_cohomology(d, 3, Variant::ordinary);
    const auto inv = dend_cohomology(d, 3, Variant::involutive);
    const auto skew = dend_cohomology(d, 3, Variant::skew);
    for (std::size_t n = 0; n < ord.degrees.size(); ++n) {
      CHECK(ord.degrees[n].dim_cohomology ==
            inv.degrees[n].dim_cohomology + skew.degrees[n].dim_cohomology);
    }
  }
}

TEST_CASE("theta: instantiation at n = 1 gives pi_T; zero maps to zero") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
    const InducedStructures ind = induced_dendriform(op);
    const DendriformAlgebra d{op.bimodule.dim, ind.prec, ind.succ, op.bimodule.inv};

    const Cochain t{1, f.bimodule.dim, f.algebra.dim, f.op.transpose()};
    CHECK(theta(t, op) == dendriform_pi(d));

    const Cochain zero = Cochain::zero(2, f.bimodule.dim, f.algebra.dim);
    CHECK(theta(zero, op).is_zero());
  }
}

TEST_CASE("theta preserves the brackets and intertwines the differentials") {
  oracles::Rng rng(36);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
    const InducedStructures ind = induced_dendriform(op);
    const DendriformAlgebra d{op.bimodule.dim, ind.prec, ind.succ, op.bimodule.inv};

    for (int t = 0; t < 4; ++t) {
      const int m = rng.int_in(1, 2), n = rng.int_in(1, 2);
      const Cochain p = fixtures::random_involutive_cochain(rng, m, f.bimodule.dim, f.algebra.dim,
                                                            f.bimodule.inv, f.algebra.inv);
      const Cochain q = fixtures::random_involutive_cochain(rng, n, f.bimodule.dim, f.algebra.dim,
                                                            f.bimodule.inv, f.algebra.inv);
      CHECK(dend_bracket(theta(p, op), theta(q, op)) == theta(derived_bracket(p, q, f.algebra, f.bimodule), op));
    }

    // Chain map with the derived sign: delta_pi(Theta_n P) = (-1)^n Theta_{n+1}(d_T P).
    for (int n = 1; n <= 2; ++n) {
      const Cochain p = fixtures::random_involutive_cochain(rng, n, f.bimodule.dim, f.algebra.dim,
                                                            f.bimodule.inv, f.algebra.inv);
      const DendCochain lhs = dend_differential(d, theta(p, op));
      const DendCochain rhs = theta(rb_differential(op, p), op);
      CHECK(lhs == (n % 2 == 0 ? rhs : Rational(-1) * rhs));
    }
  }
}

TEST_CASE("theta rejects non-involutive cochains") {
  const auto f = fixtures::all()[1];  // nontrivial involution
  const RBOperator op = make_rb_operator(f.algebra, f.bimodule, f.op);
  oracles::Rng rng(37);
  Cochain p = fixtures::random_cochain(rng, 1, f.bimodule.dim, f.algebra.dim);
  while (is_involutive(p, f.bimodule.inv, f.algebra.inv)) p = fixtures::random_cochain(rng, 1, f.bimodule.dim, f.algebra.dim);
  CHECK_THROWS_AS(theta(p, op), PreconditionError);
}
