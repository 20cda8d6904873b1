#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rbx/hochschild.hpp"

using namespace rbx;

TEST_CASE("differential: linearity edge and central degree-0 elements") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const Cochain zero = Cochain::zero(2, f.algebra.dim, f.bimodule.dim);
    CHECK(hochschild_differential(f.algebra, f.bimodule, zero).is_zero());
  }
  // Dual numbers are commutative, so every degree-0 element is central.
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const InvolutiveBimodule m = regular_bimodule(a);
  oracles::Rng rng(7);
  const Cochain elem = fixtures::random_cochain(rng, 0, a.dim, m.dim);
  CHECK(hochschild_differential(a, m, elem).is_zero());
}

TEST_CASE("delta o delta = 0 for random cochains of degree <= 3") {
  oracles::Rng rng(8);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    for (int n = 0; n <= 3; ++n) {
      const Cochain c = fixtures::random_cochain(rng, n, f.algebra.dim, f.bimodule.dim);
      const Cochain once = hochschild_differential(f.algebra, f.bimodule, c);
      CHECK(hochschild_differential(f.algebra, f.bimodule, once).is_zero());
    }
  }
}

TEST_CASE("Gerstenhaber bracket: degree-1 case is the commutator of maps") {
  const InvolutiveAlgebra a = fixtures::upper_triangular();
  oracles::Rng rng(9);
  const Cochain f = fixtures::random_cochain(rng, 1, a.dim, a.dim);
  const Cochain g = fixtures::random_cochain(rng, 1, a.dim, a.dim);
  // [f,g] = f o g - g o f for linear maps.
  const Mat fm = f.coeffs.transpose(), gm = g.coeffs.transpose();
  const Mat expected = fm * gm - gm * fm;
  CHECK(gerstenhaber_bracket(f, g).coeffs == expected.transpose());

  Cochain id = Cochain::zero(1, a.dim, a.dim);
  id.coeffs = Mat::Identity(a.dim, a.dim);
  CHECK(gerstenhaber_bracket(id, id).is_zero());
}

TEST_CASE("Gerstenhaber bracket: graded antisymmetry and Jacobi, exact") {
  oracles::Rng rng(10);
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  for (int t = 0; t < 12; ++t) {
    const int m = rng.int_in(1, 2), n = rng.int_in(1, 2), p = rng.int_in(1, 2);
    const Cochain f = fixtures::random_cochain(rng, m, a.dim, a.dim);
    const Cochain g = fixtures::random_cochain(rng, n, a.dim, a.dim);
    const Cochain h = fixtures::random_cochain(rng, p, a.dim, a.dim);

    // [f,g] = -(-1)^{(m-1)(n-1)} [g,f]
    const Cochain fg = gerstenhaber_bracket(f, g);
    const Cochain gf = gerstenhaber_bracket(g, f);
    const bool neg = ((m - 1) * (n - 1)) % 2 != 0;
    CHECK(fg == (neg ? gf : -gf));

    // Graded Leibniz form of Jacobi:
    // [f,[g,h]] = [[f,g],h] + (-1)^{(m-1)(n-1)} [g,[f,h]]
    const Cochain lhs = gerstenhaber_bracket(f, gerstenhaber_bracket(g, h));
    const Cochain rhs1 = gerstenhaber_bracket(fg, h);
    const Cochain rhs2 = gerstenhaber_bracket(g, gerstenhaber_bracket(f, h));
    CHECK(lhs == (neg ? rhs1 - rhs2 : rhs1 + rhs2));
  }
}

TEST_CASE("bracket with degree-0 cochains inserts elements") {
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  oracles::Rng rng(11);
  const Cochain f = fixtures::random_cochain(rng, 1, a.dim, a.dim);
  Cochain b = Cochain::zero(0, a.dim, a.dim);
  b.coeffs(0, 0) = 2;
  b.coeffs(0, 1) = -1;
  // [f, b] = f(b) - (b f(.) - f(.) b adjusted): for m=1, n=0 the formula
  // gives f o_1 b - (b-composition of f), i.e. f(b) minus nothing on the
  // right since n = 0 has an empty sum... check against direct expansion.
  const Cochain fb = gerstenhaber_bracket(f, b);
  CHECK(fb.degree == 0);
  const Vec bvec = b.coeffs.row(0).transpose();
  CHECK(Vec(fb.coeffs.row(0).transpose()) == Vec(f.coeffs.transpose() * bvec));
  CHECK_THROWS_AS(gerstenhaber_bracket(b, b), ShapeError);
}

TEST_CASE("S action: signs, involutivity, fixed points") {
  oracles::Rng rng(12);
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const Mat& sigma = f.algebra.inv;
    const Mat& tau = f.bimodule.inv;
    for (int n = 0; n <= 3; ++n) {
      const Cochain c = fixtures::random_cochain(rng, n, f.algebra.dim, f.bimodule.dim);
      CHECK(s_action(s_action(c, sigma, tau), sigma, tau) == c);
    }
    // n = 1: (S f)(a) = f(a*)*; a map commuting with the involutions is fixed.
    Cochain comm = Cochain::zero(1, f.algebra.dim, f.bimodule.dim);
    comm.coeffs = Mat::Identity(f.algebra.dim, f.algebra.dim);  // square fixtures: M = A
    if (sigma == tau) CHECK(is_involutive(comm, sigma, tau));
  }

  // The product cochain mu of a validated algebra is involutive at n = 2.
  for (const auto& f : fixtures::all()) {
    const Cochain mu{2, f.algebra.dim, f.algebra.dim, f.algebra.mul};
    CHECK(is_involutive(mu, f.algebra.inv, f.algebra.inv));
  }

  // S_0(a) = -a*.
  const InvolutiveAlgebra zm = fixtures::zero_mult();
  Cochain e0 = Cochain::zero(0, zm.dim, zm.dim);
  e0.coeffs(0, 0) = 1;
  const Cochain s0 = s_action(e0, zm.inv, zm.inv);
  CHECK(s0.coeffs(0, 0) == Rational(0));
  CHECK(s0.coeffs(0, 1) == Rational(-1));
}

TEST_CASE("split_cochain recomposes into the claimed eigenspaces") {
  oracles::Rng rng(13);
  for (const auto& f : fixtures::all()) {
    for (int n = 0; n <= 2; ++n) {
      const Cochain c = fixtures::random_cochain(rng, n, f.bimodule.dim, f.algebra.dim);
      const auto [plus, minus] = split_cochain(c, f.bimodule.inv, f.algebra.inv);
      CHECK(plus + minus == c);
      CHECK(s_action(plus, f.bimodule.inv, f.algebra.inv) == plus);
      CHECK(s_action(minus, f.bimodule.inv, f.algebra.inv) == -minus);
    }
  }
}

TEST_CASE("involutive basis dimensions for trivial involutions") {
  // sigma = tau = id on the dual numbers (dim A = dim M = 2).
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const Mat id2 = Mat::Identity(2, 2);
  CHECK(involutive_basis(0, 2, 2, id2, id2).empty());          // iM = {m = -m} = 0
  CHECK(involutive_basis(1, 2, 2, id2, id2).size() == 4);      // all of Hom(M, A)
  CHECK(involutive_basis(2, 2, 2, id2, id2).size() == 2 * 3);  // symmetric maps: dim A * dim M (dim M + 1)/2
  for (const Cochain& b : involutive_basis(2, 2, 2, id2, id2)) CHECK(is_involutive(b, id2, id2));
  (void)a;
}

TEST_CASE("bracket closure: involutive cochains are closed under [.,.]") {
  oracles::Rng rng(14);
  for (const auto& f : fixtures::all()) {
    const Mat& sigma = f.algebra.inv;
    for (int t = 0; t < 6; ++t) {
      const int m = rng.int_in(1, 2), n = rng.int_in(1, 2);
      const Cochain p = fixtures::random_involutive_cochain(rng, m, f.algebra.dim, f.algebra.dim, sigma, sigma);
      const Cochain q = fixtures::random_involutive_cochain(rng, n, f.algebra.dim, f.algebra.dim, sigma, sigma);
      CHECK(is_involutive(gerstenhaber_bracket(p, q), sigma, sigma));
    }
  }
}

TEST_CASE("hochschild cohomology: dual numbers frozen dimensions") {
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const InvolutiveBimodule m = regular_bimodule(a);
  const CohomologyReport report = hochschild_cohomology(a, m, 3, Variant::ordinary);
  REQUIRE(report.degrees.size() == 4);
  // H^0 = the center = all of A for a commutative algebra.
  CHECK(report.degrees[0].dim_cohomology == 2);
  // K[x]/(x^2) in characteristic 0: dim H^n = 1 for n >= 1.
  CHECK(report.degrees[1].dim_cohomology == 1);
  CHECK(report.degrees[2].dim_cohomology == 1);
  CHECK(report.degrees[3].dim_cohomology == 1);
  for (const auto& d : report.degrees) CHECK(d.dim_cohomology == d.dim_cocycles - d.dim_coboundaries);
}

TEST_CASE("skew variant with trivial involutions is zero in degree 1") {
  const InvolutiveAlgebra a = fixtures::dual_numbers();
  const InvolutiveBimodule m = regular_bimodule(a);
  const CohomologyReport report = hochschild_cohomology(a, m, 1, Variant::skew);
  CHECK(report.degrees[1].dim_cochains == 0);
  CHECK(report.degrees[1].dim_cohomology == 0);
}

TEST_CASE("splitting: ordinary = involutive + skew, degrees <= 3, all fixtures") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const auto ord = hochschild_cohomology(f.algebra, f.bimodule, 3, Variant::ordinary);
    const auto inv = hochschild_cohomology(f.algebra, f.bimodule, 3, Variant::involutive);
    const auto skew = hochschild_cohomology(f.algebra, f.bimodule, 3, Variant::skew);
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(ord.degrees[n].dim_cohomology ==
            inv.degrees[n].dim_cohomology + skew.degrees[n].dim_cohomology);
      CHECK(ord.degrees[n].dim_cochains == inv.degrees[n].dim_cochains + skew.degrees[n].dim_cochains);
    }
  }
}

TEST_CASE("representatives are cocycles outside the coboundary span") {
  const InvolutiveAlgebra a = fixtures::upper_triangular();
  const InvolutiveBimodule m = regular_bimodule(a);
  const auto data = hochschild_complex_data(a, m, 2, Variant::involutive);
  for (int n = 0; n <= 2; ++n) {
    const auto& d = data[static_cast<std::size_t>(n)];
    if (d.dim_cohomology == 0) continue;
    // Every representative has nonzero class coordinates.
    for (Index k = 0; k < d.representatives.cols(); ++k) {
      const Vec coords = class_coordinates(d, d.representatives.col(k));
      CHECK_FALSE(is_zero(coords));
    }
    // Coboundaries have zero class coordinates.
    if (d.dim_coboundaries > 0) {
      const Vec coords = class_coordinates(d, d.coboundaries.col(0));
      CHECK(is_zero(coords));
    }
  }
}
