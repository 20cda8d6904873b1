#pragma once

// The three reference fixtures, built from hand-expanded structure
// constants (independent of the JSON files, which mirror them).

#include "oracles.hpp"
#include "rbx/algebra.hpp"
#include "rbx/cochain.hpp"
#include "rbx/hochschild.hpp"
#include "rbx/rota_baxter.hpp"

namespace fixtures {

using namespace rbx;

// K[eps], eps^2 = 0, identity involution. Basis: e0 = 1, e1 = eps.
inline InvolutiveAlgebra dual_numbers() {
  InvolutiveAlgebra a;
  a.dim = 2;
  a.mul = Mat::Zero(4, 2);
  a.mul(0 * 2 + 0, 0) = 1;  // 1*1 = 1
  a.mul(0 * 2 + 1, 1) = 1;  // 1*eps = eps
  a.mul(1 * 2 + 0, 1) = 1;  // eps*1 = eps
  a.inv = Mat::Identity(2, 2);
  return a;
}

// T(1) = eps, T(eps) = 0.
inline Mat dual_numbers_operator() {
  Mat t = Mat::Zero(2, 2);
  t(1, 0) = 1;
  return t;
}

// 2x2 upper-triangular matrices, involution = transpose across the
// anti-diagonal. Basis: e0 = E11, e1 = E12, e2 = E22.
inline InvolutiveAlgebra upper_triangular() {
  InvolutiveAlgebra a;
  a.dim = 3;
  a.mul = Mat::Zero(9, 3);
  a.mul(0 * 3 + 0, 0) = 1;  // E11 E11 = E11
  a.mul(0 * 3 + 1, 1) = 1;  // E11 E12 = E12
  a.mul(1 * 3 + 2, 1) = 1;  // E12 E22 = E12
  a.mul(2 * 3 + 2, 2) = 1;  // E22 E22 = E22
  a.inv = Mat::Zero(3, 3);
  a.inv(2, 0) = 1;
  a.inv(1, 1) = 1;
  a.inv(0, 2) = 1;
  return a;
}

// R(E11) = E12, R(E12) = 0, R(E22) = E12.
inline Mat upper_triangular_operator() {
  Mat t = Mat::Zero(3, 3);
  t(1, 0) = 1;
  t(1, 2) = 1;
  return t;
}

// Zero multiplication on a 2-dimensional space, swap involution.
inline InvolutiveAlgebra zero_mult() {
  InvolutiveAlgebra a;
  a.dim = 2;
  a.mul = Mat::Zero(4, 2);
  a.inv = Mat::Zero(2, 2);
  a.inv(0, 1) = 1;
  a.inv(1, 0) = 1;
  return a;
}

inline Mat zero_mult_operator() { return Mat::Identity(2, 2); }

struct Fixture {
  const char* name;
  InvolutiveAlgebra algebra;
  InvolutiveBimodule bimodule;  // regular
  Mat op;
};

inline std::vector<Fixture> all() {
  std::vector<Fixture> out;
  {
    InvolutiveAlgebra a = dual_numbers();
    out.push_back({"dual_numbers", a, regular_bimodule(a), dual_numbers_operator()});
  }
  {
    InvolutiveAlgebra a = upper_triangular();
    out.push_back({"upper_triangular", a, regular_bimodule(a), upper_triangular_operator()});
  }
  {
    InvolutiveAlgebra a = zero_mult();
    out.push_back({"zero_mult", a, regular_bimodule(a), zero_mult_operator()});
  }
  return out;
}

inline Cochain random_cochain(oracles::Rng& rng, int degree, Index src, Index tgt) {
  Cochain c = Cochain::zero(degree, src, tgt);
  for (Index r = 0; r < c.rows(); ++r)
    for (Index k = 0; k < tgt; ++k) c.coeffs(r, k) = rng.rational(3, 2);
  return c;
}

// Random +1-eigenvector of S via projection.
inline Cochain random_involutive_cochain(oracles::Rng& rng, int degree, Index src, Index tgt,
                                         const Mat& sigma, const Mat& tau) {
  const Cochain c = random_cochain(rng, degree, src, tgt);
  return split_cochain(c, sigma, tau).first;
}

}  // namespace fixtures
