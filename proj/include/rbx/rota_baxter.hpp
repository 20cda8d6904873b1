#pragma once

#include <string>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/cochain.hpp"
#include "rbx/errors.hpp"
#include "rbx/hochschild.hpp"

namespace rbx {

/// A relative Rota-Baxter operator T: M -> A on an involutive algebra,
/// together with its (validated) context. Construct via make_rb_operator.
struct RBOperator {
  InvolutiveAlgebra algebra;
  InvolutiveBimodule bimodule;
  Mat matrix;  // algebra.dim x bimodule.dim, acting on column coordinates

  Vec apply(const Vec& u) const { return matrix * u; }
};

/// Equivariance T(u*) = T(u)* and the Rota-Baxter identity
/// T(u)T(v) = T(uT(v) + T(u)v) on all basis pairs, with both sides of every
/// failed instance reported.
ValidationReport check_relative_rb(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Mat& t);

/// Rota-Baxter operator on the algebra itself: the special case M = A with
/// the regular bimodule.
ValidationReport check_rb_on_algebra(const InvolutiveAlgebra& a, const Mat& r);

/// Validates and packages; throws PreconditionError when T is not a
/// relative Rota-Baxter operator.
RBOperator make_rb_operator(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, Mat t);

/// True iff Gr(T) = {(Tu, u)} is closed under the semidirect product and
/// under the involution. Independent of check_relative_rb; the two must
/// agree on every input.
bool graph_check(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Mat& t);

/// Structures induced by T on M (dendriform and star products) and the
/// M-bimodule actions l_T, r_T on A.
struct InducedStructures {
  Mat prec;   // (dm*dm) x dm, u prec v = u T(v)
  Mat succ;   // (dm*dm) x dm, u succ v = T(u) v
  Mat star;   // prec + succ
  Mat left;   // (dm*da) x da, l_T(u, a) = T(u)a - T(ua)
  Mat right;  // (da*dm) x da, r_T(a, u) = aT(u) - T(au)
};

InducedStructures induced_structures(const RBOperator& op);

/// induced_structures with the dendriform axioms of (M, prec, succ, tau)
/// re-verified on output.
InducedStructures induced_dendriform(const RBOperator& op);

/// induced_structures with (M, star, tau) re-validated as an involutive
/// algebra, (A, l_T, r_T, sigma) as an involutive bimodule over it, and
/// l_T(u,a)* = r_T(a*,u*) checked on basis pairs.
InducedStructures induced_bimodule(const RBOperator& op);

/// (M, star, tau) as an involutive algebra.
InvolutiveAlgebra star_algebra(const RBOperator& op, const InducedStructures& ind);

/// (A, l_T, r_T, sigma) as an involutive bimodule over star_algebra.
InvolutiveBimodule coefficient_bimodule(const RBOperator& op, const InducedStructures& ind);

/// Voronov derived bracket [[P,Q]] of A-valued cochains on M, by the
/// explicit expansion. Degree 0 cochains are elements of A, and
/// [[a,b]] = ab - ba.
Cochain derived_bracket_explicit(const Cochain& p, const Cochain& q,
                                 const InvolutiveAlgebra& a, const InvolutiveBimodule& m);

/// The same bracket computed as (-1)^m [[mu+l+r, P], Q] with Gerstenhaber
/// brackets on the semidirect product A (+) M, restricted back.
Cochain derived_bracket_semidirect(const Cochain& p, const Cochain& q,
                                   const InvolutiveAlgebra& a, const InvolutiveBimodule& m);

/// Computes both routes and asserts they agree exactly before returning.
Cochain derived_bracket(const Cochain& p, const Cochain& q,
                        const InvolutiveAlgebra& a, const InvolutiveBimodule& m);

/// d_T f = [[T, f]]. Asserts the sign relation d_T f = (-1)^n delta_T f
/// against the Hochschild route, and that the involutive subspace is
/// preserved when f is involutive.
Cochain rb_differential(const RBOperator& op, const Cochain& f);

/// Hochschild differential of the involutive algebra (M, star) with
/// coefficients in the induced bimodule (A, l_T, r_T).
Cochain delta_t_hochschild(const RBOperator& op, const Cochain& f);

/// Cohomology of the relative Rota-Baxter operator, i.e. of the complex
/// (Hom(M^n, A), d_T) restricted per variant.
CohomologyReport rb_cohomology(const RBOperator& op, int max_degree, Variant variant);

std::vector<DegreeData> rb_complex_data(const RBOperator& op, int max_degree, Variant variant);

/// Matrix of S_n on flattened Hom(M^n, A) coordinates for this operator's
/// spaces.
Mat rb_s_matrix(const RBOperator& op, int degree);

class GaugeError : public PreconditionError {
public:
  enum class Kind { not_a_cocycle, not_involutive, singular };
  GaugeError(Kind kind, const std::string& what, Vec certificate)
      : PreconditionError(what), kind(kind), certificate(std::move(certificate)) {}
  Kind kind;
  Vec certificate;  // witness basis tuple value / kernel vector
};

/// Gauge transformation T o (id + B o T)^{-1} along an involutive
/// Hochschild 1-cocycle B in iC^1(A, M). Throws GaugeError (with a
/// certificate) when B is not a cocycle, not involutive, or id + B o T is
/// singular.
RBOperator gauge_transform(const RBOperator& op, const Mat& b);

}  // namespace rbx
