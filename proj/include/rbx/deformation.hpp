#pragma once

#include <optional>
#include <vector>

#include "rbx/rota_baxter.hpp"

namespace rbx {

/// Order-N deformation T_t = T_0 + t T_1 + ... + t^N T_N of a relative
/// Rota-Baxter operator. T_0 must be a valid operator; the deformation
/// equations for the higher terms are checked by check_deformation.
struct DeformationSeries {
  RBOperator base;          // T_0 with its algebra/bimodule context
  std::vector<Mat> higher;  // T_1 .. T_N

  int order() const { return static_cast<int>(higher.size()); }
  const Mat& term(int k) const { return k == 0 ? base.matrix : higher[static_cast<std::size_t>(k - 1)]; }
};

/// Validates T_0 and the term shapes. Throws PreconditionError when T_0 is
/// not a relative Rota-Baxter operator.
DeformationSeries make_deformation_series(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                          const std::vector<Mat>& terms);

/// Per-order checks, k = 1..N: equivariance T_k(u*) = T_k(u)* and the
/// order-k deformation equation on all basis pairs. The equation is
/// evaluated both as the bilinear identity and as
/// d_T(T_k) = -1/2 sum_{i+j=k} [[T_i, T_j]], and the two defect tensors are
/// asserted equal.
ValidationReport check_deformation(const DeformationSeries& s);

struct Infinitesimal {
  Cochain cocycle;   // T_1 as a degree-1 cochain, with d_T T_1 = 0 verified
  Vec class_coords;  // coordinates in iH^1_T
};

/// The linear term of the deformation together with its cohomology class.
/// Requires the order-1 equation to hold.
Infinitesimal infinitesimal(const DeformationSeries& s);

/// Equivalence data (a, phi_j, psi_j): phi_1 = ad^l_a - ad^r_a and
/// psi_1 = l_a - r_a are derived from a, not stored; phi[0] is phi_2.
struct EquivalenceData {
  Vec a;
  std::vector<Mat> phi;  // phi_j for j >= 2, on A
  std::vector<Mat> psi;  // psi_j for j >= 2, on M
  int order = 1;
};

/// The four morphism conditions of an equivalence, order by order through
/// min(order s, order s2, e.order). Throws PreconditionError when a* != -a
/// or some phi_j / psi_j is not involutive.
ValidationReport check_equivalence(const DeformationSeries& s, const DeformationSeries& s2, const EquivalenceData& e);

struct ObstructionResult {
  Cochain cocycle;   // Ob = -1/2 sum_{i+j=N+1, i,j>=1} [[T_i, T_j]]
  Vec class_coords;  // coordinates in iH^2_T
};

/// Obstruction 2-cocycle of a valid order-N deformation; d_T(Ob) = 0 is
/// verified exactly.
ObstructionResult obstruction(const DeformationSeries& s);

struct ExtensionResult {
  std::optional<Mat> term;  // T_{N+1} when the obstruction class vanishes
  Vec obstruction_class;    // the certificate when it does not
};

/// Solves d_T(T_{N+1}) = Ob when the obstruction class is trivial and
/// re-validates the extended series through order N+1.
ExtensionResult try_extend(const DeformationSeries& s);

/// Degree-1 cochain view of an operator matrix M -> A and back.
Cochain cochain_of_operator(const RBOperator& op, const Mat& t);
Mat operator_of_cochain(const Cochain& c);

}  // namespace rbx
