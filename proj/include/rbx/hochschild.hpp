#pragma once

#include <optional>
#include <vector>

#include "rbx/algebra.hpp"
#include "rbx/cochain.hpp"

namespace rbx {

enum class Variant { ordinary, involutive, skew };

const char* variant_name(Variant v);

/// Hochschild differential of f in C^n(A, M), by the alternating-sum
/// formula; for n = 0 this is (delta m)(a) = am - ma.
Cochain hochschild_differential(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Cochain& f);

/// Partial composition (f o_i g) with g's value inserted into slot i
/// (1-based), for cochains on one space with values in it.
Cochain compose_at(const Cochain& f, int i, const Cochain& g);

/// Gerstenhaber bracket [f,g] of A-valued cochains on A. Degrees may be 0
/// (elements of A); both degree 0 is rejected since the bracket would land
/// in degree -1.
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

/// The involution S_n f = (-1)^{(n-1)(n-2)/2} * (f with reversed, starred
/// arguments, starred value). At n = 0 the sign is -1, so S_0(a) = -a*.
Cochain s_action(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt);

bool is_involutive(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt);

/// Eigenspace projection f = plus + minus with S(plus) = plus,
/// S(minus) = -minus.
std::pair<Cochain, Cochain> split_cochain(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt);

/// Matrix of S_n on flattened degree-n cochain coordinates.
Mat s_matrix(int degree, Index src_dim, Index tgt_dim, const Mat& sigma_src, const Mat& tau_tgt);

/// Basis of the +1 eigenspace of S_n (the involutive cochains; for n = 0
/// these are the a with a* = -a). Computed as kernel_basis(S_n - id) in the
/// fixed lexicographic coordinates.
std::vector<Cochain> involutive_basis(int degree, Index src_dim, Index tgt_dim, const Mat& sigma_src, const Mat& tau_tgt);

/// Subspace basis whose columns contain unit rows (the RREF-style kernel
/// basis shape), which makes solving B x = y a row lookup plus one exact
/// verification.
struct SubspaceBasis {
  Mat cols;
  std::vector<Index> unit_rows;  // unit_rows[k] is the row where column k has its 1
  Index dim() const { return cols.cols(); }
};

/// Eigenspace of an involution matrix S (eigenvalue +1 or -1).
SubspaceBasis eigenspace_basis(const Mat& s, int eigenvalue);

struct DegreeData {
  Index dim_cochains = 0;
  Index dim_cocycles = 0;
  Index dim_coboundaries = 0;
  Index dim_cohomology = 0;
  Mat cocycles;         // full-coordinate columns
  Mat coboundaries;     // full-coordinate columns, independent
  Mat representatives;  // cocycles extending the coboundary basis
};

/// Cochain-complex analysis shared by the Hochschild, Rota-Baxter and
/// dendriform theories. `diffs[n]` maps full degree-n coordinates to
/// degree-(n+1) ones; `bases[n]` (when present) restricts degree n to a
/// subspace, and every differential must map subspace into subspace --
/// otherwise EigenspaceError. Returns one entry per degree 0..diffs.size()-1.
std::vector<DegreeData> analyze_complex(const std::vector<std::optional<SubspaceBasis>>& bases,
                                        const std::vector<Mat>& diffs);

/// Class coordinates of a cocycle with respect to the representative basis
/// chosen by analyze_complex (zero vector means the class is trivial).
/// PreconditionError if z is not a cocycle of this degree.
Vec class_coordinates(const DegreeData& data, const Vec& z);

struct DegreeReport {
  int degree = 0;
  Index dim_cochains = 0;
  Index dim_cocycles = 0;
  Index dim_coboundaries = 0;
  Index dim_cohomology = 0;
  std::vector<Vec> representatives;  // flattened full coordinates
};

struct CohomologyReport {
  Variant variant = Variant::ordinary;
  int max_degree = 0;
  std::vector<DegreeReport> degrees;
};

CohomologyReport make_report(Variant variant, const std::vector<DegreeData>& data, int first_degree = 0);

/// Hochschild cohomology of A with coefficients in M, exact dimensions per
/// degree 0..max_degree. The involutive/skew variants restrict to the
/// eigenspaces of S_n and assert that the differential preserves them.
CohomologyReport hochschild_cohomology(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                       int max_degree, Variant variant);

/// The per-degree data behind hochschild_cohomology, for callers that need
/// the bases (class coordinates, representative cocycles as matrices).
std::vector<DegreeData> hochschild_complex_data(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                                int max_degree, Variant variant);

}  // namespace rbx
