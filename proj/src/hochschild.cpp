#include "rbx/hochschild.hpp"

#include <utility>

#include "rbx/errors.hpp"

namespace rbx {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ordinary: return "ordinary";
    case Variant::involutive: return "involutive";
    case Variant::skew: return "skew";
  }
  return "?";
}

Cochain hochschild_differential(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, const Cochain& f) {
  if (f.src_dim != a.dim || f.tgt_dim != m.dim) throw ShapeError("cochain must map A^n to M");
  const int n = f.degree;
  Cochain out = Cochain::zero(n + 1, a.dim, m.dim);
  std::vector<Index> t(static_cast<std::size_t>(n + 1)), merged(static_cast<std::size_t>(n > 0 ? n : 1));
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, a.dim, n + 1, t.data());
    auto row = out.coeffs.row(r);

    // a_1 f(a_2, ..., a_{n+1})
    {
      const auto val = f.coeffs.row(encode_tuple(t.data() + 1, a.dim, n));
      for (Index p = 0; p < m.dim; ++p)
        if (!val(p).is_zero()) row += val(p) * m.left.row(t[0] * m.dim + p);
    }

    // (-1)^i f(a_1, ..., a_i a_{i+1}, ..., a_{n+1})
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j < i - 1; ++j) merged[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)];
      for (int j = i + 1; j <= n; ++j) merged[static_cast<std::size_t>(j - 1)] = t[static_cast<std::size_t>(j)];
      const auto mu = a.mul.row(t[static_cast<std::size_t>(i - 1)] * a.dim + t[static_cast<std::size_t>(i)]);
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (Index k = 0; k < a.dim; ++k) {
        if (mu(k).is_zero()) continue;
        merged[static_cast<std::size_t>(i - 1)] = k;
        const Rational c = (sign > 0) ? mu(k) : -mu(k);
        row += c * f.coeffs.row(encode_tuple(merged.data(), a.dim, n));
      }
    }

    // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
    {
      const auto val = f.coeffs.row(encode_tuple(t.data(), a.dim, n));
      const int sign = (n % 2 == 0) ? -1 : 1;
      for (Index p = 0; p < m.dim; ++p) {
        if (val(p).is_zero()) continue;
        const Rational c = (sign > 0) ? val(p) : -val(p);
        row += c * m.right.row(p * a.dim + t[static_cast<std::size_t>(n)]);
      }
    }
  }
  return out;
}

Cochain compose_at(const Cochain& f, int i, const Cochain& g) {
  if (f.src_dim != g.src_dim || f.tgt_dim != g.tgt_dim || f.src_dim != f.tgt_dim)
    throw ShapeError("partial composition needs cochains on one space, valued in it");
  const int m = f.degree, n = g.degree;
  if (i < 1 || i > m) throw ShapeError("composition slot out of range");
  const Index d = f.src_dim;
  Cochain out = Cochain::zero(m + n - 1, d, d);
  std::vector<Index> t(static_cast<std::size_t>(m + n - 1)), fargs(static_cast<std::size_t>(m));
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, d, m + n - 1, t.data());
    const auto gval = g.coeffs.row(encode_tuple(t.data() + (i - 1), d, n));
    for (int j = 0; j < i - 1; ++j) fargs[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)];
    for (int j = i; j < m; ++j) fargs[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j + n - 1)];
    for (Index l = 0; l < d; ++l) {
      if (gval(l).is_zero()) continue;
      fargs[static_cast<std::size_t>(i - 1)] = l;
      out.coeffs.row(r) += gval(l) * f.coeffs.row(encode_tuple(fargs.data(), d, m));
    }
  }
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
  const int m = f.degree, n = g.degree;
  if (m == 0 && n == 0) throw ShapeError("[a,b] of two degree-0 cochains has no degree");
  if (f.src_dim != g.src_dim || f.tgt_dim != g.tgt_dim) throw ShapeError("bracket needs matching spaces");
  Cochain out = Cochain::zero(m + n - 1, f.src_dim, f.tgt_dim);
  for (int i = 1; i <= m; ++i) {
    const bool neg = ((i - 1) * (n - 1)) % 2 != 0;
    const Cochain c = compose_at(f, i, g);
    out.coeffs += neg ? (-c.coeffs).eval() : c.coeffs;
  }
  const int outer = (m - 1) * (n - 1);
  for (int i = 1; i <= n; ++i) {
    const bool neg = (outer + (i - 1) * (m - 1)) % 2 == 0;  // minus the signed swap term
    const Cochain c = compose_at(g, i, f);
    out.coeffs += neg ? (-c.coeffs).eval() : c.coeffs;
  }
  return out;
}

Cochain s_action(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt) {
  if (sigma_src.rows() != f.src_dim || tau_tgt.rows() != f.tgt_dim) throw ShapeError("involution shapes must match the cochain");
  Cochain g = reverse_arguments(f);
  for (int slot = 0; slot < f.degree; ++slot) g = precompose_slot(g, slot, sigma_src);
  g = postcompose(g, tau_tgt);
  // (-1)^{(n-1)(n-2)/2}; at n = 0 this is -1, giving S_0(a) = -a*.
  const int e = (f.degree - 1) * (f.degree - 2) / 2;
  if (e % 2 != 0) g.coeffs = -g.coeffs;
  return g;
}

bool is_involutive(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt) {
  return s_action(f, sigma_src, tau_tgt) == f;
}

std::pair<Cochain, Cochain> split_cochain(const Cochain& f, const Mat& sigma_src, const Mat& tau_tgt) {
  const Cochain s = s_action(f, sigma_src, tau_tgt);
  const Rational half(1, 2);
  return {half * (f + s), half * (f - s)};
}

Mat s_matrix(int degree, Index src_dim, Index tgt_dim, const Mat& sigma_src, const Mat& tau_tgt) {
  return operator_matrix(degree, src_dim, tgt_dim, degree, src_dim, tgt_dim,
                         [&](const Cochain& f) { return s_action(f, sigma_src, tau_tgt); });
}

std::vector<Cochain> involutive_basis(int degree, Index src_dim, Index tgt_dim, const Mat& sigma_src, const Mat& tau_tgt) {
  const Mat s = s_matrix(degree, src_dim, tgt_dim, sigma_src, tau_tgt);
  const SubspaceBasis b = eigenspace_basis(s, +1);
  std::vector<Cochain> out;
  out.reserve(static_cast<std::size_t>(b.dim()));
  for (Index k = 0; k < b.dim(); ++k) out.push_back(Cochain::from_flat(b.cols.col(k), degree, src_dim, tgt_dim));
  return out;
}

SubspaceBasis eigenspace_basis(const Mat& s, int eigenvalue) {
  Mat shifted = s;
  for (Index i = 0; i < s.rows(); ++i) shifted(i, i) -= Rational(eigenvalue);
  KernelBasis kb = kernel_with_free_cols(shifted);
  return {std::move(kb.basis), std::move(kb.free_cols)};
}

namespace {

// Solve B X = Y using the unit rows of B, then verify exactly.
Mat restrict_to_subspace(const SubspaceBasis& b, const Mat& y, const char* what) {
  Mat x(b.dim(), y.cols());
  for (Index k = 0; k < b.dim(); ++k) x.row(k) = y.row(b.unit_rows[static_cast<std::size_t>(k)]);
  if (b.cols * x != y) throw EigenspaceError(what);
  return x;
}

// Independent columns of m, by RREF pivot selection.
Mat column_space_basis(const Mat& m) {
  const RowEchelon re = row_reduce(m);
  Mat out(m.rows(), re.rank());
  for (Index i = 0; i < re.rank(); ++i) out.col(i) = m.col(re.pivot_cols[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<DegreeData> analyze_complex(const std::vector<std::optional<SubspaceBasis>>& bases,
                                        const std::vector<Mat>& diffs) {
  internal_check(bases.size() == diffs.size() + 1, "analyze_complex: need one more basis than differentials");
  const int top = static_cast<int>(diffs.size());

  std::vector<Mat> restricted(static_cast<std::size_t>(top));
  for (int n = 0; n < top; ++n) {
    const auto& bn = bases[static_cast<std::size_t>(n)];
    Mat y = bn ? Mat(diffs[static_cast<std::size_t>(n)] * bn->cols) : diffs[static_cast<std::size_t>(n)];
    const auto& bnext = bases[static_cast<std::size_t>(n + 1)];
    restricted[static_cast<std::size_t>(n)] =
        bnext ? restrict_to_subspace(*bnext, y, "differential does not preserve the selected eigenspace") : std::move(y);
  }

  std::vector<DegreeData> out(static_cast<std::size_t>(top));
  for (int n = 0; n < top; ++n) {
    DegreeData& d = out[static_cast<std::size_t>(n)];
    const Mat& x = restricted[static_cast<std::size_t>(n)];
    const auto& bn = bases[static_cast<std::size_t>(n)];
    d.dim_cochains = x.cols();

    const Mat ker = kernel_matrix(x);
    d.dim_cocycles = ker.cols();
    d.cocycles = bn ? Mat(bn->cols * ker) : ker;

    Mat img(x.cols(), 0);
    if (n > 0) img = column_space_basis(restricted[static_cast<std::size_t>(n - 1)]);
    d.dim_coboundaries = img.cols();
    d.coboundaries = bn ? Mat(bn->cols * img) : img;

    d.dim_cohomology = d.dim_cocycles - d.dim_coboundaries;
    internal_check(d.dim_cohomology >= 0, "coboundaries exceed cocycles; differential is not a complex");

    // Extend the coboundary basis to the cocycle basis by elimination; the
    // pivots landing in the kernel block pick the representatives.
    const RowEchelon re = row_reduce(hstack(img, ker));
    Mat reps(d.cocycles.rows(), d.dim_cohomology);
    Index found = 0;
    for (Index c : re.pivot_cols)
      if (c >= img.cols()) reps.col(found++) = d.cocycles.col(c - img.cols());
    internal_check(found == d.dim_cohomology, "representative extension failed");
    d.representatives = std::move(reps);
  }
  return out;
}

Vec class_coordinates(const DegreeData& data, const Vec& z) {
  const auto x = solve_matrix(hstack(data.coboundaries, data.representatives), z);
  if (!x) throw PreconditionError("class_coordinates: the given cochain is not a cocycle");
  return x->col(0).tail(data.dim_cohomology);
}

CohomologyReport make_report(Variant variant, const std::vector<DegreeData>& data, int first_degree) {
  CohomologyReport report;
  report.variant = variant;
  report.max_degree = first_degree + static_cast<int>(data.size()) - 1;
  for (std::size_t n = 0; n < data.size(); ++n) {
    DegreeReport dr;
    dr.degree = first_degree + static_cast<int>(n);
    dr.dim_cochains = data[n].dim_cochains;
    dr.dim_cocycles = data[n].dim_cocycles;
    dr.dim_coboundaries = data[n].dim_coboundaries;
    dr.dim_cohomology = data[n].dim_cohomology;
    for (Index k = 0; k < data[n].representatives.cols(); ++k) dr.representatives.push_back(data[n].representatives.col(k));
    report.degrees.push_back(std::move(dr));
  }
  return report;
}

std::vector<DegreeData> hochschild_complex_data(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                                int max_degree, Variant variant) {
  std::vector<Mat> diffs;
  for (int n = 0; n <= max_degree; ++n)
    diffs.push_back(operator_matrix(n, a.dim, m.dim, n + 1, a.dim, m.dim,
                                    [&](const Cochain& f) { return hochschild_differential(a, m, f); }));
  std::vector<std::optional<SubspaceBasis>> bases(static_cast<std::size_t>(max_degree) + 2);
  if (variant != Variant::ordinary) {
    const int eig = variant == Variant::involutive ? +1 : -1;
    for (int n = 0; n <= max_degree + 1; ++n)
      bases[static_cast<std::size_t>(n)] = eigenspace_basis(s_matrix(n, a.dim, m.dim, a.inv, m.inv), eig);
  }
  return analyze_complex(bases, diffs);
}

CohomologyReport hochschild_cohomology(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                       int max_degree, Variant variant) {
  return make_report(variant, hochschild_complex_data(a, m, max_degree, variant));
}

}  // namespace rbx
