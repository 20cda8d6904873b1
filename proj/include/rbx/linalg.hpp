#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rbx/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<rbx::Rational> {
  using Real = rbx::Rational;
  using NonInteger = rbx::Rational;
  using Literal = rbx::Rational;
  using Nested = rbx::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace rbx {

using Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

namespace detail {

/// Cheap size proxy (bit length of numerator and denominator) used by the
/// pivot heuristic to keep coefficient growth down on the dense cochain
/// matrices.
inline std::size_t scalar_weight(const Rational& r) {
  const BigInt n = boost::multiprecision::abs(r.numerator());
  const BigInt d = r.denominator();
  std::size_t w = 0;
  if (!n.is_zero()) w += static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
  if (d != 1) w += static_cast<std::size_t>(boost::multiprecision::msb(d)) + 1;
  return w;
}

}  // namespace detail

/// Result of exact Gauss-Jordan elimination: `mat` is the reduced
/// row-echelon form, `pivot_cols` the pivot columns in increasing order.
struct RowEchelon {
  Mat mat;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Exact RREF. Within each column the pivot row is chosen by smallest
/// bit-size (ties to the lowest row index), which is deterministic and
/// keeps intermediate entries modest.
inline RowEchelon row_reduce(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  RowEchelon out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_w = 0;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::size_t w = detail::scalar_weight(m(i, c));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(r).swap(m.row(best));
    const Rational piv = m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) /= piv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

/// Rank over the rationals, computed exactly.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(Mat(m)).rank();
}

/// Kernel basis in RREF shape: column k has a 1 in row free_cols[k] and is
/// the only basis column with a nonzero entry there.
struct KernelBasis {
  Mat basis;
  std::vector<Index> free_cols;
};

template <typename Derived>
KernelBasis kernel_with_free_cols(const Eigen::MatrixBase<Derived>& m) {
  const RowEchelon re = row_reduce(Mat(m));
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : re.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  KernelBasis out;
  out.basis = Mat::Zero(cols, cols - re.rank());
  Index k = 0;
  for (Index fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    out.basis(fc, k) = 1;
    for (Index i = 0; i < re.rank(); ++i) out.basis(re.pivot_cols[static_cast<std::size_t>(i)], k) = -re.mat(i, fc);
    out.free_cols.push_back(fc);
    ++k;
  }
  return out;
}

/// Basis of the right null space as matrix columns; empty (cols x 0) for
/// injective maps. Satisfies m * kernel_matrix(m) == 0 exactly, and
/// cols(m) == rank(m) + cols(kernel_matrix(m)).
template <typename Derived>
Mat kernel_matrix(const Eigen::MatrixBase<Derived>& m) {
  return kernel_with_free_cols(m).basis;
}

template <typename Derived>
std::vector<Vec> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  const Mat basis = kernel_matrix(m);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(basis.cols()));
  for (Index k = 0; k < basis.cols(); ++k) out.push_back(basis.col(k));
  return out;
}

/// Solves m * X = rhs for all columns at once. Returns one exact solution
/// (free variables set to zero) or nothing when some column is outside the
/// column space. Absence is a value, not an error.
inline std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs) {
  const Index cols = m.cols();
  Mat aug(m.rows(), cols + rhs.cols());
  if (cols > 0) aug.leftCols(cols) = m;
  aug.rightCols(rhs.cols()) = rhs;
  RowEchelon re = row_reduce(std::move(aug));
  for (Index c : re.pivot_cols)
    if (c >= cols) return std::nullopt;
  Mat x = Mat::Zero(cols, rhs.cols());
  for (Index i = 0; i < re.rank(); ++i) x.row(re.pivot_cols[static_cast<std::size_t>(i)]) = re.mat.block(i, cols, 1, rhs.cols());
  return x;
}

inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
  auto x = solve_matrix(m, b);
  if (!x) return std::nullopt;
  return Vec(x->col(0));
}

/// Exact inverse of a square matrix; nothing when singular.
inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_matrix(m, Mat::Identity(m.rows(), m.cols()));
}

/// Column concatenation that tolerates zero-width operands.
inline Mat hstack(const Mat& a, const Mat& b) {
  Mat out(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// dim^n as a flattened index-space size.
inline Index ipow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Big-endian digit decoding: the first tuple position is the most
/// significant digit, so increasing flat index enumerates tuples in
/// lexicographic order.
inline void decode_tuple(Index flat, Index dim, int len, Index* out) {
  for (int i = len - 1; i >= 0; --i) {
    out[i] = flat % dim;
    flat /= dim;
  }
}

inline Index encode_tuple(const Index* digits, Index dim, int len) {
  Index flat = 0;
  for (int i = 0; i < len; ++i) flat = flat * dim + digits[i];
  return flat;
}

}  // namespace rbx
