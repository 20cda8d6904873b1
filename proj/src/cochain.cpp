#include "rbx/cochain.hpp"

#include <vector>

#include "rbx/errors.hpp"

namespace rbx {

Cochain reverse_arguments(const Cochain& f) {
  Cochain out = Cochain::zero(f.degree, f.src_dim, f.tgt_dim);
  std::vector<Index> t(static_cast<std::size_t>(f.degree)), rev(static_cast<std::size_t>(f.degree));
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, f.src_dim, f.degree, t.data());
    for (int i = 0; i < f.degree; ++i) rev[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(f.degree - 1 - i)];
    out.coeffs.row(r) = f.coeffs.row(encode_tuple(rev.data(), f.src_dim, f.degree));
  }
  return out;
}

Cochain precompose_slot(const Cochain& f, int slot, const Mat& m) {
  Cochain out = Cochain::zero(f.degree, f.src_dim, f.tgt_dim);
  std::vector<Index> t(static_cast<std::size_t>(f.degree));
  for (Index r = 0; r < out.rows(); ++r) {
    decode_tuple(r, f.src_dim, f.degree, t.data());
    const Index arg = t[static_cast<std::size_t>(slot)];
    for (Index q = 0; q < f.src_dim; ++q) {
      if (m(q, arg).is_zero()) continue;
      t[static_cast<std::size_t>(slot)] = q;
      out.coeffs.row(r) += m(q, arg) * f.coeffs.row(encode_tuple(t.data(), f.src_dim, f.degree));
    }
    t[static_cast<std::size_t>(slot)] = arg;
  }
  return out;
}

Cochain postcompose(const Cochain& f, const Mat& m) {
  return {f.degree, f.src_dim, f.tgt_dim, f.coeffs * m.transpose()};
}

}  // namespace rbx
