#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rbx/algebra.hpp"
#include "rbx/dendriform.hpp"
#include "rbx/hochschild.hpp"

namespace rbx {

using Json = nlohmann::ordered_json;

/// A structured input file: field marker plus algebra / bimodule /
/// operator / cocycle / series / dendriform blocks. All numbers are exact
/// rationals ("p/q" strings or integers); floating point is rejected.
struct InputDocument {
  InvolutiveAlgebra algebra;
  std::vector<std::string> algebra_names;  // optional display names
  std::optional<InvolutiveBimodule> bimodule;
  std::optional<Mat> op;  // "operator": T as dim(A) x dim(M)
  std::optional<Mat> cocycle;
  std::optional<std::vector<Mat>> series;
  std::optional<DendriformAlgebra> dendriform;

  /// The bimodule block when present, else the regular bimodule M = A.
  InvolutiveBimodule bimodule_or_regular() const {
    return bimodule ? *bimodule : regular_bimodule(algebra);
  }
};

InputDocument load_document(const std::string& path);
InputDocument parse_document(const Json& doc, const std::string& where);

/// A standalone cochain file: {"degree": n, "coeffs": nested arrays}.
Cochain load_cochain(const std::string& path, Index src_dim, Index tgt_dim);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where);
Json vector_to_json(const Vec& v);

Json report_to_json(const ValidationReport& report);
Json report_to_json(const CohomologyReport& report, const std::string& complex_name);

std::string report_to_text(const ValidationReport& report);
std::string report_to_text(const CohomologyReport& report, const std::string& complex_name);

}  // namespace rbx
