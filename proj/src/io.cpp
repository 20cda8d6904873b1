#include "rbx/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rbx/errors.hpp"

namespace rbx {

namespace {

Rational number_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where, e.what());
    }
  }
  if (j.is_number_float()) throw InputError(where, "floating point numbers are not accepted; write \"p/q\"");
  throw InputError(where, "expected an integer or a \"p/q\" string");
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(where, std::string("missing field \"") + name + "\"");
  return *it;
}

Index index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw InputError(where, "expected a nonnegative integer");
  return static_cast<Index>(v);
}

// Tensor [d1][d2][d3] flattened to a (d1*d2) x d3 matrix.
Mat tensor3_from_json(const Json& j, Index d1, Index d2, Index d3, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != d1)
    throw InputError(where, "expected " + std::to_string(d1) + " slices");
  Mat out(d1 * d2, d3);
  for (Index i = 0; i < d1; ++i) {
    const Json& slice = j[static_cast<std::size_t>(i)];
    const std::string wi = where + "[" + std::to_string(i) + "]";
    if (!slice.is_array() || static_cast<Index>(slice.size()) != d2)
      throw InputError(wi, "expected " + std::to_string(d2) + " rows");
    for (Index k = 0; k < d2; ++k) {
      const Json& row = slice[static_cast<std::size_t>(k)];
      const std::string wk = wi + "[" + std::to_string(k) + "]";
      if (!row.is_array() || static_cast<Index>(row.size()) != d3)
        throw InputError(wk, "expected " + std::to_string(d3) + " entries");
      for (Index l = 0; l < d3; ++l)
        out(i * d2 + k, l) = number_from_json(row[static_cast<std::size_t>(l)], wk + "[" + std::to_string(l) + "]");
    }
  }
  return out;
}

}  // namespace

Mat matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw InputError(where, "expected " + std::to_string(rows) + " rows");
  Mat out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string wi = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw InputError(wi, "expected " + std::to_string(cols) + " entries");
    for (Index k = 0; k < cols; ++k)
      out(i, k) = number_from_json(row[static_cast<std::size_t>(k)], wi + "[" + std::to_string(k) + "]");
  }
  return out;
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

InputDocument parse_document(const Json& doc, const std::string& where) {
  if (!doc.is_object()) throw InputError(where, "expected a JSON object");
  const Json& marker = field(doc, "field", where);
  if (!marker.is_string() || marker.get<std::string>() != "rational")
    throw InputError(where + ".field", "the field marker must be \"rational\"");

  InputDocument out;
  {
    const Json& alg = field(doc, "algebra", where);
    const std::string wa = where + ".algebra";
    const Index dim = index_from_json(field(alg, "dim", wa), wa + ".dim");
    out.algebra.dim = dim;
    out.algebra.mul = tensor3_from_json(field(alg, "mul", wa), dim, dim, dim, wa + ".mul");
    out.algebra.inv = matrix_from_json(field(alg, "involution", wa), dim, dim, wa + ".involution");
    if (auto it = alg.find("names"); it != alg.end()) {
      if (!it->is_array() || static_cast<Index>(it->size()) != dim)
        throw InputError(wa + ".names", "expected one name per basis vector");
      for (const auto& n : *it) out.algebra_names.push_back(n.get<std::string>());
    }
  }

  if (auto it = doc.find("bimodule"); it != doc.end()) {
    const std::string wm = where + ".bimodule";
    InvolutiveBimodule m;
    m.dim = index_from_json(field(*it, "dim", wm), wm + ".dim");
    m.algebra_dim = out.algebra.dim;
    m.left = tensor3_from_json(field(*it, "left", wm), out.algebra.dim, m.dim, m.dim, wm + ".left");
    m.right = tensor3_from_json(field(*it, "right", wm), m.dim, out.algebra.dim, m.dim, wm + ".right");
    m.inv = matrix_from_json(field(*it, "involution", wm), m.dim, m.dim, wm + ".involution");
    out.bimodule = std::move(m);
  }

  const Index mod_dim = out.bimodule ? out.bimodule->dim : out.algebra.dim;
  if (auto it = doc.find("operator"); it != doc.end())
    out.op = matrix_from_json(*it, out.algebra.dim, mod_dim, where + ".operator");
  if (auto it = doc.find("cocycle"); it != doc.end())
    out.cocycle = matrix_from_json(*it, mod_dim, out.algebra.dim, where + ".cocycle");
  if (auto it = doc.find("series"); it != doc.end()) {
    if (!it->is_array() || it->empty()) throw InputError(where + ".series", "expected a nonempty list of matrices");
    std::vector<Mat> terms;
    for (std::size_t k = 0; k < it->size(); ++k)
      terms.push_back(matrix_from_json((*it)[k], out.algebra.dim, mod_dim,
                                       where + ".series[" + std::to_string(k) + "]"));
    out.series = std::move(terms);
  }
  if (auto it = doc.find("dendriform"); it != doc.end()) {
    const std::string wd = where + ".dendriform";
    DendriformAlgebra d;
    d.dim = index_from_json(field(*it, "dim", wd), wd + ".dim");
    d.prec = tensor3_from_json(field(*it, "prec", wd), d.dim, d.dim, d.dim, wd + ".prec");
    d.succ = tensor3_from_json(field(*it, "succ", wd), d.dim, d.dim, d.dim, wd + ".succ");
    if (auto inv = it->find("involution"); inv != it->end())
      d.inv = matrix_from_json(*inv, d.dim, d.dim, wd + ".involution");
    out.dendriform = std::move(d);
  }
  return out;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path, e.what());
  }
  return parse_document(doc, path);
}

Cochain load_cochain(const std::string& path, Index src_dim, Index tgt_dim) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path, e.what());
  }
  const int degree = static_cast<int>(index_from_json(field(doc, "degree", path), path + ".degree"));
  const Json* level = &field(doc, "coeffs", path);
  // Peel the nested arrays: degree levels of src_dim, then tgt_dim entries.
  Cochain c = Cochain::zero(degree, src_dim, tgt_dim);
  std::vector<Index> tuple(static_cast<std::size_t>(degree));
  for (Index r = 0; r < c.rows(); ++r) {
    decode_tuple(r, src_dim, degree, tuple.data());
    const Json* node = level;
    std::string w = path + ".coeffs";
    for (int i = 0; i < degree; ++i) {
      if (!node->is_array() || static_cast<Index>(node->size()) != src_dim)
        throw InputError(w, "expected " + std::to_string(src_dim) + " entries");
      node = &(*node)[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])];
      w += "[" + std::to_string(tuple[static_cast<std::size_t>(i)]) + "]";
    }
    if (!node->is_array() || static_cast<Index>(node->size()) != tgt_dim)
      throw InputError(w, "expected " + std::to_string(tgt_dim) + " coordinates");
    for (Index k = 0; k < tgt_dim; ++k)
      c.coeffs(r, k) = number_from_json((*node)[static_cast<std::size_t>(k)], w + "[" + std::to_string(k) + "]");
  }
  return c;
}

Json report_to_json(const ValidationReport& report) {
  Json out;
  out["ok"] = report.ok();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json jv;
    jv["axiom"] = v.axiom;
    Json idx = Json::array();
    for (const Index i : v.indices) idx.push_back(i);
    jv["indices"] = std::move(idx);
    jv["lhs"] = vector_to_json(v.lhs);
    jv["rhs"] = vector_to_json(v.rhs);
    violations.push_back(std::move(jv));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json report_to_json(const CohomologyReport& report, const std::string& complex_name) {
  Json out;
  out["complex"] = complex_name;
  out["variant"] = variant_name(report.variant);
  out["max_degree"] = report.max_degree;
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    Json jd;
    jd["degree"] = d.degree;
    jd["cochains"] = d.dim_cochains;
    jd["cocycles"] = d.dim_cocycles;
    jd["coboundaries"] = d.dim_coboundaries;
    jd["cohomology"] = d.dim_cohomology;
    Json reps = Json::array();
    for (const Vec& r : d.representatives) reps.push_back(vector_to_json(r));
    jd["representatives"] = std::move(reps);
    degrees.push_back(std::move(jd));
  }
  out["degrees"] = std::move(degrees);
  return out;
}

std::string report_to_text(const ValidationReport& report) {
  std::ostringstream os;
  if (report.ok()) {
    os << "ok\n";
    return os.str();
  }
  os << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) {
    os << "  " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << "): lhs = [";
    for (Index i = 0; i < v.lhs.size(); ++i) os << (i ? ", " : "") << v.lhs(i);
    os << "], rhs = [";
    for (Index i = 0; i < v.rhs.size(); ++i) os << (i ? ", " : "") << v.rhs(i);
    os << "]\n";
  }
  return os.str();
}

std::string report_to_text(const CohomologyReport& report, const std::string& complex_name) {
  std::ostringstream os;
  os << complex_name << " cohomology, " << variant_name(report.variant) << " variant\n";
  os << "  degree  cochains  cocycles  coboundaries  dim H\n";
  for (const auto& d : report.degrees) {
    os << "  " << d.degree << "       " << d.dim_cochains << "         " << d.dim_cocycles << "         "
       << d.dim_coboundaries << "             " << d.dim_cohomology << "\n";
  }
  return os.str();
}

}  // namespace rbx
