/*
   Copyright 2026 The hopfimg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfimg/interchange.hpp"

#include <fstream>
#include <sstream>

namespace hopfimg {

namespace {

const Json& need(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t index_in(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound)
    throw FormatError(std::string("bad ") + what + " index " + v.dump());
  return static_cast<std::size_t>(v.get<long long>());
}

std::size_t read_dim(const Json& doc) {
  const Json& d = need(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw FormatError("dim must be a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

/// Entries [i, j, k, s] of a rank-3 tensor; repeated entries add up.
StructureTensor tensor_from_json(const Json& v, const Context& ctx, std::size_t d) {
  StructureTensor t(ctx, d, d, d);
  if (!v.is_array()) throw FormatError("structure tensor must be a list");
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 4) throw FormatError("tensor entry must be [i, j, k, scalar]");
    t.add(index_in(e[0], d, "tensor"), index_in(e[1], d, "tensor"), index_in(e[2], d, "tensor"),
          scalar_from_json(e[3], ctx));
  }
  return t;
}

Json tensor_to_json(const StructureTensor& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (const auto& e : t.slice(i)) out.push_back(Json::array({i, e.j, e.k, e.value.str()}));
  return out;
}

/// Entries [i, j, s].
Matrix sparse_matrix_from_json(const Json& v, const Context& ctx, std::size_t rows, std::size_t cols) {
  Matrix m(ctx, rows, cols);
  if (!v.is_array()) throw FormatError("matrix must be a list of [row, col, scalar]");
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 3) throw FormatError("matrix entry must be [row, col, scalar]");
    m(index_in(e[0], rows, "row"), index_in(e[1], cols, "column")) += scalar_from_json(e[2], ctx);
  }
  return m;
}

Json sparse_matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back(Json::array({r, c, m(r, c).str()}));
  return out;
}

Json sparse_vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(Json::array({i, v[i].str()}));
  return out;
}

std::vector<std::string> read_labels(const Json& doc, std::size_t d) {
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& l = doc.at("labels");
    if (!l.is_array() || l.size() != d) throw FormatError("labels must be a list of dim strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw FormatError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Context document_context(const Json& doc, const Context* expected) {
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  if (!doc.contains("conductor")) {
    if (expected) return *expected;
    throw FormatError("missing field 'conductor'");
  }
  const Json& n = doc.at("conductor");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw FormatError("conductor must be a positive integer");
  unsigned conductor = static_cast<unsigned>(n.get<long long>());
  if (expected) {
    if ((*expected)->conductor() != conductor)
      throw FormatError("conductor " + std::to_string(conductor) + " differs from the session conductor " +
                        std::to_string((*expected)->conductor()));
    return *expected;
  }
  return make_context(conductor);
}

Cyclotomic scalar_from_json(const Json& v, const Context& ctx) {
  if (v.is_string()) return parse_scalar(v.get<std::string>(), ctx);
  if (v.is_number_integer()) return Cyclotomic(ctx, static_cast<long>(v.get<long long>()));
  throw FormatError("scalar must be a string or an integer, got " + v.dump());
}

Vec vector_from_json(const Json& v, const Context& ctx, std::size_t dim) {
  return guarded([&] {
    if (!v.is_array()) throw FormatError("vector must be a list");
    Vec out = zero_vec(ctx, dim);
    bool sparse = !v.empty() && v[0].is_array();
    if (sparse) {
      for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2) throw FormatError("sparse vector entry must be [index, scalar]");
        out[index_in(e[0], dim, "vector")] += scalar_from_json(e[1], ctx);
      }
    } else {
      if (v.size() != dim) throw FormatError("dense vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
      for (std::size_t i = 0; i < dim; ++i) out[i] = scalar_from_json(v[i], ctx);
    }
    return out;
  });
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Matrix matrix_from_rows_json(const Json& v, const Context& ctx, std::size_t rows, std::size_t cols) {
  if (!v.is_array() || v.size() != rows) throw FormatError("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(ctx, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) throw FormatError("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(v[r][c], ctx);
  }
  return m;
}

Json matrix_to_rows_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json algebra_to_json(const AlgebraData& a) {
  Json out;
  out["conductor"] = a.ctx->conductor();
  out["dim"] = a.dim;
  out["labels"] = a.labels;
  out["mult"] = tensor_to_json(a.mult);
  out["unit"] = sparse_vector_to_json(a.unit);
  return out;
}

AlgebraData algebra_from_json(const Json& doc, const Context* expected) {
  return guarded([&] {
    Context ctx = document_context(doc, expected);
    std::size_t d = read_dim(doc);
    return AlgebraData(ctx, d, read_labels(doc, d), tensor_from_json(need(doc, "mult"), ctx, d),
                       vector_from_json(need(doc, "unit"), ctx, d));
  });
}

Json hopf_to_json(const HopfAlgebraData& h) {
  Json out = algebra_to_json(h.algebra);
  out["comult"] = tensor_to_json(h.comult);
  out["counit"] = sparse_vector_to_json(h.counit);
  out["antipode"] = sparse_matrix_to_json(h.antipode);
  return out;
}

HopfAlgebraData hopf_from_json(const Json& doc, const Context* expected) {
  return guarded([&] {
    AlgebraData a = algebra_from_json(doc, expected);
    const Context ctx = a.ctx;
    const std::size_t d = a.dim;
    return HopfAlgebraData(std::move(a), tensor_from_json(need(doc, "comult"), ctx, d),
                           vector_from_json(need(doc, "counit"), ctx, d),
                           sparse_matrix_from_json(need(doc, "antipode"), ctx, d, d));
  });
}

Json representation_to_json(const Representation& r) {
  Json out;
  out["conductor"] = r.source.ctx()->conductor();
  out["hopf"] = hopf_to_json(r.source);
  out["algebra"] = algebra_to_json(r.target);
  out["matrix"] = sparse_matrix_to_json(r.matrix);
  return out;
}

Representation representation_from_json(const Json& doc, const std::filesystem::path& base_dir,
                                         const Context* expected, const HopfAlgebraData* host) {
  return guarded([&] {
    if (!doc.is_object()) throw FormatError("representation must be a JSON object");
    std::optional<Context> ctx;
    if (host) ctx = host->ctx();
    if (expected || doc.contains("conductor")) ctx = document_context(doc, expected ? expected : ctx ? &*ctx : nullptr);
    std::optional<HopfAlgebraData> loaded;
    if (doc.contains("hopf")) {
      const Json& hj = doc.at("hopf");
      Json hdoc = hj.is_string() ? read_json_file(base_dir / hj.get<std::string>()) : hj;
      loaded = hopf_from_json(hdoc, ctx ? &*ctx : nullptr);
      if (host && !same_structure(*host, *loaded))
        throw FormatError("the representation's Hopf algebra differs from the one supplied");
    } else if (!host) {
      throw FormatError("missing field 'hopf'");
    }
    HopfAlgebraData h = loaded ? std::move(*loaded) : *host;
    Context c = h.ctx();
    AlgebraData a = algebra_from_json(need(doc, "algebra"), &c);
    Matrix m = sparse_matrix_from_json(need(doc, "matrix"), c, a.dim, h.dim());
    return Representation{std::move(h), std::move(a), std::move(m)};
  });
}

Json comodule_to_json(const Comodule& c) {
  Json out;
  out["conductor"] = c.host->ctx()->conductor();
  out["dim"] = c.dim;
  if (c.self_dual) out["self_dual"] = true;
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j)
      if (!is_zero(c.u[i][j])) coeffs.push_back(Json::array({i, j, sparse_vector_to_json(c.u[i][j])}));
  out["coefficients"] = coeffs;
  return out;
}

Comodule comodule_from_json(const Json& doc, const HopfPtr& host) {
  return guarded([&] {
    Context ctx = host->ctx();
    document_context(doc, &ctx);
    std::size_t n = read_dim(doc);
    Comodule c{host, n, std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, zero_vec(ctx, host->dim()))), false};
    if (doc.contains("self_dual")) c.self_dual = doc.at("self_dual").get<bool>();
    for (const auto& e : need(doc, "coefficients")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("coefficient entry must be [i, j, vector]");
      std::size_t i = index_in(e[0], n, "comodule"), j = index_in(e[1], n, "comodule");
      c.u[i][j] = add(c.u[i][j], vector_from_json(e[2], ctx, host->dim()));
    }
    return c;
  });
}

std::vector<Comodule> comodules_from_json(const Json& doc, const HopfPtr& host) {
  return guarded([&] {
    std::vector<Comodule> out;
    if (doc.is_object() && doc.contains("comodules")) {
      Context ctx = host->ctx();
      document_context(doc, &ctx);
      for (const auto& c : doc.at("comodules")) out.push_back(comodule_from_json(c, host));
    } else if (doc.is_array()) {
      for (const auto& c : doc) out.push_back(comodule_from_json(c, host));
    } else {
      out.push_back(comodule_from_json(doc, host));
    }
    return out;
  });
}

std::vector<Vec> vectors_from_json(const Json& doc, const HopfAlgebraData& h) {
  return guarded([&] {
    const Json* list = &doc;
    if (doc.is_object()) {
      Context ctx = h.ctx();
      document_context(doc, &ctx);
      list = &need(doc, "grouplikes");
    }
    if (!list->is_array()) throw FormatError("expected a list of vectors");
    std::vector<Vec> out;
    for (const auto& v : *list) out.push_back(vector_from_json(v, h.ctx(), h.dim()));
    return out;
  });
}

TwistElement twist_from_json(const Json& doc, const HopfAlgebraData& h) {
  return guarded([&] {
    Context ctx = h.ctx();
    document_context(doc, &ctx);
    const std::size_t d = h.dim();
    auto flat = [&](const Json& v) {
      Matrix m = sparse_matrix_from_json(v, ctx, d, d);
      Vec out = zero_vec(ctx, d * d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i * d + j] = m(i, j);
      return out;
    };
    std::optional<Vec> inv;
    if (doc.contains("omega_inv")) inv = flat(doc.at("omega_inv"));
    return make_twist(h, flat(need(doc, "omega")), inv);
  });
}

Json twist_to_json(const TwistElement& t) {
  const std::size_t d = t.host.dim();
  auto sparse = [&](const Vec& v) {
    Json out = Json::array();
    for (std::size_t p = 0; p < v.size(); ++p)
      if (!v[p].is_zero()) out.push_back(Json::array({p / d, p % d, v[p].str()}));
    return out;
  };
  Json out;
  out["conductor"] = t.host.ctx()->conductor();
  out["omega"] = sparse(t.omega);
  out["omega_inv"] = sparse(t.omega_inv);
  return out;
}

Cocycle cocycle_from_json(const Json& doc, const HopfAlgebraData& h) {
  return guarded([&] {
    Context ctx = h.ctx();
    document_context(doc, &ctx);
    const std::size_t d = h.dim();
    std::optional<Matrix> inv;
    if (doc.contains("sigma_inv")) inv = matrix_from_rows_json(doc.at("sigma_inv"), ctx, d, d);
    return make_cocycle(h, matrix_from_rows_json(need(doc, "sigma"), ctx, d, d), inv);
  });
}

Json cocycle_to_json(const Cocycle& c) {
  Json out;
  out["conductor"] = c.host.ctx()->conductor();
  out["sigma"] = matrix_to_rows_json(c.sigma);
  out["sigma_inv"] = matrix_to_rows_json(c.sigma_inv);
  return out;
}

}  // namespace hopfimg
