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

#include "hopfimg/tannaka.hpp"

namespace hopfimg {

namespace {

void check_host(const Comodule& a, const Comodule& b) {
  if (!a.host || !b.host) throw HostMismatch("comodule without a host");
  if (a.host != b.host && !same_structure(*a.host, *b.host))
    throw HostMismatch("comodules live over different Hopf algebras");
}

bool independent(const Context& ctx, const Vec& a, const Vec& b) {
  return rank(Matrix::from_rows(ctx, {a, b}, a.size())) == 2;
}

}  // namespace

ValidationReport validate_comodule(const Comodule& c) {
  if (!c.host) throw HostMismatch("comodule without a host");
  const HopfAlgebraData& h = *c.host;
  if (c.u.size() != c.dim) throw DimensionMismatch("coefficient matrix has wrong size");
  for (const auto& row : c.u) {
    if (row.size() != c.dim) throw DimensionMismatch("coefficient matrix is not square");
    for (const auto& x : row)
      if (x.size() != h.dim()) throw DimensionMismatch("coefficient does not live in H");
  }
  ValidationReport report;
  AxiomResult coassoc{"coassociativity", true, ""}, counit{"counit", true, ""};
  const Context& ctx = h.ctx();
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j) {
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (coassoc.passed) {
        Vec rhs = zero_vec(ctx, h.dim() * h.dim());
        for (std::size_t k = 0; k < c.dim; ++k) axpy(Cyclotomic::one(ctx), outer(c.u[i][k], c.u[k][j]), rhs);
        if (comultiply(h, c.u[i][j]) != rhs) {
          coassoc.passed = false;
          coassoc.witness = at;
        }
      }
      if (counit.passed) {
        Cyclotomic e = counit_of(h, c.u[i][j]);
        if (i == j ? !e.is_one() : !e.is_zero()) {
          counit.passed = false;
          counit.witness = at;
        }
      }
    }
  report.results.push_back(coassoc);
  report.results.push_back(counit);
  return report;
}

Comodule trivial_comodule(const HopfPtr& host) { return grouplike_comodule(host, host->one()); }

Comodule grouplike_comodule(const HopfPtr& host, const Vec& g) {
  Comodule c;
  c.host = host;
  c.dim = 1;
  c.u = {{g}};
  return c;
}

Comodule regular_comodule(const HopfPtr& host) {
  const HopfAlgebraData& h = *host;
  const std::size_t d = h.dim();
  Comodule c;
  c.host = host;
  c.dim = d;
  c.u.assign(d, std::vector<Vec>(d, zero_vec(h.ctx(), d)));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& e : h.comult.slice(i)) c.u[e.j][i][e.k] += e.value;
  return c;
}

Comodule dual_comodule(const Comodule& c) {
  Comodule out;
  out.host = c.host;
  out.dim = c.dim;
  out.self_dual = c.self_dual;
  out.u.assign(c.dim, std::vector<Vec>(c.dim));
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j) out.u[i][j] = antipode_of(*c.host, c.u[j][i]);
  return out;
}

Comodule tensor_comodule(const Comodule& a, const Comodule& b) {
  check_host(a, b);
  Comodule out;
  out.host = a.host;
  out.dim = a.dim * b.dim;
  out.self_dual = a.self_dual && b.self_dual;
  out.u.assign(out.dim, std::vector<Vec>(out.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < b.dim; ++k)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t l = 0; l < b.dim; ++l)
          out.u[i * b.dim + k][j * b.dim + l] = multiply(a.host->algebra, a.u[i][j], b.u[k][l]);
  return out;
}

HomSpace hom_pushforward(const Matrix& map, const Comodule& u, const Comodule& v) {
  check_host(u, v);
  const Context& ctx = u.host->ctx();
  if (map.cols() != u.host->dim()) throw ShapeMismatch("coefficient map does not start at H");
  const std::size_t m = map.rows(), nu = u.dim, nv = v.dim;
  std::vector<std::vector<Vec>> pu(nu, std::vector<Vec>(nu)), pv(nv, std::vector<Vec>(nv));
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nu; ++b) pu[a][b] = map.apply(u.u[a][b]);
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = 0; b < nv; ++b) pv[a][b] = map.apply(v.u[a][b]);
  // Unknown λ[l][i] at l·nu + i; equation (j, i, c): Σ_l v'_jl[c] λ_li − Σ_k λ_jk u'_ki[c] = 0.
  Matrix sys(ctx, nv * nu * m, nv * nu);
  for (std::size_t j = 0; j < nv; ++j)
    for (std::size_t i = 0; i < nu; ++i)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t row = (j * nu + i) * m + c;
        for (std::size_t l = 0; l < nv; ++l)
          if (!pv[j][l][c].is_zero()) sys(row, l * nu + i) += pv[j][l][c];
        for (std::size_t k = 0; k < nu; ++k)
          if (!pu[k][i][c].is_zero()) sys(row, j * nu + k) -= pu[k][i][c];
      }
  return HomSpace{nv, nu, kernel(sys)};
}

HomSpace hom_comodule(const Comodule& u, const Comodule& v) {
  check_host(u, v);
  return hom_pushforward(Matrix::identity(u.host->ctx(), u.host->dim()), u, v);
}

HomSpace hom_pi(const Representation& r, const Comodule& u, const Comodule& v) {
  check_host(u, v);
  if (r.source.dim() != u.host->dim()) throw HostMismatch("representation and comodules have different hosts");
  return hom_pushforward(r.matrix, u, v);
}

TannakaReport tannaka_equality_check(const Representation& r,
                                     const std::vector<std::pair<Comodule, Comodule>>& pairs,
                                     bool assume_cosemisimple_and_exhaustive) {
  HopfImageResult img = hopf_image(r);
  TannakaReport out;
  out.inner_faithful_by_engine = img.ideal.dim() == 0;
  for (const auto& [u, v] : pairs) {
    HomSpace over_h = hom_comodule(u, v);
    HomSpace over_image = hom_pushforward(img.projection.matrix, u, v);
    HomSpace over_pi = hom_pi(r, u, v);
    HomComparison c;
    c.over_host = over_h.dim();
    c.over_image = over_image.dim();
    c.pi_morphisms = over_pi.dim();
    c.image_equals_pi = over_image.space == over_pi.space;
    c.strict_gap = c.over_host < c.pi_morphisms;
    out.image_equals_pi_everywhere = out.image_equals_pi_everywhere && c.image_equals_pi;
    out.any_gap = out.any_gap || c.strict_gap;
    out.pairs.push_back(c);
  }
  if (assume_cosemisimple_and_exhaustive) out.inner_faithful_by_criterion = !out.any_gap;
  return out;
}

Comodule word_comodule(const Comodule& u, const std::string& word) {
  if (word.empty()) return trivial_comodule(u.host);
  std::optional<Comodule> dual;
  auto letter = [&](char ch) -> Comodule {
    if (ch == 'a') return u;
    if (ch == 'b') {
      if (!dual) dual = dual_comodule(u);
      return *dual;
    }
    throw FormatError(std::string("word letter must be 'a' or 'b', got '") + ch + "'");
  };
  Comodule out = letter(word[0]);
  for (std::size_t t = 1; t < word.size(); ++t) out = tensor_comodule(out, letter(word[t]));
  return out;
}

TruncatedVerdict truncated_fixedpoint_criterion(const Representation& r, const Comodule& u, std::size_t max_len) {
  const std::string alphabet = u.self_dual ? "a" : "ab";
  const Comodule trivial = trivial_comodule(u.host);
  TruncatedVerdict out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& w : layer) {
      Comodule x = word_comodule(u, w);
      if (hom_comodule(trivial, x).dim() != hom_pi(r, trivial, x).dim()) {
        out.violated = true;
        out.word = w;
        out.checked_up_to = len;
        return out;
      }
    }
    out.checked_up_to = len;
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char ch : alphabet) next.push_back(w + ch);
    layer = std::move(next);
  }
  return out;
}

LevelTwoReport level_two_criterion(const Representation& r, const GroupLikeSet& gl,
                                   const std::vector<Comodule>& twodim) {
  const Context& ctx = r.source.ctx();
  LevelTwoReport out;
  auto fail = [&](int c, const std::string& w) {
    if (out.condition[c]) {
      out.condition[c] = false;
      out.witness[c] = w;
    }
  };
  std::vector<Vec> pg;
  for (const auto& g : gl.elements) pg.push_back(r.matrix.apply(g));
  for (std::size_t a = 0; a < pg.size(); ++a)
    for (std::size_t b = a + 1; b < pg.size(); ++b)
      if (pg[a] == pg[b]) fail(0, "g" + std::to_string(a) + ", g" + std::to_string(b));
  std::vector<Vec> p12, p21;
  for (std::size_t l = 0; l < twodim.size(); ++l) {
    const Comodule& c = twodim[l];
    if (c.dim != 2) throw DimensionMismatch("level-two data must be 2-dimensional comodules");
    if (!is_zero(r.matrix.apply(c.u[0][0])) || !is_zero(r.matrix.apply(c.u[1][1])))
      fail(1, "lambda" + std::to_string(l));
    p12.push_back(r.matrix.apply(c.u[0][1]));
    p21.push_back(r.matrix.apply(c.u[1][0]));
  }
  for (std::size_t l = 0; l < p12.size(); ++l)
    for (std::size_t a = 0; a < pg.size(); ++a)
      if (!independent(ctx, p12[l], pg[a])) fail(2, "lambda" + std::to_string(l) + ", g" + std::to_string(a));
  for (std::size_t l = 0; l < p12.size(); ++l)
    for (std::size_t m = 0; m < p21.size(); ++m)
      if (!independent(ctx, p12[l], p21[m])) fail(3, "lambda" + std::to_string(l) + ", mu" + std::to_string(m));
  for (std::size_t l = 0; l < p12.size(); ++l)
    for (std::size_t m = l + 1; m < p12.size(); ++m)
      if (!independent(ctx, p12[l], p12[m])) fail(4, "lambda" + std::to_string(l) + ", mu" + std::to_string(m));
  return out;
}

}  // namespace hopfimg
