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

#include "hopfimg/pointed.hpp"

#include <cstdlib>

namespace hopfimg {

std::optional<std::size_t> GroupLikeSet::index_of(const Vec& v) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == v) return i;
  return std::nullopt;
}

bool is_grouplike(const HopfAlgebraData& h, const Vec& g) {
  if (g.size() != h.dim()) throw DimensionMismatch("group-like candidate has wrong length");
  return counit_of(h, g).is_one() && comultiply(h, g) == outer(g, g);
}

GroupLikeSet verify_grouplikes(const HopfAlgebraData& h, const std::vector<Vec>& candidates) {
  GroupLikeSet out;
  for (const auto& c : candidates)
    if (is_grouplike(h, c) && !out.index_of(c)) out.elements.push_back(c);
  const std::size_t n = out.elements.size();
  out.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec p = multiply(h.algebra, out.elements[a], out.elements[b]);
      auto idx = out.index_of(p);
      if (!idx)
        throw NotClosed("product of group-likes " + std::to_string(a) + " and " + std::to_string(b) +
                        " is not in the set");
      out.table[a][b] = *idx;
    }
  auto one = out.index_of(h.one());
  if (n > 0 && !one) throw NotClosed("the unit is not among the group-likes");
  out.identity = one.value_or(0);
  out.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto idx = out.index_of(antipode_of(h, out.elements[a]));
    if (!idx || out.table[a][*idx] != out.identity)
      throw NotClosed("antipode of group-like " + std::to_string(a) + " is not its inverse in the set");
    out.inverse[a] = *idx;
  }
  return out;
}

std::vector<Cyclotomic> characteristic_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Context& ctx = m.context();
  std::vector<Cyclotomic> c(n + 1, Cyclotomic(ctx));
  c[n] = Cyclotomic::one(ctx);
  Matrix mk(ctx, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix am = m * mk;
    Cyclotomic tr(ctx);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Cyclotomic(ctx, static_cast<long>(k));
  }
  return c;
}

namespace {

Cyclotomic evaluate(const std::vector<Cyclotomic>& p, const Cyclotomic& x) {
  Cyclotomic acc(x.context());
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Synthetic division by (x − root); assumes root is a root.
std::vector<Cyclotomic> deflate(const std::vector<Cyclotomic>& p, const Cyclotomic& root) {
  const std::size_t n = p.size() - 1;
  std::vector<Cyclotomic> q(n, Cyclotomic(root.context()));
  Cyclotomic carry(root.context());
  for (std::size_t i = n; i-- > 0;) {
    carry = carry * root + p[i + 1];
    q[i] = carry;
  }
  return q;
}

std::vector<long> divisors(long v) {
  std::vector<long> out;
  v = std::labs(v);
  for (long t = 1; t * t <= v; ++t)
    if (v % t == 0) {
      out.push_back(t);
      if (t != v / t) out.push_back(v / t);
    }
  return out;
}

/// Roots of p among 0, ±ζ^j and rationals allowed by the rational root test.
std::vector<Cyclotomic> root_candidates(const std::vector<Cyclotomic>& p, const Context& ctx) {
  std::vector<Cyclotomic> out{Cyclotomic(ctx)};
  const long n = static_cast<long>(ctx->conductor());
  for (long j = 0; j < 2 * n; ++j) {
    Cyclotomic z = Cyclotomic::zeta(ctx, j);
    if (j >= n) z = -Cyclotomic::zeta(ctx, j - n);
    out.push_back(z);
  }
  bool rational = true;
  for (const auto& c : p) rational = rational && c.is_rational();
  if (rational) {
    mpz_class lcm = 1;
    for (const auto& c : p) {
      const Rational& r = c.coefficients()[0];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (const auto& c : p) {
      const Rational& r = c.coefficients()[0];
      ints.push_back(mpz_class(r * lcm));
    }
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    const mpz_class limit = 1000000;
    if (low < ints.size() && abs(ints[low]) <= limit && abs(ints.back()) <= limit) {
      for (long a : divisors(ints[low].get_si()))
        for (long b : divisors(ints.back().get_si())) {
          Rational q(a, b);
          q.canonicalize();
          Cyclotomic r(ctx, q);
          out.push_back(r);
          out.push_back(-r);
        }
    }
  }
  return out;
}

/// Eigenvalues of m found among the candidates; split = their algebraic multiplicities fill n.
std::vector<Cyclotomic> field_eigenvalues(const Matrix& m, bool& split) {
  const Context& ctx = m.context();
  std::vector<Cyclotomic> p = characteristic_polynomial(m);
  std::vector<Cyclotomic> found;
  for (const auto& cand : root_candidates(p, ctx)) {
    if (p.size() <= 1) break;
    bool seen = false;
    for (const auto& f : found) seen = seen || f == cand;
    if (seen) continue;
    bool root = false;
    while (p.size() > 1 && evaluate(p, cand).is_zero()) {
      p = deflate(p, cand);
      root = true;
    }
    if (root) found.push_back(cand);
  }
  split = p.size() <= 1;
  return found;
}

}  // namespace

GroupLikeSet find_grouplikes(const HopfAlgebraData& h, const std::vector<Vec>& declared) {
  const Context& ctx = h.ctx();
  const std::size_t d = h.dim();
  std::vector<Vec> candidates{h.one()};
  candidates.insert(candidates.end(), declared.begin(), declared.end());
  bool complete = false;
  if (is_cocommutative(h)) {
    complete = true;
    std::vector<Subspace> spaces{Subspace::full(ctx, d)};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Subspace> next;
      for (const auto& w : spaces) {
        const std::size_t n = w.dim();
        const std::vector<Vec> basis = w.basis_vectors();
        // T_i(v) = (e_i* ⊗ id)Δ(v), restricted to w in RREF coordinates.
        Matrix m(ctx, n, n);
        for (std::size_t t = 0; t < n; ++t) {
          Vec image = zero_vec(ctx, d);
          for (std::size_t j = 0; j < d; ++j) {
            if (basis[t][j].is_zero()) continue;
            for (const auto& e : h.comult.slice(j))
              if (e.j == i) image[e.k] += basis[t][j] * e.value;
          }
          if (!w.contains(image)) {
            complete = false;
            break;
          }
          Vec coords = w.coordinates(image);
          for (std::size_t s = 0; s < n; ++s) m(s, t) = coords[s];
        }
        if (!complete) break;
        bool scalar = true;
        for (std::size_t a = 0; a < n && scalar; ++a)
          for (std::size_t b = 0; b < n && scalar; ++b)
            scalar = (a == b) ? m(a, b) == m(0, 0) : m(a, b).is_zero();
        if (scalar) {
          next.push_back(w);
          continue;
        }
        bool split = false;
        for (const auto& lambda : field_eigenvalues(m, split)) {
          Matrix shifted = m;
          for (std::size_t a = 0; a < n; ++a) shifted(a, a) -= lambda;
          Subspace ker = kernel(shifted);
          std::vector<Vec> vecs;
          for (const auto& c : ker.basis_vectors()) {
            Vec v = zero_vec(ctx, d);
            for (std::size_t t = 0; t < n; ++t) axpy(c[t], basis[t], v);
            vecs.push_back(std::move(v));
          }
          next.push_back(Subspace::span(ctx, d, vecs));
        }
        complete = complete && split;
      }
      if (!complete) break;
      spaces = std::move(next);
    }
    if (complete) {
      for (const auto& w : spaces) {
        if (w.dim() != 1) continue;
        Vec g = w.basis_vectors()[0];
        Cyclotomic eps = counit_of(h, g);
        if (eps.is_zero()) continue;
        g = scale(eps.inverse(), g);
        if (is_grouplike(h, g)) candidates.push_back(std::move(g));
      }
    }
  }
  GroupLikeSet out = verify_grouplikes(h, candidates);
  out.complete = complete;
  return out;
}

SkewPrimitiveSpace skew_primitives(const HopfAlgebraData& h, const Vec& g, const Vec& k) {
  if (!is_grouplike(h, g)) throw NotGroupLike("first argument is not group-like");
  if (!is_grouplike(h, k)) throw NotGroupLike("second argument is not group-like");
  const Context& ctx = h.ctx();
  const std::size_t d = h.dim();
  std::vector<Vec> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec ej = unit_vec(ctx, d, j);
    Vec c = h.comult.dense_slice(j);
    c = sub(c, outer(g, ej));
    c = sub(c, outer(ej, k));
    cols.push_back(std::move(c));
  }
  return SkewPrimitiveSpace{g, k, kernel(Matrix::from_columns(ctx, cols, d * d))};
}

PointedVerdict pointed_criterion(const Representation& r, const GroupLikeSet& gl, PrimitiveSide side) {
  const HopfAlgebraData& h = r.source;
  const Context& ctx = h.ctx();
  const Vec one = h.one();
  PointedVerdict out;
  for (std::size_t a = 0; a < gl.size(); ++a) {
    const Vec& g = gl.elements[a];
    SkewPrimitiveSpace p =
        side == PrimitiveSide::Left ? skew_primitives(h, g, one) : skew_primitives(h, one, g);
    const std::vector<Vec> basis = p.space.basis_vectors();
    if (basis.empty()) continue;
    std::vector<Vec> images;
    for (const auto& b : basis) images.push_back(r.matrix.apply(b));
    Matrix restricted = Matrix::from_columns(ctx, images, r.matrix.rows());
    Subspace ker = kernel(restricted);
    if (ker.dim() == 0) continue;
    Vec c = ker.basis_vectors()[0];
    Vec x = zero_vec(ctx, h.dim());
    for (std::size_t t = 0; t < basis.size(); ++t) axpy(c[t], basis[t], x);
    out.injective = false;
    out.grouplike = a;
    out.kernel_vector = std::move(x);
    return out;
  }
  return out;
}

}  // namespace hopfimg
