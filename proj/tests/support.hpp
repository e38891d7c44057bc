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

// Seeded generators and numeric oracles shared by the test binaries.

#ifndef HOPFIMG_TESTS_SUPPORT_HPP
#define HOPFIMG_TESTS_SUPPORT_HPP

#include <complex>
#include <optional>
#include <numbers>
#include <random>

#include "hopfimg/builders.hpp"
#include "hopfimg/twisting.hpp"

namespace hopfimg::testing {

using Complex = std::complex<double>;

/// Embedding Q(ζ_N) → C with ζ ↦ exp(2πi/N), computed independently of the exact arithmetic.
inline Complex embed(const Cyclotomic& a) {
  const double n = a.context()->conductor();
  Complex out = 0;
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    out += c[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / n);
  return out;
}

inline bool near(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

inline Rational random_rational(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Cyclotomic random_scalar(std::mt19937& rng, const Context& ctx, int bound = 5) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < ctx->degree(); ++i) c.push_back(random_rational(rng, bound));
  return Cyclotomic(ctx, c);
}

/// Small integer entries, many zeros.
inline Cyclotomic sparse_scalar(std::mt19937& rng, const Context& ctx) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0:
    case 1:
      return Cyclotomic::zero(ctx);
    case 2:
      return Cyclotomic(ctx, static_cast<long>(pick(rng)) - 1);
    default:
      return Cyclotomic::zeta(ctx, pick(rng));
  }
}

inline Vec random_vec(std::mt19937& rng, const Context& ctx, std::size_t n) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(sparse_scalar(rng, ctx));
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, const Context& ctx, std::size_t rows, std::size_t cols) {
  Matrix m(ctx, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse_scalar(rng, ctx);
  return m;
}

inline Subspace random_subspace(std::mt19937& rng, const Context& ctx, std::size_t ambient) {
  std::uniform_int_distribution<std::size_t> count(0, ambient);
  std::vector<Vec> vs;
  for (std::size_t i = count(rng); i > 0; --i) vs.push_back(random_vec(rng, ctx, ambient));
  return Subspace::span(ctx, ambient, vs);
}

/// A random representation of the Taft algebra T_n(q) on M_m: g ↦ diag(q^{a_i}), x ↦ a strictly
/// upper-triangular matrix supported where a_j ≡ a_i + 1 (mod n). Empty when x^n ≠ 0.
inline std::optional<Representation> random_taft_rep(std::mt19937& rng, const HopfAlgebraData& t, std::size_t n,
                                                     const Cyclotomic& q, std::size_t m) {
  const Context& ctx = t.ctx();
  std::uniform_int_distribution<std::size_t> level(0, n - 1);
  std::vector<std::size_t> a(m);
  for (auto& v : a) v = level(rng);
  Matrix g(ctx, m, m), x(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i) g(i, i) = q.pow(static_cast<long>(a[i]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (a[j] == (a[i] + 1) % n) x(i, j) = sparse_scalar(rng, ctx);
  AlgebraData target = matrix_algebra(ctx, m);
  Matrix pi(ctx, m * m, t.dim());
  Matrix ga = Matrix::identity(ctx, m);
  for (std::size_t p = 0; p < n; ++p) {
    Matrix gx = ga;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) pi(i * m + j, p * n + b) = gx(i, j);
      gx = gx * x;
    }
    ga = ga * g;
  }
  Representation r{t, std::move(target), std::move(pi)};
  if (!validate_rep(r).ok()) return std::nullopt;
  return r;
}

/// Simple comodules of k^{S_3}: the two linear characters and the standard 2-dim representation,
/// with coefficients u_ji = Σ_g ρ(g)_ji δ_g.
inline std::vector<Comodule> s3_function_simples(const Context& ctx, const SymmetricGroup& s, const HopfPtr& h) {
  std::vector<Comodule> out;
  for (const auto& chi : s.characters.characters) {
    if (chi[s.table.identity] != Cyclotomic::one(ctx)) continue;
    Comodule c;
    c.host = h;
    c.dim = 1;
    c.u = {{Vec(chi.begin(), chi.end())}};
    out.push_back(c);
  }
  // Standard representation on v1 = e1 − e2, v2 = e2 − e3; a vector (c1, c2, c3) has coordinates (c1, −c3).
  Comodule st;
  st.host = h;
  st.dim = 2;
  st.u.assign(2, std::vector<Vec>(2, zero_vec(ctx, 6)));
  for (std::size_t g = 0; g < 6; ++g) {
    const auto& p = s.permutations[g];
    auto image = [&](int from, int to) {
      long c[3] = {0, 0, 0};
      c[p[from] - 1] += 1;
      c[p[to] - 1] -= 1;
      return std::pair<long, long>{c[0], -c[2]};
    };
    auto [a1, b1] = image(0, 1);
    auto [a2, b2] = image(1, 2);
    st.u[0][0][g] = Cyclotomic(ctx, a1);
    st.u[1][0][g] = Cyclotomic(ctx, b1);
    st.u[0][1][g] = Cyclotomic(ctx, a2);
    st.u[1][1][g] = Cyclotomic(ctx, b2);
  }
  out.push_back(st);
  return out;
}

template <typename T>
std::vector<std::pair<T, T>> all_pairs(const std::vector<T>& xs) {
  std::vector<std::pair<T, T>> out;
  for (const auto& a : xs)
    for (const auto& b : xs) out.emplace_back(a, b);
  return out;
}

}  // namespace hopfimg::testing

#endif  // HOPFIMG_TESTS_SUPPORT_HPP
