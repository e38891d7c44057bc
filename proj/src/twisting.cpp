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

#include "hopfimg/twisting.hpp"

namespace hopfimg {

namespace {

using Terms = std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>>;

/// Two-sided inverse of x in an algebra, if any.
std::optional<Vec> algebra_inverse(const AlgebraData& a, const Vec& x) {
  std::optional<Vec> y = solve(left_multiplication(a, x), a.unit);
  if (!y || multiply(a, *y, x) != a.unit) return std::nullopt;
  return y;
}

/// (Δ ⊗ id)(w) for w ∈ H ⊗ H.
Vec delta_left(const HopfAlgebraData& h, const Vec& w) {
  const std::size_t d = h.dim();
  Vec out = zero_vec(h.ctx(), d * d * d);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].is_zero()) continue;
    for (const auto& e : h.comult.slice(p / d)) out[(e.j * d + e.k) * d + p % d] += w[p] * e.value;
  }
  return out;
}

/// (id ⊗ Δ)(w) for w ∈ H ⊗ H.
Vec delta_right(const HopfAlgebraData& h, const Vec& w) {
  const std::size_t d = h.dim();
  Vec out = zero_vec(h.ctx(), d * d * d);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].is_zero()) continue;
    for (const auto& e : h.comult.slice(p % d)) out[((p / d) * d + e.j) * d + e.k] += w[p] * e.value;
  }
  return out;
}

/// Conjugated or left-multiplied comultiplication tensor.
StructureTensor deformed_comult(const HopfAlgebraData& h, const AlgebraData& hh, const Vec& left,
                                const Vec* right) {
  const std::size_t d = h.dim();
  StructureTensor out(h.ctx(), d, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec v = multiply(hh, left, h.comult.dense_slice(i));
    if (right) v = multiply(hh, v, *right);
    out.set_slice(i, v);
  }
  return out;
}

Matrix conjugated_antipode(const HopfAlgebraData& h, const Vec& u, const Vec& u_inv) {
  const std::size_t d = h.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(multiply(h.algebra, multiply(h.algebra, u, h.antipode.column(i)), u_inv));
  return Matrix::from_columns(h.ctx(), cols, d);
}

std::string label_tuple(const HopfAlgebraData& h, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += h.labels()[i];
    first = false;
  }
  return s + ")";
}

std::vector<std::vector<Vec>> basis_products(const AlgebraData& a) {
  std::vector<std::vector<Vec>> p(a.dim, std::vector<Vec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) p[i][j] = basis_product(a, i, j);
  return p;
}

/// (σ ∗ τ)(e_a, e_b) for all a, b.
Matrix convolve_forms(const HopfAlgebraData& h, const Matrix& s, const Matrix& t) {
  const std::size_t d = h.dim();
  Matrix out(h.ctx(), d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& x : h.comult.slice(a))
        for (const auto& y : h.comult.slice(b)) {
          const Cyclotomic& sv = s(x.j, y.j);
          const Cyclotomic& tv = t(x.k, y.k);
          if (sv.is_zero() || tv.is_zero()) continue;
          out(a, b) += x.value * y.value * sv * tv;
        }
  return out;
}

Matrix counit_form(const HopfAlgebraData& h) {
  const std::size_t d = h.dim();
  Matrix out(h.ctx(), d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out(a, b) = h.counit[a] * h.counit[b];
  return out;
}

void require_cocycle(const Cocycle& c) {
  CocycleCheck check = check_cocycle(c);
  if (!check) throw NotACocycle(check.failed + " fails at " + check.witness);
}

}  // namespace

Terms iterated_coproduct(const HopfAlgebraData& h, std::size_t i, std::size_t n) {
  Terms terms{{{i}, Cyclotomic::one(h.ctx())}};
  for (std::size_t step = 1; step < n; ++step) {
    Terms next;
    for (const auto& [idx, c] : terms)
      for (const auto& e : h.comult.slice(idx.back())) {
        std::vector<std::size_t> t = idx;
        t.back() = e.j;
        t.push_back(e.k);
        next.emplace_back(std::move(t), c * e.value);
      }
    terms = std::move(next);
  }
  return terms;
}

const char* to_string(TwistKind k) {
  switch (k) {
    case TwistKind::Twist:
      return "twist";
    case TwistKind::PseudoTwist:
      return "pseudo-twist";
    default:
      return "neither";
  }
}

TwistElement make_twist(const HopfAlgebraData& h, const Vec& omega, std::optional<Vec> omega_inv) {
  const std::size_t d = h.dim();
  if (omega.size() != d * d) throw DimensionMismatch("twist element must live in H ⊗ H");
  AlgebraData hh = tensor_algebra(h.algebra, h.algebra);
  if (omega_inv) {
    if (omega_inv->size() != d * d || multiply(hh, omega, *omega_inv) != hh.unit ||
        multiply(hh, *omega_inv, omega) != hh.unit)
      throw NotInvertible("supplied inverse of the twist element is wrong");
  } else {
    omega_inv = algebra_inverse(hh, omega);
    if (!omega_inv) throw NotInvertible("twist element is not invertible in H ⊗ H");
  }
  Vec u = zero_vec(h.ctx(), d);
  for (std::size_t p = 0; p < omega.size(); ++p)
    if (!omega[p].is_zero())
      axpy(omega[p], multiply(h.algebra, unit_vec(h.ctx(), d, p / d), h.antipode.column(p % d)), u);
  std::optional<Vec> u_inv = algebra_inverse(h.algebra, u);
  return TwistElement{h, omega, std::move(*omega_inv), std::move(u), u_inv.value_or(Vec{})};
}

TwistCheck check_pseudo_twist(const TwistElement& t) {
  const HopfAlgebraData& h = t.host;
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  const Vec one = h.one();
  TwistCheck out;

  Vec left = zero_vec(ctx, d), right = zero_vec(ctx, d);
  for (std::size_t p = 0; p < t.omega.size(); ++p) {
    if (t.omega[p].is_zero()) continue;
    left[p % d] += h.counit[p / d] * t.omega[p];
    right[p / d] += h.counit[p % d] * t.omega[p];
  }
  if (left != one || right != one) {
    out.witness = "counit normalization of Omega";
    return out;
  }

  AlgebraData hh = tensor_algebra(h.algebra, h.algebra);
  const Vec omega1 = outer(t.omega, one), one_omega = outer(one, t.omega);
  const Vec lhs = tensor_multiply(hh, h.algebra, omega1, delta_left(h, t.omega));
  const Vec rhs = tensor_multiply(h.algebra, hh, one_omega, delta_right(h, t.omega));
  // rhs lives in H ⊗ (H ⊗ H); both flatten to (a·d + b)·d + c.
  bool twist = lhs == rhs;
  for (std::size_t i = 0; i < d && twist; ++i) {
    Vec ei = unit_vec(ctx, d, i);
    Vec di = comultiply(h, ei);
    twist = tensor_multiply(hh, h.algebra, lhs, double_comultiply(h, ei)) ==
            tensor_multiply(h.algebra, hh, rhs, delta_right(h, di));
  }
  if (twist) {
    out.kind = TwistKind::Twist;
    return out;
  }
  if (t.u_inv.empty()) {
    out.witness = "twist equation fails and u is not invertible";
    return out;
  }
  HopfAlgebraData deformed(h.algebra, deformed_comult(h, hh, t.omega, &t.omega_inv), h.counit,
                           conjugated_antipode(h, t.u, t.u_inv));
  ValidationReport report = validate(deformed);
  if (report.ok()) {
    out.kind = TwistKind::PseudoTwist;
    return out;
  }
  for (const auto& r : report.results)
    if (!r.passed) {
      out.witness = r.axiom + " at " + r.witness;
      break;
    }
  return out;
}

HopfAlgebraData twist_hopf(const TwistElement& t) {
  TwistCheck check = check_pseudo_twist(t);
  if (check.kind == TwistKind::Neither) throw NotATwist(check.witness);
  if (t.u_inv.empty()) throw NotATwist("u is not invertible");
  const HopfAlgebraData& h = t.host;
  AlgebraData hh = tensor_algebra(h.algebra, h.algebra);
  return HopfAlgebraData(h.algebra, deformed_comult(h, hh, t.omega, &t.omega_inv), h.counit,
                         conjugated_antipode(h, t.u, t.u_inv));
}

IdealTransport hopf_ideal_transport(const TwistElement& t, const Subspace& ideal) {
  HopfAlgebraData twisted = twist_hopf(t);
  return IdealTransport{static_cast<bool>(is_hopf_ideal(t.host, ideal)),
                        static_cast<bool>(is_hopf_ideal(twisted, ideal))};
}

TwistedImageCheck twisted_hopf_image_check(const Representation& r, const TwistElement& t) {
  if (r.source.dim() != t.host.dim()) throw HostMismatch("representation and twist have different hosts");
  HopfImageResult img = hopf_image(r);
  Representation twisted{twist_hopf(t), r.target, r.matrix};
  ConvolutionClosure tc = compute_closure(twisted);
  const Matrix& p = img.projection.matrix;
  Matrix pp = kron(p, p);
  TwistElement pushed = make_twist(img.image, pp.apply(t.omega), pp.apply(t.omega_inv));
  TwistedImageCheck out{img.ideal, tc.ideal, img.ideal == tc.ideal,
                        check_pseudo_twist(pushed).kind != TwistKind::Neither};
  return out;
}

Cocycle make_cocycle(const HopfAlgebraData& h, const Matrix& sigma, std::optional<Matrix> sigma_inv) {
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  if (sigma.rows() != d || sigma.cols() != d) throw DimensionMismatch("cocycle must be a d × d matrix");
  const Matrix eps = counit_form(h);
  if (!sigma_inv) {
    // (σ ∗ τ)(a, b) = Σ Δ(a)Δ(b) σ(a₁, b₁) τ(a₂, b₂), linear in τ at index a₂·d + b₂.
    Matrix sys(ctx, d * d, d * d);
    Vec rhs = zero_vec(ctx, d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        rhs[a * d + b] = eps(a, b);
        for (const auto& x : h.comult.slice(a))
          for (const auto& y : h.comult.slice(b))
            if (!sigma(x.j, y.j).is_zero()) sys(a * d + b, x.k * d + y.k) += x.value * y.value * sigma(x.j, y.j);
      }
    std::optional<Vec> tau = solve(sys, rhs);
    if (!tau) throw NotInvertible("bilinear form has no convolution inverse");
    Matrix inv(ctx, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) inv(a, b) = (*tau)[a * d + b];
    sigma_inv = std::move(inv);
  }
  if (sigma_inv->rows() != d || sigma_inv->cols() != d) throw DimensionMismatch("inverse must be a d × d matrix");
  if (convolve_forms(h, sigma, *sigma_inv) != eps || convolve_forms(h, *sigma_inv, sigma) != eps)
    throw NotInvertible("bilinear form and its claimed inverse do not convolve to ε⊗ε");
  return Cocycle{h, sigma, std::move(*sigma_inv)};
}

CocycleCheck check_cocycle(const Cocycle& c) {
  const HopfAlgebraData& h = c.host;
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  CocycleCheck out;
  auto fail = [&](const char* what, std::string witness) {
    out.ok = false;
    out.failed = what;
    out.witness = std::move(witness);
    return out;
  };
  const Vec one = h.one();
  const Vec right_one = c.sigma.apply(one), left_one = c.sigma.apply_left(one);
  for (std::size_t x = 0; x < d; ++x) {
    if (right_one[x] != h.counit[x]) return fail("normalization", "(" + h.labels()[x] + ",1)");
    if (left_one[x] != h.counit[x]) return fail("normalization", "(1," + h.labels()[x] + ")");
  }
  const Matrix eps = counit_form(h);
  if (convolve_forms(h, c.sigma, c.sigma_inv) != eps || convolve_forms(h, c.sigma_inv, c.sigma) != eps)
    return fail("inverse", "sigma * sigma^-1");

  const auto prod = basis_products(h.algebra);
  // w(x, y) = Σ σ(x₁, y₁) x₂y₂  and  v(y, z) = Σ σ(y₁, z₁) y₂z₂
  std::vector<Vec> w(d * d, zero_vec(ctx, d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (const auto& a : h.comult.slice(x))
        for (const auto& b : h.comult.slice(y)) {
          const Cyclotomic& s = c.sigma(a.j, b.j);
          if (!s.is_zero()) axpy(a.value * b.value * s, prod[a.k][b.k], w[x * d + y]);
        }
  std::vector<Vec> lhs(d * d), rhs(d * d);
  for (std::size_t p = 0; p < d * d; ++p) {
    lhs[p] = c.sigma.apply_left(w[p]);  // indexed by z
    rhs[p] = c.sigma.apply(w[p]);       // w read as v(y, z), indexed by x
  }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        if (lhs[x * d + y][z] != rhs[y * d + z][x]) return fail("cocycle", label_tuple(h, {x, y, z}));
  return out;
}

HopfAlgebraData cotwist_hopf(const Cocycle& c) {
  require_cocycle(c);
  const HopfAlgebraData& h = c.host;
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  const auto prod = basis_products(h.algebra);
  std::vector<Terms> delta3(d);
  for (std::size_t i = 0; i < d; ++i) delta3[i] = iterated_coproduct(h, i, 3);
  StructureTensor mult(ctx, d, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    Vec slice = zero_vec(ctx, d * d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec v = zero_vec(ctx, d);
      for (const auto& [x, cx] : delta3[a])
        for (const auto& [y, cy] : delta3[b]) {
          const Cyclotomic& s = c.sigma(x[0], y[0]);
          const Cyclotomic& t = c.sigma_inv(x[2], y[2]);
          if (s.is_zero() || t.is_zero()) continue;
          axpy(cx * cy * s * t, prod[x[1]][y[1]], v);
        }
      for (std::size_t k = 0; k < d; ++k) slice[b * d + k] = v[k];
    }
    mult.set_slice(a, slice);
  }
  const Matrix sigma_s = c.sigma * h.antipode;                   // σ(e_a, S e_b)
  const Matrix s_sigma_inv = h.antipode.transpose() * c.sigma_inv;  // σ⁻¹(S e_a, e_b)
  Matrix antipode(ctx, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec col = zero_vec(ctx, d);
    for (const auto& [x, cx] : iterated_coproduct(h, i, 5)) {
      const Cyclotomic& s = sigma_s(x[0], x[1]);
      const Cyclotomic& t = s_sigma_inv(x[3], x[4]);
      if (s.is_zero() || t.is_zero()) continue;
      axpy(cx * s * t, h.antipode.column(x[2]), col);
    }
    for (std::size_t r = 0; r < d; ++r) antipode(r, i) = col[r];
  }
  AlgebraData alg(ctx, d, h.labels(), std::move(mult), h.one());
  return HopfAlgebraData(std::move(alg), h.comult, h.counit, std::move(antipode));
}

std::pair<AlgebraData, AlgebraData> one_sided_twisted_algebras(const Cocycle& c) {
  require_cocycle(c);
  const HopfAlgebraData& h = c.host;
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  const auto prod = basis_products(h.algebra);
  StructureTensor left(ctx, d, d, d), right(ctx, d, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    Vec ls = zero_vec(ctx, d * d), rs = zero_vec(ctx, d * d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec lv = zero_vec(ctx, d), rv = zero_vec(ctx, d);
      for (const auto& x : h.comult.slice(a))
        for (const auto& y : h.comult.slice(b)) {
          const Cyclotomic coeff = x.value * y.value;
          if (!c.sigma(x.j, y.j).is_zero()) axpy(coeff * c.sigma(x.j, y.j), prod[x.k][y.k], lv);
          if (!c.sigma_inv(x.k, y.k).is_zero()) axpy(coeff * c.sigma_inv(x.k, y.k), prod[x.j][y.j], rv);
        }
      for (std::size_t k = 0; k < d; ++k) {
        ls[b * d + k] = lv[k];
        rs[b * d + k] = rv[k];
      }
    }
    left.set_slice(a, ls);
    right.set_slice(a, rs);
  }
  std::vector<std::string> ll, rl;
  for (const auto& l : h.labels()) {
    ll.push_back("{" + l + "}");
    rl.push_back("<" + l + ">");
  }
  return {AlgebraData(ctx, d, std::move(ll), std::move(left), h.one()),
          AlgebraData(ctx, d, std::move(rl), std::move(right), h.one())};
}

Cocycle induced_cocycle(const Cocycle& sigma_on_target, const HopfMorphism& p) {
  const std::size_t dk = sigma_on_target.host.dim();
  if (p.target.dim() != dk || p.matrix.rows() != dk) throw ShapeMismatch("morphism does not land in the cocycle's host");
  if (rank(p.matrix) != dk) throw NotSurjective("Hopf map is not surjective");
  const Matrix pt = p.matrix.transpose();
  return Cocycle{p.source, pt * sigma_on_target.sigma * p.matrix, pt * sigma_on_target.sigma_inv * p.matrix};
}

}  // namespace hopfimg
