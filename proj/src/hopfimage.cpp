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

#include "hopfimg/hopfimage.hpp"

namespace hopfimg {

namespace {

void check_shape(const Representation& r) {
  if (!same_field(r.source.ctx(), r.target.ctx)) throw ContextMismatch("representation: different conductors");
  if (r.matrix.rows() != r.target.dim || r.matrix.cols() != r.source.dim())
    throw ShapeMismatch("representation matrix is " + std::to_string(r.matrix.rows()) + "x" +
                        std::to_string(r.matrix.cols()) + ", expected " + std::to_string(r.target.dim) + "x" +
                        std::to_string(r.source.dim()));
}

}  // namespace

ValidationReport validate_rep(const Representation& r) {
  check_shape(r);
  ValidationReport report;
  const auto& h = r.source.algebra;
  const auto& labels = h.labels;
  report.results.push_back({"unit", r.matrix.apply(h.unit) == r.target.unit, "(1)"});
  if (report.results.back().passed) report.results.back().witness.clear();
  AxiomResult mult{"multiplicative", true, ""};
  std::vector<Vec> img(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) img[i] = r.matrix.column(i);
  for (std::size_t i = 0; i < h.dim && mult.passed; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      if (r.matrix.apply(basis_product(h, i, j)) != multiply(r.target, img[i], img[j])) {
        mult.passed = false;
        mult.witness = "(" + labels[i] + "," + labels[j] + ")";
        break;
      }
  report.results.push_back(mult);
  return report;
}

Vec convolve(const HopfAlgebraData& h, const Vec& f, const Vec& g) {
  const std::size_t d = h.dim();
  Vec out = zero_vec(h.ctx(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& e : h.comult.slice(i)) {
      if (f[e.j].is_zero() || g[e.k].is_zero()) continue;
      out[i] += e.value * f[e.j] * g[e.k];
    }
  return out;
}

ConvolutionClosure compute_closure(const Representation& r) {
  ValidationReport report = validate_rep(r);
  if (!report.ok()) throw InvalidRepresentation("not an algebra map:\n" + report.str());
  const HopfAlgebraData& h = r.source;
  const Context& ctx = h.ctx();
  const std::size_t d = h.dim();

  IncrementalBasis w(ctx, d);
  for (const auto& row : r.matrix.row_vectors()) w.add(row);
  std::vector<std::size_t> antipode_trace{w.dim()};
  for (std::size_t done = 0; done < w.dim();) {
    const std::size_t end = w.dim();
    for (; done < end; ++done) w.add(h.antipode.apply_left(w.added()[done]));
    antipode_trace.push_back(w.dim());
  }

  IncrementalBasis c(ctx, d);
  c.add(h.counit);
  for (const auto& f : w.added()) c.add(f);
  std::vector<std::size_t> convolution_trace{c.dim()};
  for (std::size_t done = 0; done < c.dim();) {
    const std::size_t end = c.dim();
    for (; done < end; ++done)
      for (const auto& g : w.added()) c.add(convolve(h, c.added()[done], g));
    convolution_trace.push_back(c.dim());
  }

  Subspace closure = c.subspace();
  Subspace ideal = annihilator(closure);
  return ConvolutionClosure{w.subspace(), std::move(closure), std::move(ideal), std::move(antipode_trace),
                            std::move(convolution_trace)};
}

HopfImageResult hopf_image(const Representation& r) {
  ConvolutionClosure closure = compute_closure(r);
  QuotientHopf q = quotient_hopf(r.source, closure.ideal);
  Matrix induced = r.matrix * q.coordinates.section;
  if (induced * q.projection.matrix != r.matrix)
    throw NotAHopfIdeal("representation does not vanish on the computed ideal");
  Representation rep{q.algebra, r.target, std::move(induced)};
  return HopfImageResult{closure.ideal, std::move(q.algebra), std::move(q.projection), std::move(rep),
                         std::move(closure)};
}

bool is_inner_faithful(const Representation& r) { return compute_closure(r).ideal.dim() == 0; }

Representation tensor_rep(const Representation& r, const Representation& s) {
  if (!same_field(r.source.ctx(), s.source.ctx())) throw ContextMismatch("tensor_rep: different conductors");
  check_shape(r);
  check_shape(s);
  return Representation{tensor_hopf(r.source, s.source), tensor_algebra(r.target, s.target),
                        kron(r.matrix, s.matrix)};
}

bool is_projectively_inner_faithful(const Representation& r) { return is_inner_faithful(tensor_rep(r, r)); }

FactorizationCheck check_factorization(const Representation& r, const HopfMorphism& q, const Representation& phi) {
  check_shape(r);
  check_shape(phi);
  const std::size_t dh = r.source.dim(), dl = q.target.dim();
  if (q.source.dim() != dh || q.matrix.cols() != dh || q.matrix.rows() != dl || phi.source.dim() != dl ||
      phi.target.dim != r.target.dim)
    throw ShapeMismatch("factorization shapes are incompatible");
  FactorizationCheck out;
  out.composes = phi.matrix * q.matrix == r.matrix;
  out.hopf_morphism = verify_morphism(q).ok();
  out.surjective = rank(q.matrix) == dl;
  if (!out.surjective) return out;
  ConvolutionClosure closure = compute_closure(r);
  Subspace ker = kernel(q.matrix);
  out.kernel_in_ideal = closure.ideal.contains(ker);
  if (!out.kernel_in_ideal) return out;
  // q = M·P with P the quotient coordinates of Ker(q) and M invertible; f = p·Σ·M⁻¹.
  QuotientData kq = quotient_data(ker);
  QuotientData ki = quotient_data(closure.ideal);
  std::optional<Matrix> m_inv = inverse(q.matrix * kq.section);
  if (!m_inv) return out;
  Matrix f = ki.projection * kq.section * *m_inv;
  out.universal_is_isomorphism = f.rows() == f.cols() && inverse(f).has_value();
  out.universal = std::move(f);
  return out;
}

}  // namespace hopfimg
