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

/**
 * @file hopfimage.hpp
 * @brief Representations of Hopf algebras on algebras, the convolution closure of their
 * coefficient functionals, Hopf images and inner faithfulness.
 */

#ifndef HOPFIMG_HOPFIMAGE_HPP
#define HOPFIMG_HOPFIMAGE_HPP

#include <optional>
#include <vector>

#include "hopfimg/hopfcore.hpp"

namespace hopfimg {

/// Algebra map π : H → A, stored as a dim(A) × dim(H) matrix.
struct Representation {
  HopfAlgebraData source;
  AlgebraData target;
  Matrix matrix;
};

/// Checks "unit" and "multiplicative" on all basis pairs. Throws ShapeMismatch on bad shapes.
ValidationReport validate_rep(const Representation& r);

struct ConvolutionClosure {
  Subspace generators;  // W: coefficient functionals, closed under the dual antipode
  Subspace closure;     // C: unital convolution subalgebra of H* generated by W
  Subspace ideal;       // annihilator of C inside H
  std::vector<std::size_t> antipode_trace;     // dim W after each round
  std::vector<std::size_t> convolution_trace;  // dim C after each round
};

/// Convolution product (f ∗ g)(e_i) = Σ Δ(i,j,k) f(e_j) g(e_k).
Vec convolve(const HopfAlgebraData& h, const Vec& f, const Vec& g);

/// Largest Hopf ideal inside Ker(π), as the annihilator of the dual fixpoint.
/// Throws InvalidRepresentation when validate_rep fails.
ConvolutionClosure compute_closure(const Representation& r);

struct HopfImageResult {
  Subspace ideal;
  HopfAlgebraData image;
  HopfMorphism projection;
  Representation induced;  // π̃ : H_π → A with π̃ ∘ p = π
  ConvolutionClosure closure;
};

HopfImageResult hopf_image(const Representation& r);

bool is_inner_faithful(const Representation& r);

/// π ⊗ φ : H ⊗ L → A ⊗ B. Throws ContextMismatch.
Representation tensor_rep(const Representation& r, const Representation& s);

/// Whether π ⊗ π is inner faithful.
bool is_projectively_inner_faithful(const Representation& r);

struct FactorizationCheck {
  bool composes = false;         // φ ∘ q = π
  bool hopf_morphism = false;    // q passes verify_morphism
  bool surjective = false;
  bool kernel_in_ideal = false;  // Ker(q) ⊆ I_π, so q descends to L → H_π
  std::optional<Matrix> universal;  // f : L → H_π with f ∘ q = p
  bool universal_is_isomorphism = false;

  bool ok() const noexcept { return composes && hopf_morphism && surjective && kernel_in_ideal; }
};

/// Checks that (L, q, φ) factorizes π and maps to the Hopf image. Throws ShapeMismatch.
FactorizationCheck check_factorization(const Representation& r, const HopfMorphism& q, const Representation& phi);

}  // namespace hopfimg

#endif  // HOPFIMG_HOPFIMAGE_HPP
