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
 * @file twisting.hpp
 * @brief Drinfeld twists and pseudo-twists of the comultiplication, and 2-cocycle deformations
 * (cotwists) of the multiplication.
 */

#ifndef HOPFIMG_TWISTING_HPP
#define HOPFIMG_TWISTING_HPP

#include <optional>
#include <string>
#include <utility>

#include "hopfimg/hopfimage.hpp"

namespace hopfimg {

/// Invertible Ω ∈ H ⊗ H (flattened, index j·d + k) with u = m∘(id⊗S)(Ω).
struct TwistElement {
  HopfAlgebraData host;
  Vec omega, omega_inv;
  Vec u, u_inv;
};

/// Computes the missing inverses by linear solves. Throws NotInvertible.
TwistElement make_twist(const HopfAlgebraData& h, const Vec& omega, std::optional<Vec> omega_inv = std::nullopt);

enum class TwistKind { Twist, PseudoTwist, Neither };

struct TwistCheck {
  TwistKind kind = TwistKind::Neither;
  std::string witness;  // violated identity when Neither
};

const char* to_string(TwistKind k);

/// Twist: (ε⊗id)Ω = 1 = (id⊗ε)Ω and x ↦ Ω·Δ(x) is coassociative.
/// Pseudo-twist: the normalization, x ↦ Ω·Δ(x)·Ω⁻¹ is coassociative, and S_u = u·S(·)·u⁻¹ is an
/// antipode for it, with u the canonical element above.
TwistCheck check_pseudo_twist(const TwistElement& t);

/// H_Ω = (H, m, 1, Ω·Δ·Ω⁻¹, ε, S_u). Throws NotATwist.
HopfAlgebraData twist_hopf(const TwistElement& t);

struct IdealTransport {
  bool in_host = false;
  bool in_twisted = false;
  bool agree() const noexcept { return in_host == in_twisted; }
};

/// Hopf-ideal verdicts for the same subspace in H and in H_Ω.
IdealTransport hopf_ideal_transport(const TwistElement& t, const Subspace& ideal);

struct TwistedImageCheck {
  Subspace ideal_host;
  Subspace ideal_twisted;
  bool ideals_equal = false;
  bool pushforward_is_pseudo_twist = false;  // (p⊗p)(Ω) on the Hopf image
  bool ok() const noexcept { return ideals_equal && pushforward_is_pseudo_twist; }
};

/// Computes I_π over H and over H_Ω (same algebra, same π) and the pushed-forward twist.
TwistedImageCheck twisted_hopf_image_check(const Representation& r, const TwistElement& t);

/// Bilinear form σ(e_a, e_b) = sigma(a, b) with its convolution inverse.
struct Cocycle {
  HopfAlgebraData host;
  Matrix sigma, sigma_inv;
};

/// Computes the convolution inverse when absent. Throws NotInvertible.
Cocycle make_cocycle(const HopfAlgebraData& h, const Matrix& sigma, std::optional<Matrix> sigma_inv = std::nullopt);

struct CocycleCheck {
  bool ok = true;
  std::string failed;   // "normalization", "cocycle" or "inverse"
  std::string witness;  // basis tuple
  explicit operator bool() const noexcept { return ok; }
};

/// Normalization σ(x,1) = σ(1,x) = ε(x), σ(x₁,y₁)σ(x₂y₂,z) = σ(y₁,z₁)σ(x,y₂z₂), and σ ∗ σ⁻¹ = ε⊗ε = σ⁻¹ ∗ σ.
CocycleCheck check_cocycle(const Cocycle& c);

/// H^σ with [x][y] = σ(x₁,y₁)σ⁻¹(x₃,y₃)[x₂y₂] and S^σ(x) = σ(x₁,S(x₂))σ⁻¹(S(x₄),x₅)S(x₃).
/// Throws NotACocycle.
HopfAlgebraData cotwist_hopf(const Cocycle& c);

/// ({x}{y} = σ(x₁,y₁){x₂y₂}, ⟨x⟩⟨y⟩ = σ⁻¹(x₂,y₂)⟨x₁y₁⟩). Throws NotACocycle.
std::pair<AlgebraData, AlgebraData> one_sided_twisted_algebras(const Cocycle& c);

/// σ∘(p⊗p) on the source of a surjective Hopf map p. Throws NotSurjective.
Cocycle induced_cocycle(const Cocycle& sigma_on_target, const HopfMorphism& p);

/// Terms of the (n−1)-fold iterated coproduct of e_i as (index tuple, coefficient).
std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> iterated_coproduct(const HopfAlgebraData& h,
                                                                                  std::size_t i, std::size_t n);

}  // namespace hopfimg

#endif  // HOPFIMG_TWISTING_HPP
