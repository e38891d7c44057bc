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
 * @file tannaka.hpp
 * @brief Comodules by coefficient matrices, comodule morphism spaces, π-morphism spaces and the
 * inner-faithfulness checks built on them.
 */

#ifndef HOPFIMG_TANNAKA_HPP
#define HOPFIMG_TANNAKA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfimg/pointed.hpp"

namespace hopfimg {

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

/// Right comodule with coaction α(e_i) = Σ_j e_j ⊗ u[j][i].
struct Comodule {
  HopfPtr host;
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> u;  // u[i][j] ∈ H
  bool self_dual = false;
};

/// Coefficients live in H, are square of size dim, and satisfy "coassociativity" and "counit".
ValidationReport validate_comodule(const Comodule& c);

Comodule trivial_comodule(const HopfPtr& host);
/// The 1-dimensional comodule of a group-like element.
Comodule grouplike_comodule(const HopfPtr& host, const Vec& g);
/// H coacting on itself by Δ.
Comodule regular_comodule(const HopfPtr& host);
/// Dual comodule with coefficients S(u[j][i]).
Comodule dual_comodule(const Comodule& c);
/// U ⊗ V with basis index i·dim(V) + k.
Comodule tensor_comodule(const Comodule& a, const Comodule& b);

/// Subspace of dim(V) × dim(U) matrices, flattened row-major.
struct HomSpace {
  std::size_t rows = 0, cols = 0;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
};

/// Comodule maps U → V.  Throws HostMismatch.
HomSpace hom_comodule(const Comodule& u, const Comodule& v);
/// Maps intertwining the coactions after applying π to the coefficients.
HomSpace hom_pi(const Representation& r, const Comodule& u, const Comodule& v);
/// Maps intertwining the coactions after applying a linear map to the coefficients.
HomSpace hom_pushforward(const Matrix& map, const Comodule& u, const Comodule& v);

struct HomComparison {
  std::size_t over_host = 0;   // dim Hom_H(U, V)
  std::size_t over_image = 0;  // dim Hom over the Hopf image
  std::size_t pi_morphisms = 0;
  bool image_equals_pi = false;  // as subspaces
  bool strict_gap = false;       // Hom_H(U, V) strictly smaller than Hom(U_π, V_π)
};

struct TannakaReport {
  std::vector<HomComparison> pairs;
  bool image_equals_pi_everywhere = true;
  bool any_gap = false;
  /// Set only when the caller asserts cosemisimplicity and that the pairs exhaust the simples.
  std::optional<bool> inner_faithful_by_criterion;
  bool inner_faithful_by_engine = false;
};

TannakaReport tannaka_equality_check(const Representation& r,
                                     const std::vector<std::pair<Comodule, Comodule>>& pairs,
                                     bool assume_cosemisimple_and_exhaustive = false);

/// Tensor word over {a, b}: a is U, b is its dual; the empty word is the trivial comodule.
Comodule word_comodule(const Comodule& u, const std::string& word);

struct TruncatedVerdict {
  bool violated = false;
  std::string word;       // witness when violated
  std::size_t checked_up_to = 0;
};

/// Compares invariant dimensions over H and after π on all words of length ≤ max_len.
/// Only a violation is conclusive. With u.self_dual the alphabet is {a}.
TruncatedVerdict truncated_fixedpoint_criterion(const Representation& r, const Comodule& u, std::size_t max_len);

struct LevelTwoReport {
  bool condition[5] = {true, true, true, true, true};
  std::string witness[5];

  bool ok() const noexcept {
    return condition[0] && condition[1] && condition[2] && condition[3] && condition[4];
  }
};

/// Sufficient condition for inner faithfulness when every simple comodule has dimension ≤ 2:
///  (1) π is injective on the group-like set; (2) π kills the diagonal coefficients of each
///  2-dim simple; (3) π(u12) is independent of each π(g); (4) π(u12^λ), π(u21^μ) independent;
///  (5) π(u12^λ), π(u12^μ) independent for λ ≠ μ.
LevelTwoReport level_two_criterion(const Representation& r, const GroupLikeSet& gl,
                                   const std::vector<Comodule>& twodim);

}  // namespace hopfimg

#endif  // HOPFIMG_TANNAKA_HPP
