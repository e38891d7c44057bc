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
 * @file pointed.hpp
 * @brief Group-like elements, skew-primitive spaces and the injectivity-on-primitives test
 * for representations of pointed Hopf algebras.
 */

#ifndef HOPFIMG_POINTED_HPP
#define HOPFIMG_POINTED_HPP

#include <optional>
#include <vector>

#include "hopfimg/hopfimage.hpp"

namespace hopfimg {

/// A finite group of group-like elements with its multiplication and inverse tables.
struct GroupLikeSet {
  std::vector<Vec> elements;
  std::vector<std::vector<std::size_t>> table;  // elements[a]·elements[b] = elements[table[a][b]]
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  bool complete = true;  // false when the search could not rule out further group-likes

  std::size_t size() const noexcept { return elements.size(); }
  /// Index of v among the elements, if present.
  std::optional<std::size_t> index_of(const Vec& v) const;
};

/// Δ(g) = g⊗g and ε(g) = 1.
bool is_grouplike(const HopfAlgebraData& h, const Vec& g);

/// Keeps the group-like candidates (deduplicated, order preserved) and builds the group tables.
/// Throws NotClosed when a product or antipode image leaves the set.
GroupLikeSet verify_grouplikes(const HopfAlgebraData& h, const std::vector<Vec>& candidates);

/// Group-likes with coordinates in the base field. For cocommutative H a simultaneous eigenvector
/// search over the dual is exhaustive whenever every characteristic polynomial met splits over
/// the eigenvalue candidates; otherwise only the declared candidates are kept and the result is
/// marked incomplete.
GroupLikeSet find_grouplikes(const HopfAlgebraData& h, const std::vector<Vec>& declared = {});

struct SkewPrimitiveSpace {
  Vec g, h;
  Subspace space;
};

/// {x : Δ(x) = g⊗x + x⊗k}. Throws NotGroupLike.
SkewPrimitiveSpace skew_primitives(const HopfAlgebraData& h, const Vec& g, const Vec& k);

enum class PrimitiveSide {
  Left,   // P_{g,1}
  Right,  // P_{1,g}
};

struct PointedVerdict {
  bool injective = true;
  std::optional<std::size_t> grouplike;  // index into the GroupLikeSet of the failing g
  Vec kernel_vector;                     // nonzero primitive killed by π
};

/// Whether π is injective on every P_{g,1} (or every P_{1,g}). The caller asserts H is pointed.
PointedVerdict pointed_criterion(const Representation& r, const GroupLikeSet& gl,
                                 PrimitiveSide side = PrimitiveSide::Left);

/// Characteristic polynomial det(x·I − m), coefficients from the constant term up.
std::vector<Cyclotomic> characteristic_polynomial(const Matrix& m);

}  // namespace hopfimg

#endif  // HOPFIMG_POINTED_HPP
