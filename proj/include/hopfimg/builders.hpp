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
 * @file builders.hpp
 * @brief Constructors for the example families: group tables, group and function algebras,
 * Taft algebras, the 4k-dimensional quotients A(k, e) with their 2-dimensional representations,
 * and small auxiliary algebras and representations.
 */

#ifndef HOPFIMG_BUILDERS_HPP
#define HOPFIMG_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfimg/tannaka.hpp"

namespace hopfimg {

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mult;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;
};

/// Validates associativity, identity and inverses by brute force. Throws InvalidTable.
GroupTable make_group_table(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels = {});

GroupTable cyclic_group_table(std::size_t n);
/// A × B with element (a, b) at index a·|B| + b.
GroupTable direct_product_table(const GroupTable& a, const GroupTable& b);
/// Dihedral group of order 2n; r^i at index i, r^i s at index n + i.
GroupTable dihedral_group_table(std::size_t n);
/// Order of an element.
std::size_t element_order(const GroupTable& t, std::size_t g);
/// Subgroup generated by the given elements, sorted.
std::vector<std::size_t> generated_subgroup(const GroupTable& t, const std::vector<std::size_t>& gens);

/// Irreducible characters, each as its list of values on the group elements.
struct CharacterTable {
  std::vector<std::vector<Cyclotomic>> characters;
};

struct SymmetricGroup {
  GroupTable table;
  CharacterTable characters;
  std::vector<std::vector<int>> permutations;  // images of 1..n; (στ)(x) = σ(τ(x))
};

/// S_n for n ≤ 4, elements in lexicographic order of their image lists, labels in cycle notation.
SymmetricGroup symmetric_group_table(const Context& ctx, int n);
/// Index of the permutation written in cycle notation, e.g. "(1,2)(3,4)" or "()".
std::size_t find_permutation(const SymmetricGroup& s, const std::string& cycles);

struct BuiltHopf {
  HopfAlgebraData hopf;
  GroupLikeSet grouplikes;
};

BuiltHopf group_algebra(const Context& ctx, const GroupTable& t);
/// k^Γ on the indicator basis δ_g; group-likes are the linear characters found in the field.
BuiltHopf function_algebra(const Context& ctx, const GroupTable& t);
/// Homomorphisms Γ → k^× with values in the base field, as value lists.
std::vector<std::vector<Cyclotomic>> linear_characters(const Context& ctx, const GroupTable& t);
/// Character table of an abelian group from its linear characters. Throws MissingCharacterTable
/// when the field does not hold all of them.
CharacterTable abelian_character_table(const Context& ctx, const GroupTable& t);

/// k^n with the idempotent basis.
AlgebraData product_algebra(const Context& ctx, std::size_t n);
/// M_n with basis E_ij at index i·n + j.
AlgebraData matrix_algebra(const Context& ctx, std::size_t n);
/// The underlying algebra of H mapped identically.
Representation identity_rep(const HopfAlgebraData& h);
/// The counit as a representation on the 1-dimensional algebra.
Representation counit_rep(const HopfAlgebraData& h);

/// f ↦ (f(g_1), …, f(g_n)) on a function algebra. Throws IndexOutOfRange.
Representation evaluation_rep(const HopfAlgebraData& function_algebra, const std::vector<std::size_t>& points);
/// Whether π separates the irreducible characters Σ_g χ(g) δ_g: distinct characters have
/// distinct images.
/// Throws MissingCharacterTable when the table does not match the algebra.
bool character_span_injectivity(const CharacterTable& chars, const Representation& r);

/// Taft algebra of dimension n² with basis g^i x^j at index i·n + j. Throws WrongOrder.
BuiltHopf taft(const Context& ctx, std::size_t n, const Cyclotomic& q);

/// The quotient A(k, e): two 2k-dimensional components (diagonal D, antidiagonal A) spanned by
/// alternating words in s, u of length ≤ k, the length-k word always starting with s.
struct AkeData {
  HopfPtr hopf;
  std::size_t k = 0;
  int e = 1;
  GroupLikeSet grouplikes;          // 1, d, g, h (only 1, d when the field lacks a square root of e)
  std::vector<Comodule> comodules;  // C(1), …, C(k−1)
  Vec v11, v12, v21, v22;           // the generators (v21 = e·v12 when k = 1)

  /// Basis index and sign of the alternating word of the given length and first letter
  /// ('s' or 'u') in component 0 (D) or 1 (A); length ≤ k.
  std::pair<std::size_t, int> word(int component, char first, std::size_t length) const;
};

AkeData ake(const Context& ctx, std::size_t k, int e);

/// π_q into M_2: v11, v22 ↦ 0, v12 ↦ [[0, q⁻¹], [q, 0]], v21 ↦ [[0, 1], [1, 0]].
/// Throws OrderMismatch when the length-k relation is not respected.
Representation pi_q(const AkeData& a, const Cyclotomic& q);

/// x ↦ w on the base field for k[Z_n]. Throws NotAnNthRoot.
Representation cyclic_rep(const Context& ctx, std::size_t n, const Cyclotomic& w);

/// k[D_4] → k[Z_2 × Z_2], r^i s^b ↦ a^{i mod 2} b^b.
HopfMorphism dihedral_abelianization(const Context& ctx);

/// Ω = Σ β(χ, ψ) e_χ ⊗ e_ψ on k[D_4] over the Klein subgroup {1, r², s, r²s}, with
/// β((p,q), (p',q')) = (−1)^{q p'} on its character group. Returned as a d² coordinate vector.
Vec dihedral_klein_twist(const HopfAlgebraData& kd4);

/// σ(a^i b^j, a^k b^l) = (−1)^{jk} on k[Z_2 × Z_2] (basis a^i b^j at index 2i + j), as a 4×4 matrix.
Matrix klein_bicharacter(const Context& ctx);

}  // namespace hopfimg

#endif  // HOPFIMG_BUILDERS_HPP
