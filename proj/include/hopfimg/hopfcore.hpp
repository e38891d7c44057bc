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
 * @file hopfcore.hpp
 * @brief Structure-constant encodings of algebras and Hopf algebras, axiom validation, and the
 * dual, tensor-product and quotient constructions.
 *
 * Conventions (all indices 0-based):
 *  - mult(i, j, k)   = coefficient of e_k in e_i·e_j
 *  - comult(i, j, k) = coefficient of e_j ⊗ e_k in Δ(e_i)
 *  - antipode(i, j)  = coefficient of e_i in S(e_j), i.e. S acts on column vectors
 *  - vectors of H ⊗ H are flattened as index j·d + k
 */

#ifndef HOPFIMG_HOPFCORE_HPP
#define HOPFIMG_HOPFCORE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfimg/linalg.hpp"

namespace hopfimg {

/// Sparse rank-3 tensor T(i, j, k) stored slice by slice along i; entries sorted by (j, k).
class StructureTensor {
 public:
  struct Entry {
    std::size_t j, k;
    Cyclotomic value;
  };

  StructureTensor(Context ctx, std::size_t d0, std::size_t d1, std::size_t d2);

  std::size_t extent(int axis) const noexcept { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }
  const Context& context() const noexcept { return ctx_; }

  /// Replaces slice i with the nonzeros of a dense d1·d2 vector (index j·d2 + k).
  void set_slice(std::size_t i, const Vec& dense);
  void add(std::size_t i, std::size_t j, std::size_t k, const Cyclotomic& value);
  const std::vector<Entry>& slice(std::size_t i) const { return slices_[i]; }
  Vec dense_slice(std::size_t i) const;
  Cyclotomic at(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t nonzeros() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b);

 private:
  Context ctx_;
  std::size_t d0_, d1_, d2_;
  std::vector<std::vector<Entry>> slices_;
};

/// Outcome of one axiom check; `witness` names a basis tuple where the identity breaks.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;
};

/// Axioms in a fixed order so that reports diff cleanly.
struct ValidationReport {
  std::vector<AxiomResult> results;

  bool ok() const;
  const AxiomResult* find(const std::string& axiom) const;
  std::string str() const;
};

/// Unital associative algebra by structure constants.
struct AlgebraData {
  Context ctx;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  StructureTensor mult;  // mult(i, j, k)
  Vec unit;

  AlgebraData(Context ctx, std::size_t dim, std::vector<std::string> labels, StructureTensor mult, Vec unit);
};

Vec multiply(const AlgebraData& a, const Vec& x, const Vec& y);
Vec basis_product(const AlgebraData& a, std::size_t i, std::size_t j);
bool is_commutative(const AlgebraData& a);
/// Associativity and the two unit laws.
ValidationReport validate_algebra(const AlgebraData& a);
/// Tensor product algebra with componentwise multiplication; basis index i·dim(b) + j.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);
/// Product in A ⊗ B of two flattened vectors.
Vec tensor_multiply(const AlgebraData& a, const AlgebraData& b, const Vec& x, const Vec& y);
/// Matrix of left multiplication by x (column j = x·e_j).
Matrix left_multiplication(const AlgebraData& a, const Vec& x);
/// Matrix of right multiplication by x (column j = e_j·x).
Matrix right_multiplication(const AlgebraData& a, const Vec& x);

/// Finite-dimensional Hopf algebra by its five structure tensors.
struct HopfAlgebraData {
  AlgebraData algebra;
  StructureTensor comult;  // comult(i, j, k)
  Vec counit;
  Matrix antipode;

  HopfAlgebraData(AlgebraData algebra, StructureTensor comult, Vec counit, Matrix antipode);

  const Context& ctx() const noexcept { return algebra.ctx; }
  std::size_t dim() const noexcept { return algebra.dim; }
  const std::vector<std::string>& labels() const noexcept { return algebra.labels; }
  Vec one() const { return algebra.unit; }
};

/// Same dimension and identical structure tensors; labels are ignored.
bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b);

/// Δ(x) as a flattened d² vector.
Vec comultiply(const HopfAlgebraData& h, const Vec& x);
/// (Δ ⊗ id)∘Δ(x) as a flattened d³ vector.
Vec double_comultiply(const HopfAlgebraData& h, const Vec& x);
Cyclotomic counit_of(const HopfAlgebraData& h, const Vec& x);
Vec antipode_of(const HopfAlgebraData& h, const Vec& x);
bool is_cocommutative(const HopfAlgebraData& h);

/// Checks, in order: associativity, unit, coassociativity, counit, comult_multiplicative,
/// comult_unital, counit_multiplicative, counit_unital, antipode_left, antipode_right.
ValidationReport validate(const HopfAlgebraData& h);

/// The 1-dimensional Hopf algebra k.
HopfAlgebraData trivial_hopf(const Context& ctx);

/// Linear dual: multiplication and comultiplication swap roles, everything else transposes.
HopfAlgebraData dual(const HopfAlgebraData& h);

/// H ⊗ L with componentwise structure; basis label "(a,b)" at index a·dim(L) + b.
HopfAlgebraData tensor_hopf(const HopfAlgebraData& h, const HopfAlgebraData& l);

struct HopfMorphism {
  HopfAlgebraData source;
  HopfAlgebraData target;
  Matrix matrix;  // target.dim × source.dim
};

/// Checks unit, multiplicativity, comultiplicativity, counit and antipode compatibility on the basis.
ValidationReport verify_morphism(const HopfMorphism& f);

struct HopfIdealCheck {
  bool ok = true;
  std::string failed;          // "left_ideal", "right_ideal", "counit", "coideal" or "antipode"
  std::size_t element = 0;     // index of the ideal's basis vector
  std::size_t partner = 0;     // H basis index for the ideal inclusions
  explicit operator bool() const noexcept { return ok; }
};

/// Two-sided ideal, coideal (Δ(I) ⊆ I⊗H + H⊗I and ε(I) = 0) and S-stable.
/// The coideal test applies p ⊗ p for the quotient projection p: ker(p ⊗ p) = I⊗H + H⊗I.
HopfIdealCheck is_hopf_ideal(const HopfAlgebraData& h, const Subspace& ideal);

struct QuotientHopf {
  HopfAlgebraData algebra;
  HopfMorphism projection;
  QuotientData coordinates;
};

/// H/I on the complement basis of I. Throws NotAHopfIdeal.
QuotientHopf quotient_hopf(const HopfAlgebraData& h, const Subspace& ideal);

/// Kernel of ε.
Subspace augmentation_ideal(const HopfAlgebraData& h);

}  // namespace hopfimg

#endif  // HOPFIMG_HOPFCORE_HPP
