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

#include <gtest/gtest.h>

#include "support.hpp"

namespace hopfimg {
namespace {

Representation taft2_rep(const HopfAlgebraData& t, const Matrix& g, const Matrix& x) {
  const Context& ctx = t.ctx();
  Matrix pi(ctx, 4, 4);
  Matrix ga = Matrix::identity(ctx, 2);
  for (std::size_t a = 0; a < 2; ++a, ga = ga * g) {
    Matrix gx = ga;
    for (std::size_t b = 0; b < 2; ++b, gx = gx * x)
      for (std::size_t i = 0; i < 4; ++i) pi(i, a * 2 + b) = gx(i / 2, i % 2);
  }
  return Representation{t, matrix_algebra(ctx, 2), pi};
}

Matrix diag2(const Context& ctx, long a, long b) {
  Matrix m(ctx, 2, 2);
  m(0, 0) = Cyclotomic(ctx, a);
  m(1, 1) = Cyclotomic(ctx, b);
  return m;
}

/// Random diagonal representation of k[G] for abelian G: each coordinate a character given on
/// generators of orders n_i.
Representation random_diagonal_rep(std::mt19937& rng, const Context& ctx, const GroupTable& t,
                                   const HopfAlgebraData& h, std::size_t copies) {
  std::vector<std::vector<Cyclotomic>> chars = linear_characters(ctx, t);
  std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
  Matrix pi(ctx, copies, h.dim());
  for (std::size_t c = 0; c < copies; ++c) {
    const auto& chi = chars[pick(rng)];
    for (std::size_t g = 0; g < t.order; ++g) pi(c, g) = chi[g];
  }
  return Representation{h, product_algebra(ctx, copies), pi};
}

TEST(Pointed, CyclicGroupElementsAreGrouplike) {
  auto ctx = make_context(3);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(3)).hopf;
  GroupLikeSet gl = verify_grouplikes(h, {unit_vec(ctx, 3, 0), unit_vec(ctx, 3, 1), unit_vec(ctx, 3, 2)});
  ASSERT_EQ(gl.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(gl.table[a][b], (a + b) % 3);
  EXPECT_EQ(gl.inverse[1], 2u);
}

TEST(Pointed, TaftTwoGrouplikes) {
  auto ctx = make_context(2);
  BuiltHopf t = taft(ctx, 2, Cyclotomic(ctx, -1L));
  GroupLikeSet gl = verify_grouplikes(t.hopf, {unit_vec(ctx, 4, 0), unit_vec(ctx, 4, 2)});
  EXPECT_EQ(gl.size(), 2u);
  EXPECT_TRUE(comultiply(t.hopf, unit_vec(ctx, 4, 2)) == outer(unit_vec(ctx, 4, 2), unit_vec(ctx, 4, 2)));
}

TEST(Pointed, A31BuilderGrouplikes) {
  auto ctx = make_context(12);
  AkeData a = ake(ctx, 3, 1);
  GroupLikeSet gl = verify_grouplikes(*a.hopf, a.grouplikes.elements);
  EXPECT_EQ(gl.size(), 4u);
}

TEST(Pointed, NonGrouplikeCandidatesAreDropped) {
  auto ctx = make_context(1);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(2)).hopf;
  Vec one = unit_vec(ctx, 2, 0), g = unit_vec(ctx, 2, 1);
  GroupLikeSet gl = verify_grouplikes(h, {one, g, add(one, g), g});
  EXPECT_EQ(gl.size(), 2u);
}

TEST(Pointed, UnclosedCandidatesThrow) {
  auto ctx = make_context(3);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(3)).hopf;
  EXPECT_THROW(verify_grouplikes(h, {unit_vec(ctx, 3, 0), unit_vec(ctx, 3, 1)}), NotClosed);
}

TEST(Pointed, KleinFunctionAlgebraHasItsFourCharacters) {
  auto ctx = make_context(1);
  GroupTable klein = direct_product_table(cyclic_group_table(2), cyclic_group_table(2));
  HopfAlgebraData h = function_algebra(ctx, klein).hopf;
  GroupLikeSet gl = find_grouplikes(h);
  EXPECT_TRUE(gl.complete);
  // Brute force over all ±1-valued functions on the group.
  std::size_t homs = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    auto val = [&](std::size_t g) { return (mask >> g) & 1 ? -1L : 1L; };
    bool hom = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) hom = hom && val(klein.mult[a][b]) == val(a) * val(b);
    if (!hom) continue;
    ++homs;
    Vec chi;
    for (std::size_t g = 0; g < 4; ++g) chi.push_back(Cyclotomic(ctx, val(g)));
    EXPECT_TRUE(gl.index_of(chi).has_value());
  }
  EXPECT_EQ(homs, 4u);
  EXPECT_EQ(gl.size(), 4u);
}

TEST(Pointed, GroupAlgebraOfZ4HasExactlyItsElements) {
  auto ctx = make_context(4);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(4)).hopf;
  GroupLikeSet gl = find_grouplikes(h);
  EXPECT_TRUE(gl.complete);
  ASSERT_EQ(gl.size(), 4u);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_TRUE(gl.index_of(unit_vec(ctx, 4, a)).has_value());
}

TEST(Pointed, TrivialHopfAlgebraHasOnlyTheUnit) {
  auto ctx = make_context(5);
  GroupLikeSet gl = find_grouplikes(trivial_hopf(ctx));
  EXPECT_EQ(gl.size(), 1u);
  EXPECT_TRUE(gl.complete);
}

TEST(Pointed, FunctionAlgebraWithMissingRootsIsIncomplete) {
  auto ctx = make_context(1);
  GroupLikeSet gl = find_grouplikes(function_algebra(ctx, cyclic_group_table(3)).hopf);
  EXPECT_EQ(gl.size(), 1u);
  EXPECT_FALSE(gl.complete);
}

TEST(Pointed, NoPrimitivesInGroupAlgebras) {
  auto ctx = make_context(6);
  for (std::size_t n : {2u, 3u, 6u}) {
    HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(n)).hopf;
    EXPECT_EQ(skew_primitives(h, h.one(), h.one()).space.dim(), 0u);
  }
}

TEST(Pointed, TaftTwoSkewPrimitives) {
  auto ctx = make_context(2);
  HopfAlgebraData t = taft(ctx, 2, Cyclotomic(ctx, -1L)).hopf;
  Vec one = unit_vec(ctx, 4, 0), g = unit_vec(ctx, 4, 2), x = unit_vec(ctx, 4, 1);
  SkewPrimitiveSpace p = skew_primitives(t, one, g);
  EXPECT_EQ(p.space, Subspace::span(ctx, 4, {sub(one, g), x}));
  for (const auto& v : p.space.basis_vectors())
    EXPECT_EQ(comultiply(t, v), add(outer(one, v), outer(v, g)));
}

TEST(Pointed, GroupAlgebraOfZ2SkewPrimitives) {
  auto ctx = make_context(1);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(2)).hopf;
  Vec one = unit_vec(ctx, 2, 0), g = unit_vec(ctx, 2, 1);
  EXPECT_EQ(skew_primitives(h, one, g).space, Subspace::span(ctx, 2, {sub(one, g)}));
}

TEST(Pointed, SkewPrimitivesNeedGrouplikes) {
  auto ctx = make_context(1);
  HopfAlgebraData h = group_algebra(ctx, cyclic_group_table(2)).hopf;
  EXPECT_THROW(skew_primitives(h, h.one(), Vec(2, Cyclotomic::one(ctx))), NotGroupLike);
}

TEST(Pointed, TaftTwoFaithfulMatrixRep) {
  auto ctx = make_context(2);
  BuiltHopf t = taft(ctx, 2, Cyclotomic(ctx, -1L));
  Matrix e12(ctx, 2, 2);
  e12(0, 1) = Cyclotomic::one(ctx);
  Representation r = taft2_rep(t.hopf, diag2(ctx, 1, -1), e12);
  ASSERT_TRUE(validate_rep(r).ok());
  EXPECT_TRUE(pointed_criterion(r, t.grouplikes).injective);
  EXPECT_TRUE(pointed_criterion(r, t.grouplikes, PrimitiveSide::Right).injective);
  EXPECT_EQ(compute_closure(r).ideal.dim(), 0u);
}

TEST(Pointed, TaftTwoKillingX) {
  auto ctx = make_context(2);
  BuiltHopf t = taft(ctx, 2, Cyclotomic(ctx, -1L));
  Representation r = taft2_rep(t.hopf, diag2(ctx, 1, -1), Matrix(ctx, 2, 2));
  ASSERT_TRUE(validate_rep(r).ok());
  PointedVerdict v = pointed_criterion(r, t.grouplikes, PrimitiveSide::Right);
  EXPECT_FALSE(v.injective);
  ASSERT_TRUE(v.grouplike);
  EXPECT_TRUE(is_zero(r.matrix.apply(v.kernel_vector)));
  EXPECT_FALSE(is_zero(v.kernel_vector));
  EXPECT_FALSE(pointed_criterion(r, t.grouplikes).injective);
  EXPECT_GT(compute_closure(r).ideal.dim(), 0u);
}

TEST(Pointed, SignCharacterOfZ4FailsAtXSquared) {
  auto ctx = make_context(4);
  BuiltHopf z4 = group_algebra(ctx, cyclic_group_table(4));
  Representation r = cyclic_rep(ctx, 4, Cyclotomic(ctx, -1L));
  PointedVerdict v = pointed_criterion(r, z4.grouplikes);
  EXPECT_FALSE(v.injective);
  ASSERT_TRUE(v.grouplike);
  EXPECT_EQ(z4.grouplikes.elements[*v.grouplike], unit_vec(ctx, 4, 2));
  EXPECT_TRUE(Subspace::span(ctx, 4, {v.kernel_vector}) ==
              Subspace::span(ctx, 4, {sub(unit_vec(ctx, 4, 0), unit_vec(ctx, 4, 2))}));
}

TEST(PointedProperty, CriterionAgreesWithEngineOnTaftAlgebras) {
  std::mt19937 rng(777);
  auto ctx = make_context(12);
  struct Case {
    std::size_t n;
    Cyclotomic q;
  };
  std::vector<Case> cases{{2, Cyclotomic(ctx, -1L)}, {3, Cyclotomic::zeta(ctx, 4)}, {4, Cyclotomic::zeta(ctx, 3)}};
  for (const auto& c : cases) {
    BuiltHopf t = taft(ctx, c.n, c.q);
    int agreed = 0, yes = 0;
    for (int trial = 0; agreed < 15 && trial < 200; ++trial) {
      auto r = testing::random_taft_rep(rng, t.hopf, c.n, c.q, 1 + trial % 4);
      if (!r) continue;
      bool engine = is_inner_faithful(*r);
      EXPECT_EQ(pointed_criterion(*r, t.grouplikes).injective, engine);
      EXPECT_EQ(pointed_criterion(*r, t.grouplikes, PrimitiveSide::Right).injective, engine);
      ++agreed;
      yes += engine;
    }
    EXPECT_EQ(agreed, 15);
    EXPECT_GT(yes, 0);
  }
}

TEST(PointedProperty, CriterionAgreesWithEngineOnGroupAlgebras) {
  std::mt19937 rng(888);
  auto ctx = make_context(12);
  std::vector<GroupTable> groups{cyclic_group_table(6), cyclic_group_table(4),
                                 direct_product_table(cyclic_group_table(2), cyclic_group_table(2))};
  for (const auto& t : groups) {
    BuiltHopf h = group_algebra(ctx, t);
    for (int trial = 0; trial < 12; ++trial) {
      Representation r = random_diagonal_rep(rng, ctx, t, h.hopf, 1 + trial % 3);
      ASSERT_TRUE(validate_rep(r).ok());
      bool engine = is_inner_faithful(r);
      EXPECT_EQ(pointed_criterion(r, h.grouplikes).injective, engine);
      EXPECT_EQ(pointed_criterion(r, h.grouplikes, PrimitiveSide::Right).injective, engine);
    }
  }
}

TEST(PointedProperty, GrouplikesAreInvertibleWithUnitCounit) {
  auto ctx = make_context(12);
  std::vector<GroupLikeSet> sets{find_grouplikes(group_algebra(ctx, dihedral_group_table(3)).hopf),
                                 find_grouplikes(function_algebra(ctx, cyclic_group_table(6)).hopf),
                                 taft(ctx, 4, Cyclotomic::zeta(ctx, 3)).grouplikes, ake(ctx, 4, -1).grouplikes};
  std::vector<HopfAlgebraData> hosts{group_algebra(ctx, dihedral_group_table(3)).hopf,
                                     function_algebra(ctx, cyclic_group_table(6)).hopf,
                                     taft(ctx, 4, Cyclotomic::zeta(ctx, 3)).hopf, *ake(ctx, 4, -1).hopf};
  std::vector<std::size_t> sizes{6, 6, 4, 4};
  for (std::size_t c = 0; c < sets.size(); ++c) {
    EXPECT_EQ(sets[c].size(), sizes[c]);
    for (const auto& g : sets[c].elements) {
      EXPECT_TRUE(is_grouplike(hosts[c], g));
      EXPECT_TRUE(counit_of(hosts[c], g).is_one());
      EXPECT_EQ(multiply(hosts[c].algebra, antipode_of(hosts[c], g), g), hosts[c].one());
    }
  }
}

}  // namespace
}  // namespace hopfimg
