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

#include <algorithm>
#include <set>

#include "support.hpp"

namespace hopfimg {
namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x] - 1];
  return out;
}

/// Order of the subgroup generated by the permutations, by closure under composition.
std::size_t closure_order(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<int>(x + 1);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Vec matrix_element(const Context& ctx, const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                   const Cyclotomic& d) {
  return Vec{a, b, c, d};
}

Vec power(const AlgebraData& alg, const Vec& x, std::size_t m) {
  Vec out = alg.unit;
  for (std::size_t t = 0; t < m; ++t) out = multiply(alg, out, x);
  return out;
}

TEST(GroupTables, BruteForceValidation) {
  EXPECT_THROW(make_group_table({{0, 1}, {1, 1}}), InvalidTable);
  EXPECT_THROW(make_group_table({{0, 1}, {0, 1}}), InvalidTable);
  EXPECT_THROW(make_group_table({{0, 1, 2}, {1, 2, 0}}), InvalidTable);
  EXPECT_THROW(make_group_table({{1, 0}, {0, 1}}, {"a"}), InvalidTable);
  GroupTable z2 = make_group_table({{0, 1}, {1, 0}});
  EXPECT_EQ(z2.identity, 0u);
  EXPECT_EQ(z2.inverse[1], 1u);
}

TEST(GroupTables, SmallFamilies) {
  GroupTable d4 = dihedral_group_table(4);
  EXPECT_EQ(d4.order, 8u);
  EXPECT_EQ(element_order(d4, 1), 4u);
  EXPECT_EQ(element_order(d4, 4), 2u);
  EXPECT_EQ(generated_subgroup(d4, {2, 4}), (std::vector<std::size_t>{0, 2, 4, 6}));
  GroupTable k = direct_product_table(cyclic_group_table(2), cyclic_group_table(3));
  EXPECT_EQ(k.order, 6u);
  EXPECT_EQ(element_order(k, 4), 6u);
}

TEST(GroupAlgebra, Examples) {
  auto ctx = make_context(1);
  BuiltHopf z1 = group_algebra(ctx, cyclic_group_table(1));
  EXPECT_EQ(z1.hopf.dim(), 1u);
  EXPECT_TRUE(validate(z1.hopf).ok());
  BuiltHopf z4 = group_algebra(ctx, cyclic_group_table(4));
  EXPECT_EQ(z4.hopf.dim(), 4u);
  EXPECT_EQ(z4.grouplikes.size(), 4u);
  SymmetricGroup s3 = symmetric_group_table(ctx, 3);
  BuiltHopf ks3 = group_algebra(ctx, s3.table);
  EXPECT_TRUE(validate(ks3.hopf).ok());
  EXPECT_TRUE(is_cocommutative(ks3.hopf));
  EXPECT_FALSE(is_commutative(ks3.hopf.algebra));
  EXPECT_EQ(ks3.grouplikes.size(), 6u);
}

TEST(FunctionAlgebra, Examples) {
  auto ctx = make_context(3);
  BuiltHopf z2 = function_algebra(ctx, cyclic_group_table(2));
  EXPECT_EQ(z2.hopf.dim(), 2u);
  EXPECT_EQ(z2.grouplikes.size(), 2u);
  BuiltHopf z3 = function_algebra(ctx, cyclic_group_table(3));
  EXPECT_EQ(z3.grouplikes.size(), 3u);
  for (const auto& g : z3.grouplikes.elements) EXPECT_TRUE(is_grouplike(z3.hopf, g));
  SymmetricGroup s4 = symmetric_group_table(ctx, 4);
  BuiltHopf fs4 = function_algebra(ctx, s4.table);
  EXPECT_EQ(fs4.hopf.dim(), 24u);
  EXPECT_TRUE(is_commutative(fs4.hopf.algebra));
  EXPECT_TRUE(validate(fs4.hopf).ok());
}

TEST(FunctionAlgebra, CharactersNeedTheirRoots) {
  auto q = make_context(1);
  EXPECT_EQ(function_algebra(q, cyclic_group_table(3)).grouplikes.size(), 1u);
  EXPECT_THROW(abelian_character_table(q, cyclic_group_table(3)), MissingCharacterTable);
  EXPECT_EQ(abelian_character_table(make_context(3), cyclic_group_table(3)).characters.size(), 3u);
}

TEST(Evaluation, S4Examples) {
  auto ctx = make_context(1);
  SymmetricGroup s4 = symmetric_group_table(ctx, 4);
  HopfAlgebraData h = function_algebra(ctx, s4.table).hopf;
  Representation adj =
      evaluation_rep(h, {find_permutation(s4, "(1,2)"), find_permutation(s4, "(2,3)"), find_permutation(s4, "(3,4)")});
  EXPECT_TRUE(validate_rep(adj).ok());
  EXPECT_TRUE(is_inner_faithful(adj));
  EXPECT_FALSE(character_span_injectivity(s4.characters, adj));

  Representation two = evaluation_rep(h, {find_permutation(s4, "(1,2)"), find_permutation(s4, "(1,2,3)")});
  EXPECT_EQ(hopf_image(two).image.dim(), 6u);
  EXPECT_FALSE(is_inner_faithful(two));
  EXPECT_TRUE(character_span_injectivity(s4.characters, two));

  Representation id = evaluation_rep(h, {s4.table.identity});
  EXPECT_EQ(hopf_image(id).image.dim(), 1u);
  EXPECT_TRUE(character_span_injectivity(s4.characters, identity_rep(h)));

  EXPECT_THROW(evaluation_rep(h, {24}), IndexOutOfRange);
  SymmetricGroup s3 = symmetric_group_table(ctx, 3);
  EXPECT_THROW(character_span_injectivity(s3.characters, adj), MissingCharacterTable);
}

TEST(Taft, Examples) {
  auto ctx = make_context(3);
  BuiltHopf sw = taft(ctx, 2, Cyclotomic(ctx, -1L));
  EXPECT_EQ(sw.hopf.dim(), 4u);
  EXPECT_TRUE(validate(sw.hopf).ok());
  EXPECT_EQ(skew_primitives(sw.hopf, sw.hopf.one(), unit_vec(ctx, 4, 2)).space.dim(), 2u);
  BuiltHopf t3 = taft(ctx, 3, Cyclotomic::zeta(ctx));
  EXPECT_EQ(t3.hopf.dim(), 9u);
  EXPECT_TRUE(validate(t3.hopf).ok());
  EXPECT_EQ(t3.grouplikes.size(), 3u);
  EXPECT_THROW(taft(ctx, 3, Cyclotomic::one(ctx)), WrongOrder);
  EXPECT_THROW(taft(ctx, 2, Cyclotomic::zeta(ctx)), WrongOrder);
}

TEST(Taft, Relations) {
  auto ctx = make_context(4);
  Cyclotomic q = Cyclotomic::zeta(ctx);
  HopfAlgebraData t = taft(ctx, 4, q).hopf;
  Vec g = unit_vec(ctx, 16, 4), x = unit_vec(ctx, 16, 1);
  EXPECT_EQ(power(t.algebra, g, 4), t.one());
  EXPECT_TRUE(is_zero(power(t.algebra, x, 4)));
  EXPECT_EQ(multiply(t.algebra, x, g), scale(q, multiply(t.algebra, g, x)));
  EXPECT_EQ(comultiply(t, x), add(outer(t.one(), x), outer(x, g)));
}

TEST(Ake, Examples) {
  auto ctx = make_context(12);
  EXPECT_EQ(ake(ctx, 1, 1).hopf->dim(), 4u);
  AkeData a = ake(ctx, 3, 1);
  EXPECT_EQ(a.hopf->dim(), 12u);
  EXPECT_EQ(a.grouplikes.size(), 4u);
  EXPECT_EQ(a.comodules.size(), 2u);
  AkeData b = ake(ctx, 2, -1);
  EXPECT_EQ(b.hopf->dim(), 8u);
  EXPECT_EQ(b.grouplikes.size(), 4u);
}

TEST(Ake, MinusOneCaseNeedsFourthRoots) {
  AkeData b = ake(make_context(3), 2, -1);
  EXPECT_TRUE(validate(*b.hopf).ok());
  EXPECT_EQ(b.grouplikes.size(), 2u);
}

TEST(Ake, GeneratorsAreMatrixCoefficients) {
  auto ctx = make_context(12);
  AkeData a = ake(ctx, 3, -1);
  const HopfAlgebraData& h = *a.hopf;
  Vec v[2][2] = {{a.v11, a.v12}, {a.v21, a.v22}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec expected = add(outer(v[i][0], v[0][j]), outer(v[i][1], v[1][j]));
      EXPECT_EQ(comultiply(h, v[i][j]), expected);
      EXPECT_EQ(antipode_of(h, v[i][j]), v[j][i]);
      EXPECT_EQ(counit_of(h, v[i][j]), i == j ? Cyclotomic::one(ctx) : Cyclotomic(ctx));
    }
}

TEST(Ake, DefiningRelations) {
  auto ctx = make_context(12);
  for (std::size_t k = 1; k <= 6; ++k)
    for (int e : {1, -1}) {
      AkeData a = ake(ctx, k, e);
      const AlgebraData& alg = a.hopf->algebra;
      Vec p = multiply(alg, a.v11, a.v22), q = multiply(alg, a.v22, a.v11);
      Vec r = multiply(alg, a.v12, a.v21), s = multiply(alg, a.v21, a.v12);
      std::size_t m = k / 2;
      if (k % 2 == 0) {
        EXPECT_EQ(power(alg, p, m), power(alg, q, m)) << k;
        EXPECT_EQ(power(alg, r, m), scale(Cyclotomic(ctx, static_cast<long>(e)), power(alg, s, m))) << k;
      } else {
        EXPECT_EQ(multiply(alg, power(alg, p, m), a.v11), multiply(alg, power(alg, q, m), a.v22)) << k;
        EXPECT_EQ(multiply(alg, power(alg, r, m), a.v12),
                  scale(Cyclotomic(ctx, static_cast<long>(e)), multiply(alg, power(alg, s, m), a.v21)))
            << k;
      }
    }
}

TEST(PiQ, Examples) {
  auto ctx = make_context(12);
  Representation r3 = pi_q(ake(ctx, 3, 1), Cyclotomic::zeta(ctx, 4));
  EXPECT_TRUE(validate_rep(r3).ok());
  EXPECT_TRUE(is_inner_faithful(r3));
  Representation r2 = pi_q(ake(ctx, 2, -1), Cyclotomic::zeta(ctx, 3));
  EXPECT_TRUE(validate_rep(r2).ok());
  EXPECT_TRUE(is_inner_faithful(r2));
  EXPECT_THROW(pi_q(ake(ctx, 3, 1), Cyclotomic::zeta(ctx, 3)), OrderMismatch);
}

TEST(PiQ, GeneratorImages) {
  auto ctx = make_context(12);
  Cyclotomic q = Cyclotomic::zeta(ctx, 2);
  AkeData a = ake(ctx, 3, -1);
  Representation r = pi_q(a, q);
  Cyclotomic z(ctx), one = Cyclotomic::one(ctx);
  EXPECT_TRUE(is_zero(r.matrix.apply(a.v11)));
  EXPECT_TRUE(is_zero(r.matrix.apply(a.v22)));
  EXPECT_EQ(r.matrix.apply(a.v12), matrix_element(ctx, z, q.inverse(), q, z));
  EXPECT_EQ(r.matrix.apply(a.v21), matrix_element(ctx, z, one, one, z));
}

TEST(CyclicRep, Examples) {
  auto ctx = make_context(6);
  EXPECT_TRUE(is_inner_faithful(cyclic_rep(ctx, 6, Cyclotomic::zeta(ctx))));
  EXPECT_EQ(hopf_image(cyclic_rep(ctx, 6, Cyclotomic::zeta(ctx, 2))).image.dim(), 3u);
  EXPECT_EQ(hopf_image(cyclic_rep(ctx, 6, Cyclotomic::one(ctx))).image.dim(), 1u);
  EXPECT_THROW(cyclic_rep(ctx, 4, Cyclotomic::zeta(ctx)), NotAnNthRoot);
}

TEST(SymmetricGroups, CharacterDegrees) {
  auto ctx = make_context(1);
  auto degrees = [&](int n) {
    SymmetricGroup s = symmetric_group_table(ctx, n);
    std::vector<std::string> out;
    for (const auto& chi : s.characters.characters) out.push_back(chi[s.table.identity].str());
    std::sort(out.begin(), out.end());
    return std::pair{s.table.order, out};
  };
  EXPECT_EQ(degrees(1), (std::pair<std::size_t, std::vector<std::string>>{1, {"1"}}));
  EXPECT_EQ(degrees(3), (std::pair<std::size_t, std::vector<std::string>>{6, {"1", "1", "2"}}));
  EXPECT_EQ(degrees(4), (std::pair<std::size_t, std::vector<std::string>>{24, {"1", "1", "2", "3", "3"}}));
}

TEST(SymmetricGroups, CharacterOrthogonality) {
  auto ctx = make_context(1);
  for (int n = 1; n <= 4; ++n) {
    SymmetricGroup s = symmetric_group_table(ctx, n);
    const auto& chars = s.characters.characters;
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b) {
        Cyclotomic sum(ctx);
        for (std::size_t g = 0; g < s.table.order; ++g) sum += chars[a][g] * chars[b][s.table.inverse[g]];
        EXPECT_EQ(sum, Cyclotomic(ctx, a == b ? static_cast<long>(s.table.order) : 0L)) << n;
      }
  }
}

TEST(SymmetricGroups, TableMatchesPermutationComposition) {
  auto ctx = make_context(1);
  SymmetricGroup s = symmetric_group_table(ctx, 4);
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b)
      EXPECT_EQ(s.permutations[s.table.mult[a][b]], compose(s.permutations[a], s.permutations[b]));
  EXPECT_EQ(s.permutations[find_permutation(s, "()")], (Perm{1, 2, 3, 4}));
  EXPECT_EQ(s.permutations[find_permutation(s, "(1,2,3)")], (Perm{2, 3, 1, 4}));
}

TEST(Misc, DihedralAbelianizationAndKleinData) {
  auto ctx = make_context(1);
  HopfMorphism ab = dihedral_abelianization(ctx);
  EXPECT_TRUE(verify_morphism(ab).ok());
  Matrix beta = klein_bicharacter(ctx);
  EXPECT_EQ(beta(1, 2), Cyclotomic(ctx, -1L));
  EXPECT_EQ(beta(2, 1), Cyclotomic::one(ctx));
  HopfAlgebraData kd4 = group_algebra(ctx, dihedral_group_table(4)).hopf;
  EXPECT_EQ(dihedral_klein_twist(kd4).size(), 64u);
}

TEST(BuilderProperty, EverythingValidates) {
  auto ctx = make_context(12);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_TRUE(validate(group_algebra(ctx, cyclic_group_table(n)).hopf).ok());
    EXPECT_TRUE(validate(function_algebra(ctx, cyclic_group_table(n)).hopf).ok());
    EXPECT_TRUE(validate(group_algebra(ctx, dihedral_group_table(n)).hopf).ok());
  }
  for (std::size_t n : {2u, 3u, 4u, 6u}) EXPECT_TRUE(validate(taft(ctx, n, Cyclotomic::zeta(ctx, static_cast<long>(12 / n))).hopf).ok());
  for (int n = 1; n <= 4; ++n) {
    SymmetricGroup s = symmetric_group_table(ctx, n);
    EXPECT_TRUE(validate(group_algebra(ctx, s.table).hopf).ok());
  }
}

TEST(BuilderProperty, AkeAnatomy) {
  auto ctx = make_context(12);
  for (std::size_t k = 1; k <= 6; ++k)
    for (int e : {1, -1}) {
      AkeData a = ake(ctx, k, e);
      EXPECT_TRUE(validate(*a.hopf).ok()) << k << "," << e;
      EXPECT_EQ(a.hopf->dim(), 4 * k);
      if (k >= 2) EXPECT_EQ(a.grouplikes.size(), 4u);
      for (const auto& g : a.grouplikes.elements) EXPECT_TRUE(is_grouplike(*a.hopf, g));
      EXPECT_EQ(a.comodules.size(), k - 1);
      for (const auto& c : a.comodules) EXPECT_TRUE(validate_comodule(c).ok());
    }
}

TEST(BuilderProperty, GrouplikeCounts) {
  auto ctx = make_context(12);
  std::vector<GroupTable> abelian{cyclic_group_table(2), cyclic_group_table(3), cyclic_group_table(4),
                                  cyclic_group_table(6), direct_product_table(cyclic_group_table(2), cyclic_group_table(6))};
  for (const auto& t : abelian) {
    EXPECT_EQ(group_algebra(ctx, t).grouplikes.size(), t.order);
    EXPECT_EQ(function_algebra(ctx, t).grouplikes.size(), t.order);
  }
  EXPECT_EQ(group_algebra(ctx, dihedral_group_table(4)).grouplikes.size(), 8u);
}

TEST(BuilderProperty, PiQRelationImages) {
  auto ctx = make_context(12);
  for (std::size_t k = 2; k <= 6; ++k)
    for (int e : {1, -1})
      for (long j = 0; j < 12; ++j) {
        Cyclotomic q = Cyclotomic::zeta(ctx, j);
        if (q.pow(static_cast<long>(k)) != Cyclotomic(ctx, static_cast<long>(e))) continue;
        AkeData a = ake(ctx, k, e);
        Representation r = pi_q(a, q);
        ASSERT_TRUE(validate_rep(r).ok());
        const AlgebraData& alg = a.hopf->algebra;
        for (std::size_t m = 1; 2 * m <= k; ++m) {
          Vec p = power(alg, multiply(alg, a.v11, a.v22), m);
          Vec s = power(alg, multiply(alg, a.v12, a.v21), m);
          EXPECT_TRUE(is_zero(r.matrix.apply(p)));
          Cyclotomic z(ctx), qm = q.pow(static_cast<long>(m));
          EXPECT_EQ(r.matrix.apply(s), matrix_element(ctx, qm.inverse(), z, z, qm));
        }
      }
}

TEST(BuilderProperty, EvaluationImageIsGeneratedSubgroup) {
  std::mt19937 rng(4242);
  auto ctx = make_context(1);
  SymmetricGroup s4 = symmetric_group_table(ctx, 4);
  HopfAlgebraData h = function_algebra(ctx, s4.table).hopf;
  std::uniform_int_distribution<std::size_t> pick(0, 23), count(1, 2);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::size_t> points;
    std::vector<Perm> gens;
    for (std::size_t c = count(rng); c > 0; --c) {
      points.push_back(pick(rng));
      gens.push_back(s4.permutations[points.back()]);
    }
    EXPECT_EQ(hopf_image(evaluation_rep(h, points)).image.dim(), closure_order(gens, 4));
  }
}

TEST(BuilderProperty, CyclicImageIsOrderOfW) {
  auto ctx = make_context(12);
  for (long j = 0; j < 12; ++j) {
    Cyclotomic w = Cyclotomic::zeta(ctx, j);
    std::size_t order = 1;
    while (w.pow(static_cast<long>(order)) != Cyclotomic::one(ctx)) ++order;
    EXPECT_EQ(hopf_image(cyclic_rep(ctx, 12, w)).image.dim(), order);
  }
}

}  // namespace
}  // namespace hopfimg
