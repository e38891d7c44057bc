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

#include <fstream>

#include "hopfimg/interchange.hpp"
#include "support.hpp"

namespace hopfimg {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hopfimg_interchange_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const Json& j) { std::ofstream(p) << j.dump(2); }

TEST(Interchange, ScalarsAndVectors) {
  auto ctx = make_context(4);
  EXPECT_EQ(scalar_from_json(Json(3), ctx), Cyclotomic(ctx, 3L));
  EXPECT_EQ(scalar_from_json(Json("z^1"), ctx), Cyclotomic::zeta(ctx));
  EXPECT_THROW(scalar_from_json(Json(1.5), ctx), FormatError);
  Vec dense = vector_from_json(Json::parse(R"(["0", "1/2", 3])"), ctx, 3);
  Vec sparse = vector_from_json(Json::parse(R"([[1, "1/2"], [2, "3"]])"), ctx, 3);
  EXPECT_EQ(dense, sparse);
  EXPECT_EQ(vector_from_json(vector_to_json(dense), ctx, 3), dense);
  EXPECT_THROW(vector_from_json(Json::parse(R"(["0", "1"])"), ctx, 3), FormatError);
  EXPECT_THROW(vector_from_json(Json::parse(R"([[5, "1"]])"), ctx, 3), FormatError);
}

TEST(Interchange, ConductorHandling) {
  auto ctx = make_context(6);
  EXPECT_EQ(document_context(Json::parse(R"({"conductor": 6})"))->conductor(), 6u);
  EXPECT_EQ(document_context(Json::object(), &ctx)->conductor(), 6u);
  EXPECT_THROW(document_context(Json::parse(R"({"conductor": 4})"), &ctx), FormatError);
}

TEST(Interchange, HopfRoundTrip) {
  auto ctx = make_context(12);
  std::vector<HopfAlgebraData> hs{taft(ctx, 3, Cyclotomic::zeta(ctx, 4)).hopf, *ake(ctx, 3, -1).hopf,
                                  function_algebra(ctx, dihedral_group_table(3)).hopf};
  for (const auto& h : hs) {
    Json j = hopf_to_json(h);
    HopfAlgebraData back = hopf_from_json(j);
    EXPECT_TRUE(same_structure(back, h));
    EXPECT_EQ(back.algebra.labels, h.algebra.labels);
    EXPECT_EQ(hopf_to_json(back).dump(), j.dump());
  }
}

TEST(Interchange, AlgebraRoundTrip) {
  auto ctx = make_context(1);
  AlgebraData m = matrix_algebra(ctx, 2);
  AlgebraData back = algebra_from_json(algebra_to_json(m));
  EXPECT_TRUE(back.mult == m.mult);
  EXPECT_EQ(back.unit, m.unit);
}

TEST(Interchange, MalformedDocuments) {
  auto ctx = make_context(1);
  Json j = hopf_to_json(group_algebra(ctx, cyclic_group_table(2)).hopf);
  Json no_dim = j;
  no_dim.erase("dim");
  EXPECT_THROW(hopf_from_json(no_dim), FormatError);
  Json bad_index = j;
  bad_index["mult"].push_back(Json::parse(R"([0, 0, 7, "1"])"));
  EXPECT_THROW(hopf_from_json(bad_index), FormatError);
  fs::path dir = scratch_dir("malformed");
  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_THROW(read_json_file(dir / "broken.json"), FormatError);
  EXPECT_THROW(read_json_file(dir / "missing.json"), FormatError);
}

TEST(Interchange, RepresentationInlineAndByPath) {
  auto ctx = make_context(12);
  AkeData a = ake(ctx, 3, 1);
  Representation r = pi_q(a, Cyclotomic::zeta(ctx, 4));
  Json inline_doc = representation_to_json(r);
  Representation back = representation_from_json(inline_doc, ".");
  EXPECT_EQ(back.matrix, r.matrix);
  EXPECT_TRUE(same_structure(back.source, r.source));

  fs::path dir = scratch_dir("rep");
  write_file(dir / "host.json", hopf_to_json(*a.hopf));
  Json by_path = inline_doc;
  by_path["hopf"] = "host.json";
  Representation via_file = representation_from_json(by_path, dir);
  EXPECT_EQ(via_file.matrix, r.matrix);

  Json hostless = inline_doc;
  hostless.erase("hopf");
  EXPECT_EQ(representation_from_json(hostless, dir, nullptr, a.hopf.get()).matrix, r.matrix);
  EXPECT_THROW(representation_from_json(hostless, dir), FormatError);
  HopfAlgebraData other = *ake(ctx, 3, -1).hopf;
  EXPECT_THROW(representation_from_json(inline_doc, dir, nullptr, &other), FormatError);
}

TEST(Interchange, ComoduleRoundTrip) {
  auto ctx = make_context(12);
  AkeData a = ake(ctx, 4, -1);
  for (const auto& c : a.comodules) {
    Comodule back = comodule_from_json(comodule_to_json(c), a.hopf);
    EXPECT_EQ(back.u, c.u);
    EXPECT_EQ(back.dim, c.dim);
  }
  Json list = Json::array();
  for (const auto& c : a.comodules) list.push_back(comodule_to_json(c));
  EXPECT_EQ(comodules_from_json(list, a.hopf).size(), a.comodules.size());
  EXPECT_EQ(comodules_from_json(Json{{"comodules", list}}, a.hopf).size(), a.comodules.size());
  EXPECT_EQ(comodules_from_json(list[0], a.hopf).size(), 1u);
}

TEST(Interchange, GrouplikeLists) {
  auto ctx = make_context(12);
  AkeData a = ake(ctx, 3, 1);
  Json list = Json::array();
  for (const auto& g : a.grouplikes.elements) list.push_back(vector_to_json(g));
  EXPECT_EQ(vectors_from_json(list, *a.hopf), a.grouplikes.elements);
  EXPECT_EQ(vectors_from_json(Json{{"grouplikes", list}}, *a.hopf), a.grouplikes.elements);
}

TEST(Interchange, TwistAndCocycleRoundTrip) {
  auto ctx = make_context(1);
  HopfAlgebraData kd4 = group_algebra(ctx, dihedral_group_table(4)).hopf;
  TwistElement t = make_twist(kd4, dihedral_klein_twist(kd4));
  TwistElement tb = twist_from_json(twist_to_json(t), kd4);
  EXPECT_EQ(tb.omega, t.omega);
  EXPECT_EQ(tb.omega_inv, t.omega_inv);
  EXPECT_EQ(check_pseudo_twist(tb).kind, TwistKind::Twist);

  HopfAlgebraData klein = group_algebra(ctx, direct_product_table(cyclic_group_table(2), cyclic_group_table(2))).hopf;
  Cocycle c = make_cocycle(klein, klein_bicharacter(ctx));
  Cocycle cb = cocycle_from_json(cocycle_to_json(c), klein);
  EXPECT_EQ(cb.sigma, c.sigma);
  EXPECT_EQ(cb.sigma_inv, c.sigma_inv);
}

TEST(InterchangeProperty, RandomRepresentationsRoundTrip) {
  std::mt19937 rng(2718);
  auto ctx = make_context(4);
  BuiltHopf t = taft(ctx, 2, Cyclotomic(ctx, -1L));
  int done = 0;
  while (done < 10) {
    auto r = testing::random_taft_rep(rng, t.hopf, 2, Cyclotomic(ctx, -1L), 3);
    if (!r) continue;
    ++done;
    Json j = representation_to_json(*r);
    Representation back = representation_from_json(Json::parse(j.dump()), ".");
    EXPECT_EQ(back.matrix, r->matrix);
    EXPECT_EQ(representation_to_json(back).dump(), j.dump());
  }
}

}  // namespace
}  // namespace hopfimg
