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
 * @file interchange.hpp
 * @brief JSON file formats for Hopf algebras, algebras, representations, comodules, group-like
 * lists, twists and cocycles. Scalars are strings in the canonical scalar grammar.
 */

#ifndef HOPFIMG_INTERCHANGE_HPP
#define HOPFIMG_INTERCHANGE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfimg/tannaka.hpp"
#include "hopfimg/twisting.hpp"

namespace hopfimg {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws FormatError.
Json read_json_file(const std::filesystem::path& path);

/// Context named by the document's `conductor`. When `expected` is set the conductors must agree;
/// a document without `conductor` inherits `expected`. Throws FormatError.
Context document_context(const Json& doc, const Context* expected = nullptr);

Cyclotomic scalar_from_json(const Json& v, const Context& ctx);
/// Dense list of scalars or sparse list of [index, scalar].
Vec vector_from_json(const Json& v, const Context& ctx, std::size_t dim);
Json vector_to_json(const Vec& v);
/// Rows of scalars.
Matrix matrix_from_rows_json(const Json& v, const Context& ctx, std::size_t rows, std::size_t cols);
Json matrix_to_rows_json(const Matrix& m);

Json algebra_to_json(const AlgebraData& a);
AlgebraData algebra_from_json(const Json& doc, const Context* expected = nullptr);

Json hopf_to_json(const HopfAlgebraData& h);
HopfAlgebraData hopf_from_json(const Json& doc, const Context* expected = nullptr);

Json representation_to_json(const Representation& r);
/// `hopf` may be an inline document or a path relative to `base_dir`. When `host` is given the
/// field may be omitted; if both are present they must have the same structure constants.
Representation representation_from_json(const Json& doc, const std::filesystem::path& base_dir,
                                         const Context* expected = nullptr,
                                         const HopfAlgebraData* host = nullptr);

Json comodule_to_json(const Comodule& c);
Comodule comodule_from_json(const Json& doc, const HopfPtr& host);
/// A single comodule, a list, or an object with a `comodules` list.
std::vector<Comodule> comodules_from_json(const Json& doc, const HopfPtr& host);

/// A list of vectors or an object with a `grouplikes` list.
std::vector<Vec> vectors_from_json(const Json& doc, const HopfAlgebraData& h);

TwistElement twist_from_json(const Json& doc, const HopfAlgebraData& h);
Json twist_to_json(const TwistElement& t);

Cocycle cocycle_from_json(const Json& doc, const HopfAlgebraData& h);
Json cocycle_to_json(const Cocycle& c);

}  // namespace hopfimg

#endif  // HOPFIMG_INTERCHANGE_HPP
