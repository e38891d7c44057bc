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
 * @file linalg.hpp
 * @brief Dense exact linear algebra over Q(ζ_N): matrices, canonical subspaces, kernels, annihilators
 * and quotient coordinates.
 *
 * A Subspace always stores its basis in reduced row-echelon form, so equality of subspaces is equality
 * of bases. Dual spaces are identified with the ambient coordinate space through the bilinear pairing
 * ⟨φ, v⟩ = Σ φ_i v_i.
 */

#ifndef HOPFIMG_LINALG_HPP
#define HOPFIMG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfimg/field.hpp"

namespace hopfimg {

using Vec = std::vector<Cyclotomic>;

Vec zero_vec(const Context& ctx, std::size_t n);
Vec unit_vec(const Context& ctx, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Cyclotomic& c, const Vec& v);
void axpy(const Cyclotomic& c, const Vec& x, Vec& y);  // y += c·x
Cyclotomic dot(const Vec& a, const Vec& b);
/// Outer product a ⊗ b flattened as index i·|b| + j.
Vec outer(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix(Context ctx, std::size_t rows, std::size_t cols);

  static Matrix identity(const Context& ctx, std::size_t n);
  static Matrix from_rows(const Context& ctx, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const Context& ctx, const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Context& context() const noexcept { return ctx_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  Matrix transpose() const;
  /// M·v for a column vector v.
  Vec apply(const Vec& v) const;
  /// vᵀ·M for a row vector v.
  Vec apply_left(const Vec& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Context ctx_;
  std::size_t rows_, cols_;
  std::vector<Cyclotomic> entries_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix form;                      // nonzero rows only
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss–Jordan elimination; the result depends only on the row space.
RrefResult rref(const Matrix& m);

/// Rank of m.
std::size_t rank(const Matrix& m);

/// Linear subspace of k^d held by its canonical RREF basis.
class Subspace {
 public:
  /// Zero subspace of k^ambient.
  Subspace(Context ctx, std::size_t ambient);

  static Subspace span(const Context& ctx, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(const Context& ctx, std::size_t ambient);

  const Context& context() const noexcept { return ctx_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }

  /// Residue of v after clearing the pivot coordinates with the basis.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed inside) with respect to the RREF basis.
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Context ctx, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);
  void check_ambient(const Subspace& other) const;

  Context ctx_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Echelon basis grown one vector at a time; pivots are kept normalized to 1.
class IncrementalBasis {
 public:
  IncrementalBasis(Context ctx, std::size_t ambient) : ctx_(std::move(ctx)), ambient_(ambient) {}

  /// Adds v if it is independent of the current vectors; returns whether it was added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  /// The vectors as originally supplied, in insertion order.
  const std::vector<Vec>& added() const noexcept { return added_; }
  Subspace subspace() const;

 private:
  Vec reduce(const Vec& v) const;

  Context ctx_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> added_;
};

/// Right kernel {v : m·v = 0}.
Subspace kernel(const Matrix& m);

/// Functionals vanishing on v, as a subspace of the dual coordinate space.
Subspace annihilator(const Subspace& v);

/// Coordinates on ambient/v. The complement is spanned by the non-pivot coordinates of v's RREF,
/// listed in increasing order.
struct QuotientData {
  Matrix projection;                   // (d - dim v) × d, kernel = v
  Matrix section;                      // d × (d - dim v), projection·section = 1
  std::vector<std::size_t> complement; // ambient index of each quotient coordinate
};

QuotientData quotient_data(const Subspace& v);

/// Some solution of a·x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Two-sided inverse of a square matrix, if it exists.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace hopfimg

#endif  // HOPFIMG_LINALG_HPP
