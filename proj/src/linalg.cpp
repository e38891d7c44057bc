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

#include "hopfimg/linalg.hpp"

#include <utility>

namespace hopfimg {

Vec zero_vec(const Context& ctx, std::size_t n) { return Vec(n, Cyclotomic(ctx)); }

Vec unit_vec(const Context& ctx, std::size_t n, std::size_t i) {
  Vec v = zero_vec(ctx, n);
  v[i] = Cyclotomic::one(ctx);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Cyclotomic& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

void axpy(const Cyclotomic& c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector sizes differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Cyclotomic dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (a.empty()) throw DimensionMismatch("dot product of empty vectors has no field");
  Cyclotomic s(a[0].context());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec outer(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out = zero_vec(a[0].context(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Matrix::Matrix(Context ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic(ctx_)) {}

Matrix Matrix::identity(const Context& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(ctx);
  return m;
}

Matrix Matrix::from_rows(const Context& ctx, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(ctx, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Context& ctx, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(ctx, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out = zero_vec(ctx_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& m = (*this)(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

Vec Matrix::apply_left(const Vec& v) const {
  if (v.size() != rows_) throw DimensionMismatch("vector-matrix shape mismatch");
  Vec out = zero_vec(ctx_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& m = (*this)(r, c);
      if (!m.is_zero()) out[c] += v[r] * m;
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.context(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const auto& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix out(a.context(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

namespace {

struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon eliminate(std::vector<Vec> rows, std::size_t cols) {
  Echelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    Vec& prow = rows[lead];
    if (!prow[c].is_one()) {
      Cyclotomic inv = prow[c].inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      Cyclotomic f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) rows[r][j] -= f * prow[j];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  Echelon e = eliminate(m.row_vectors(), m.cols());
  std::size_t r = e.rows.size();
  return RrefResult{Matrix::from_rows(m.context(), e.rows, m.cols()), r, std::move(e.pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(Context ctx, std::size_t ambient)
    : ctx_(ctx), ambient_(ambient), basis_(ctx, 0, ambient) {}

Subspace::Subspace(Context ctx, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ctx_(std::move(ctx)), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Context& ctx, std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
  Echelon e = eliminate(vectors, ambient);
  return Subspace(ctx, ambient, Matrix::from_rows(ctx, e.rows, ambient), std::move(e.pivots));
}

Subspace Subspace::row_space(const Matrix& m) { return span(m.context(), m.cols(), m.row_vectors()); }

Subspace Subspace::full(const Context& ctx, std::size_t ambient) {
  return Subspace(ctx, ambient, Matrix::identity(ctx, ambient), [&] {
    std::vector<std::size_t> p(ambient);
    for (std::size_t i = 0; i < ambient; ++i) p[i] = i;
    return p;
  }());
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Cyclotomic f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      const auto& b = basis_(i, j);
      if (!b.is_zero()) r[j] -= f * b;
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return hopfimg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c;
  c.reserve(pivots_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

void Subspace::check_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw DimensionMismatch("ambient dimensions " + std::to_string(ambient_) + " and " +
                            std::to_string(other.ambient_));
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other);
  if (other.dim() == 0) return *this;
  if (dim() == 0) return other;
  std::vector<Vec> rows = basis_.row_vectors();
  for (std::size_t r = 0; r < other.dim(); ++r) {
    Vec red = reduce(other.basis_.row(r));
    if (!hopfimg::is_zero(red)) rows.push_back(std::move(red));
  }
  return span(ctx_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  if (dim() == 0 || other.dim() == 0) return Subspace(ctx_, ambient_);
  // Solve c·A = c'·B through the kernel of [Aᵀ | Bᵀ]; the A-part of each solution gives a vector.
  const std::size_t ra = dim(), rb = other.dim();
  Matrix system(ctx_, ambient_, ra + rb);
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t i = 0; i < ra; ++i) system(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < rb; ++i) system(j, ra + i) = other.basis_(i, j);
  }
  Subspace ker = kernel(system);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec coeff = ker.basis().row(r);
    Vec v = zero_vec(ctx_, ambient_);
    for (std::size_t i = 0; i < ra; ++i) axpy(coeff[i], basis_.row(i), v);
    vecs.push_back(std::move(v));
  }
  return span(ctx_, ambient_, vecs);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
  const Context& ctx = m.context();
  const std::size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(ctx, n, f);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(ctx, n, vecs);
}

Vec IncrementalBasis::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j] -= f * rows_[i][j];
  }
  return r;
}

bool IncrementalBasis::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Cyclotomic inv = r[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j)
    if (!r[j].is_zero()) r[j] *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  added_.push_back(v);
  return true;
}

bool IncrementalBasis::contains(const Vec& v) const { return hopfimg::is_zero(reduce(v)); }

Subspace IncrementalBasis::subspace() const { return Subspace::span(ctx_, ambient_, rows_); }

Subspace annihilator(const Subspace& v) {
  if (v.dim() == 0) return Subspace::full(v.context(), v.ambient());
  return kernel(v.basis());
}

QuotientData quotient_data(const Subspace& v) {
  const Context& ctx = v.context();
  const std::size_t d = v.ambient();
  std::vector<std::size_t> pivot_row(d, d);
  for (std::size_t i = 0; i < v.pivots().size(); ++i) pivot_row[v.pivots()[i]] = i;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> position(d, d);
  for (std::size_t j = 0; j < d; ++j)
    if (pivot_row[j] == d) {
      position[j] = complement.size();
      complement.push_back(j);
    }
  const std::size_t q = complement.size();
  Matrix proj(ctx, q, d), sect(ctx, d, q);
  for (std::size_t j = 0; j < d; ++j) {
    if (pivot_row[j] == d) {
      proj(position[j], j) = Cyclotomic::one(ctx);
    } else {
      // e_j ≡ e_j - (basis row with pivot j), which has support on the complement only.
      for (std::size_t c = 0; c < q; ++c) proj(c, j) = -v.basis()(pivot_row[j], complement[c]);
    }
  }
  for (std::size_t c = 0; c < q; ++c) sect(complement[c], c) = Cyclotomic::one(ctx);
  return QuotientData{std::move(proj), std::move(sect), std::move(complement)};
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
  const std::size_t n = a.cols();
  std::vector<Vec> rows = a.row_vectors();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
  Echelon e = eliminate(std::move(rows), n + 1);
  Vec x = zero_vec(a.context(), n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  std::vector<Vec> rows = a.row_vectors();
  for (std::size_t r = 0; r < n; ++r) {
    Vec e = unit_vec(a.context(), n, r);
    rows[r].insert(rows[r].end(), e.begin(), e.end());
  }
  Echelon e = eliminate(std::move(rows), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.context(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows[r][n + c];
  return inv;
}

}  // namespace hopfimg
