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

#include "hopfimg/hopfcore.hpp"

#include <algorithm>
#include <sstream>

namespace hopfimg {

// ---------------------------------------------------------------------------------------------
// StructureTensor

StructureTensor::StructureTensor(Context ctx, std::size_t d0, std::size_t d1, std::size_t d2)
    : ctx_(std::move(ctx)), d0_(d0), d1_(d1), d2_(d2), slices_(d0) {}

void StructureTensor::set_slice(std::size_t i, const Vec& dense) {
  if (dense.size() != d1_ * d2_) throw DimensionMismatch("tensor slice has wrong length");
  auto& s = slices_.at(i);
  s.clear();
  for (std::size_t f = 0; f < dense.size(); ++f)
    if (!dense[f].is_zero()) s.push_back(Entry{f / d2_, f % d2_, dense[f]});
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Cyclotomic& value) {
  if (i >= d0_ || j >= d1_ || k >= d2_) throw IndexOutOfRange("tensor index out of range");
  if (value.is_zero()) return;
  auto& s = slices_[i];
  auto it = std::lower_bound(s.begin(), s.end(), std::pair{j, k},
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{e.j, e.k} < key;
                             });
  if (it != s.end() && it->j == j && it->k == k) {
    it->value += value;
    if (it->value.is_zero()) s.erase(it);
  } else {
    s.insert(it, Entry{j, k, value});
  }
}

Vec StructureTensor::dense_slice(std::size_t i) const {
  Vec v = zero_vec(ctx_, d1_ * d2_);
  for (const auto& e : slices_.at(i)) v[e.j * d2_ + e.k] = e.value;
  return v;
}

Cyclotomic StructureTensor::at(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : slices_.at(i))
    if (e.j == j && e.k == k) return e.value;
  return Cyclotomic(ctx_);
}

std::size_t StructureTensor::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : slices_) n += s.size();
  return n;
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) return false;
  for (std::size_t i = 0; i < a.d0_; ++i) {
    const auto& x = a.slices_[i];
    const auto& y = b.slices_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].j != y[t].j || x[t].k != y[t].k || x[t].value != y[t].value) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// ValidationReport

bool ValidationReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* ValidationReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "pass " : "FAIL ") << r.axiom;
    if (!r.passed) os << "  witness " << r.witness;
    os << '\n';
  }
  return os.str();
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(ValidationReport& report) : report_(report) {}

  /// Records the first failing witness for an axiom.
  void check(const std::string& axiom, bool holds, const std::string& witness) {
    AxiomResult* r = entry(axiom);
    if (!holds && r->passed) {
      r->passed = false;
      r->witness = witness;
    }
  }
  AxiomResult* entry(const std::string& axiom) {
    for (auto& r : report_.results)
      if (r.axiom == axiom) return &r;
    report_.results.push_back(AxiomResult{axiom, true, ""});
    return &report_.results.back();
  }
  bool failed(const std::string& axiom) { return !entry(axiom)->passed; }

 private:
  ValidationReport& report_;
};

std::string tuple(const std::vector<std::string>& labels, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += labels[i];
    first = false;
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// AlgebraData

AlgebraData::AlgebraData(Context ctx_, std::size_t dim_, std::vector<std::string> labels_, StructureTensor mult_,
                         Vec unit_)
    : ctx(std::move(ctx_)), dim(dim_), labels(std::move(labels_)), mult(std::move(mult_)), unit(std::move(unit_)) {
  if (labels.size() != dim || unit.size() != dim || mult.extent(0) != dim || mult.extent(1) != dim ||
      mult.extent(2) != dim)
    throw DimensionMismatch("algebra data shapes do not match dimension " + std::to_string(dim));
}

Vec multiply(const AlgebraData& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim || y.size() != a.dim) throw DimensionMismatch("multiply: vector length");
  Vec out = zero_vec(a.ctx, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& e : a.mult.slice(i)) {
      if (y[e.j].is_zero()) continue;
      out[e.k] += x[i] * y[e.j] * e.value;
    }
  }
  return out;
}

Vec basis_product(const AlgebraData& a, std::size_t i, std::size_t j) {
  Vec out = zero_vec(a.ctx, a.dim);
  for (const auto& e : a.mult.slice(i))
    if (e.j == j) out[e.k] += e.value;
  return out;
}

bool is_commutative(const AlgebraData& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (basis_product(a, i, j) != basis_product(a, j, i)) return false;
  return true;
}

ValidationReport validate_algebra(const AlgebraData& a) {
  ValidationReport report;
  ReportBuilder rb(report);
  const std::size_t d = a.dim;
  std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i][j] = basis_product(a, i, j);
  rb.entry("associativity");
  for (std::size_t i = 0; i < d && !rb.failed("associativity"); ++i)
    for (std::size_t j = 0; j < d && !rb.failed("associativity"); ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec left = zero_vec(a.ctx, d), right = zero_vec(a.ctx, d);
        for (std::size_t m = 0; m < d; ++m) {
          axpy(prod[i][j][m], prod[m][k], left);
          axpy(prod[j][k][m], prod[i][m], right);
        }
        if (left != right) {
          rb.check("associativity", false, tuple(a.labels, {i, j, k}));
          break;
        }
      }
  rb.entry("unit");
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = unit_vec(a.ctx, d, i);
    if (multiply(a, a.unit, e) != e || multiply(a, e, a.unit) != e) {
      rb.check("unit", false, tuple(a.labels, {i}));
      break;
    }
  }
  return report;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  const std::size_t da = a.dim, db = b.dim, d = da * db;
  StructureTensor mult(a.ctx, d, d, d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t i2 = 0; i2 < db; ++i2) {
      Vec slice = zero_vec(a.ctx, d * d);
      for (const auto& x : a.mult.slice(i1))
        for (const auto& y : b.mult.slice(i2)) {
          std::size_t j = x.j * db + y.j, k = x.k * db + y.k;
          slice[j * d + k] += x.value * y.value;
        }
      mult.set_slice(i1 * db + i2, slice);
    }
  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
  return AlgebraData(a.ctx, d, std::move(labels), std::move(mult), outer(a.unit, b.unit));
}

Vec tensor_multiply(const AlgebraData& a, const AlgebraData& b, const Vec& x, const Vec& y) {
  const std::size_t da = a.dim, db = b.dim;
  if (x.size() != da * db || y.size() != da * db) throw DimensionMismatch("tensor_multiply: vector length");
  Vec out = zero_vec(a.ctx, da * db);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    const std::size_t i1 = p / db, i2 = p % db;
    for (const auto& e1 : a.mult.slice(i1))
      for (const auto& e2 : b.mult.slice(i2)) {
        const Cyclotomic& yv = y[e1.j * db + e2.j];
        if (yv.is_zero()) continue;
        out[e1.k * db + e2.k] += x[p] * yv * e1.value * e2.value;
      }
  }
  return out;
}

Matrix left_multiplication(const AlgebraData& a, const Vec& x) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.dim; ++j) cols.push_back(multiply(a, x, unit_vec(a.ctx, a.dim, j)));
  return Matrix::from_columns(a.ctx, cols, a.dim);
}

Matrix right_multiplication(const AlgebraData& a, const Vec& x) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.dim; ++j) cols.push_back(multiply(a, unit_vec(a.ctx, a.dim, j), x));
  return Matrix::from_columns(a.ctx, cols, a.dim);
}

// ---------------------------------------------------------------------------------------------
// HopfAlgebraData

HopfAlgebraData::HopfAlgebraData(AlgebraData algebra_, StructureTensor comult_, Vec counit_, Matrix antipode_)
    : algebra(std::move(algebra_)), comult(std::move(comult_)), counit(std::move(counit_)),
      antipode(std::move(antipode_)) {
  const std::size_t d = algebra.dim;
  if (comult.extent(0) != d || comult.extent(1) != d || comult.extent(2) != d || counit.size() != d ||
      antipode.rows() != d || antipode.cols() != d)
    throw DimensionMismatch("Hopf data shapes do not match dimension " + std::to_string(d));
}

bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim() == b.dim() && same_field(a.ctx(), b.ctx()) && a.algebra.mult == b.algebra.mult &&
         a.algebra.unit == b.algebra.unit && a.comult == b.comult && a.counit == b.counit &&
         a.antipode == b.antipode;
}

Vec comultiply(const HopfAlgebraData& h, const Vec& x) {
  const std::size_t d = h.dim();
  if (x.size() != d) throw DimensionMismatch("comultiply: vector length");
  Vec out = zero_vec(h.ctx(), d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& e : h.comult.slice(i)) out[e.j * d + e.k] += x[i] * e.value;
  }
  return out;
}

Vec double_comultiply(const HopfAlgebraData& h, const Vec& x) {
  const std::size_t d = h.dim();
  Vec once = comultiply(h, x);
  Vec out = zero_vec(h.ctx(), d * d * d);
  for (std::size_t p = 0; p < once.size(); ++p) {
    if (once[p].is_zero()) continue;
    const std::size_t a = p / d, b = p % d;
    for (const auto& e : h.comult.slice(a)) out[(e.j * d + e.k) * d + b] += once[p] * e.value;
  }
  return out;
}

Cyclotomic counit_of(const HopfAlgebraData& h, const Vec& x) { return dot(h.counit, x); }

Vec antipode_of(const HopfAlgebraData& h, const Vec& x) { return h.antipode.apply(x); }

bool is_cocommutative(const HopfAlgebraData& h) {
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& e : h.comult.slice(i))
      if (h.comult.at(i, e.k, e.j) != e.value) return false;
  return true;
}

ValidationReport validate(const HopfAlgebraData& h) {
  ValidationReport report = validate_algebra(h.algebra);
  ReportBuilder rb(report);
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  const auto& labels = h.labels();

  std::vector<Vec> delta(d);
  for (std::size_t i = 0; i < d; ++i) delta[i] = h.comult.dense_slice(i);

  rb.entry("coassociativity");
  for (std::size_t i = 0; i < d; ++i) {
    Vec left = zero_vec(ctx, d * d * d), right = zero_vec(ctx, d * d * d);
    for (const auto& e : h.comult.slice(i)) {
      for (const auto& f : h.comult.slice(e.j)) left[(f.j * d + f.k) * d + e.k] += e.value * f.value;
      for (const auto& f : h.comult.slice(e.k)) right[(e.j * d + f.j) * d + f.k] += e.value * f.value;
    }
    if (left != right) {
      rb.check("coassociativity", false, tuple(labels, {i}));
      break;
    }
  }

  rb.entry("counit");
  for (std::size_t i = 0; i < d; ++i) {
    Vec left = zero_vec(ctx, d), right = zero_vec(ctx, d);
    for (const auto& e : h.comult.slice(i)) {
      left[e.k] += h.counit[e.j] * e.value;
      right[e.j] += h.counit[e.k] * e.value;
    }
    Vec ei = unit_vec(ctx, d, i);
    if (left != ei || right != ei) {
      rb.check("counit", false, tuple(labels, {i}));
      break;
    }
  }

  rb.entry("comult_multiplicative");
  for (std::size_t i = 0; i < d && !rb.failed("comult_multiplicative"); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = comultiply(h, basis_product(h.algebra, i, j));
      Vec rhs = tensor_multiply(h.algebra, h.algebra, delta[i], delta[j]);
      if (lhs != rhs) {
        rb.check("comult_multiplicative", false, tuple(labels, {i, j}));
        break;
      }
    }

  rb.entry("comult_unital");
  rb.check("comult_unital", comultiply(h, h.algebra.unit) == outer(h.algebra.unit, h.algebra.unit), "(1)");

  rb.entry("counit_multiplicative");
  for (std::size_t i = 0; i < d && !rb.failed("counit_multiplicative"); ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (counit_of(h, basis_product(h.algebra, i, j)) != h.counit[i] * h.counit[j]) {
        rb.check("counit_multiplicative", false, tuple(labels, {i, j}));
        break;
      }

  rb.entry("counit_unital");
  rb.check("counit_unital", counit_of(h, h.algebra.unit).is_one(), "(1)");

  std::vector<Vec> s_cols(d);
  for (std::size_t i = 0; i < d; ++i) s_cols[i] = h.antipode.column(i);
  rb.entry("antipode_left");
  rb.entry("antipode_right");
  for (std::size_t i = 0; i < d; ++i) {
    Vec left = zero_vec(ctx, d), right = zero_vec(ctx, d);
    for (const auto& e : h.comult.slice(i)) {
      axpy(e.value, multiply(h.algebra, s_cols[e.j], unit_vec(ctx, d, e.k)), left);
      axpy(e.value, multiply(h.algebra, unit_vec(ctx, d, e.j), s_cols[e.k]), right);
    }
    Vec expected = scale(h.counit[i], h.algebra.unit);
    rb.check("antipode_left", left == expected, tuple(labels, {i}));
    rb.check("antipode_right", right == expected, tuple(labels, {i}));
  }
  return report;
}

HopfAlgebraData trivial_hopf(const Context& ctx) {
  StructureTensor mult(ctx, 1, 1, 1), comult(ctx, 1, 1, 1);
  mult.add(0, 0, 0, Cyclotomic::one(ctx));
  comult.add(0, 0, 0, Cyclotomic::one(ctx));
  AlgebraData alg(ctx, 1, {"1"}, std::move(mult), unit_vec(ctx, 1, 0));
  return HopfAlgebraData(std::move(alg), std::move(comult), unit_vec(ctx, 1, 0), Matrix::identity(ctx, 1));
}

HopfAlgebraData dual(const HopfAlgebraData& h) {
  const std::size_t d = h.dim();
  const Context& ctx = h.ctx();
  StructureTensor mult(ctx, d, d, d), comult(ctx, d, d, d);
  // (f·g)(e_i) = Σ Δ(i,j,k) f(e_j) g(e_k)  ⇒  mult*(j,k,i) = Δ(i,j,k)
  std::vector<Vec> mult_slices(d, zero_vec(ctx, d * d)), comult_slices(d, zero_vec(ctx, d * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& e : h.comult.slice(i)) mult_slices[e.j][e.k * d + i] += e.value;
    // Δ*(f)(e_i ⊗ e_j) = f(e_i e_j)  ⇒  comult*(k,i,j) = mult(i,j,k)
    for (const auto& e : h.algebra.mult.slice(i)) comult_slices[e.k][i * d + e.j] += e.value;
  }
  for (std::size_t i = 0; i < d; ++i) {
    mult.set_slice(i, mult_slices[i]);
    comult.set_slice(i, comult_slices[i]);
  }
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(l + "*");
  AlgebraData alg(ctx, d, std::move(labels), std::move(mult), h.counit);
  return HopfAlgebraData(std::move(alg), std::move(comult), h.algebra.unit, h.antipode.transpose());
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& h, const HopfAlgebraData& l) {
  if (!same_field(h.ctx(), l.ctx())) throw ContextMismatch("tensor_hopf: different conductors");
  const std::size_t dh = h.dim(), dl = l.dim(), d = dh * dl;
  const Context& ctx = h.ctx();
  AlgebraData alg = tensor_algebra(h.algebra, l.algebra);
  StructureTensor comult(ctx, d, d, d);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dl; ++b) {
      Vec slice = zero_vec(ctx, d * d);
      for (const auto& x : h.comult.slice(a))
        for (const auto& y : l.comult.slice(b)) {
          std::size_t left = x.j * dl + y.j, right = x.k * dl + y.k;
          slice[left * d + right] += x.value * y.value;
        }
      comult.set_slice(a * dl + b, slice);
    }
  return HopfAlgebraData(std::move(alg), std::move(comult), outer(h.counit, l.counit),
                         kron(h.antipode, l.antipode));
}

// ---------------------------------------------------------------------------------------------
// Morphisms, ideals and quotients

ValidationReport verify_morphism(const HopfMorphism& f) {
  ValidationReport report;
  ReportBuilder rb(report);
  const HopfAlgebraData& h = f.source;
  const HopfAlgebraData& l = f.target;
  const std::size_t dh = h.dim(), dl = l.dim();
  if (f.matrix.rows() != dl || f.matrix.cols() != dh) throw ShapeMismatch("morphism matrix shape");
  const Context& ctx = h.ctx();
  const auto& labels = h.labels();
  std::vector<Vec> img(dh);
  for (std::size_t i = 0; i < dh; ++i) img[i] = f.matrix.column(i);

  rb.entry("unit");
  rb.check("unit", f.matrix.apply(h.algebra.unit) == l.algebra.unit, "(1)");
  rb.entry("multiplicative");
  for (std::size_t i = 0; i < dh && !rb.failed("multiplicative"); ++i)
    for (std::size_t j = 0; j < dh; ++j)
      if (f.matrix.apply(basis_product(h.algebra, i, j)) != multiply(l.algebra, img[i], img[j])) {
        rb.check("multiplicative", false, tuple(labels, {i, j}));
        break;
      }
  rb.entry("comultiplicative");
  for (std::size_t i = 0; i < dh; ++i) {
    Vec pushed = zero_vec(ctx, dl * dl);
    for (const auto& e : h.comult.slice(i)) axpy(e.value, outer(img[e.j], img[e.k]), pushed);
    if (pushed != comultiply(l, img[i])) {
      rb.check("comultiplicative", false, tuple(labels, {i}));
      break;
    }
  }
  rb.entry("counit");
  for (std::size_t i = 0; i < dh; ++i)
    if (counit_of(l, img[i]) != h.counit[i]) {
      rb.check("counit", false, tuple(labels, {i}));
      break;
    }
  rb.entry("antipode");
  for (std::size_t i = 0; i < dh; ++i)
    if (f.matrix.apply(h.antipode.column(i)) != l.antipode.apply(img[i])) {
      rb.check("antipode", false, tuple(labels, {i}));
      break;
    }
  (void)ctx;
  return report;
}

HopfIdealCheck is_hopf_ideal(const HopfAlgebraData& h, const Subspace& ideal) {
  const std::size_t d = h.dim();
  if (ideal.ambient() != d) throw DimensionMismatch("ideal does not live in H");
  HopfIdealCheck out;
  auto fail = [&](const char* what, std::size_t element, std::size_t partner) {
    out.ok = false;
    out.failed = what;
    out.element = element;
    out.partner = partner;
    return out;
  };
  const std::vector<Vec> basis = ideal.basis_vectors();
  const Context& ctx = h.ctx();
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t i = 0; i < d; ++i)
      if (!ideal.contains(multiply(h.algebra, unit_vec(ctx, d, i), basis[r]))) return fail("left_ideal", r, i);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t i = 0; i < d; ++i)
      if (!ideal.contains(multiply(h.algebra, basis[r], unit_vec(ctx, d, i)))) return fail("right_ideal", r, i);
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (!counit_of(h, basis[r]).is_zero()) return fail("counit", r, 0);
  QuotientData qd = quotient_data(ideal);
  const std::size_t q = qd.complement.size();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Vec delta = comultiply(h, basis[r]);
    Vec projected = zero_vec(ctx, q * q);
    for (std::size_t p = 0; p < delta.size(); ++p) {
      if (delta[p].is_zero()) continue;
      axpy(delta[p], outer(qd.projection.column(p / d), qd.projection.column(p % d)), projected);
    }
    if (!is_zero(projected)) return fail("coideal", r, 0);
  }
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (!ideal.contains(antipode_of(h, basis[r]))) return fail("antipode", r, 0);
  return out;
}

QuotientHopf quotient_hopf(const HopfAlgebraData& h, const Subspace& ideal) {
  HopfIdealCheck check = is_hopf_ideal(h, ideal);
  if (!check)
    throw NotAHopfIdeal("inclusion '" + check.failed + "' fails for ideal basis element " +
                        std::to_string(check.element));
  const Context& ctx = h.ctx();
  const std::size_t d = h.dim();
  QuotientData qd = quotient_data(ideal);
  const std::size_t q = qd.complement.size();
  const Matrix& proj = qd.projection;

  StructureTensor mult(ctx, q, q, q), comult(ctx, q, q, q);
  std::vector<Vec> proj_cols(d);
  for (std::size_t j = 0; j < d; ++j) proj_cols[j] = proj.column(j);
  for (std::size_t a = 0; a < q; ++a) {
    Vec mslice = zero_vec(ctx, q * q);
    for (std::size_t b = 0; b < q; ++b) {
      Vec prod = proj.apply(basis_product(h.algebra, qd.complement[a], qd.complement[b]));
      for (std::size_t c = 0; c < q; ++c) mslice[b * q + c] = prod[c];
    }
    mult.set_slice(a, mslice);
    Vec cslice = zero_vec(ctx, q * q);
    for (const auto& e : h.comult.slice(qd.complement[a]))
      axpy(e.value, outer(proj_cols[e.j], proj_cols[e.k]), cslice);
    comult.set_slice(a, cslice);
  }
  std::vector<std::string> labels;
  Vec counit = zero_vec(ctx, q);
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(h.labels()[qd.complement[a]]);
    counit[a] = h.counit[qd.complement[a]];
  }
  AlgebraData alg(ctx, q, std::move(labels), std::move(mult), proj.apply(h.algebra.unit));
  Matrix antipode = proj * h.antipode * qd.section;
  HopfAlgebraData quotient(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
  HopfMorphism p{h, quotient, proj};
  return QuotientHopf{std::move(quotient), std::move(p), std::move(qd)};
}

Subspace augmentation_ideal(const HopfAlgebraData& h) {
  Matrix eps = Matrix::from_rows(h.ctx(), {h.counit}, h.dim());
  return kernel(eps);
}

}  // namespace hopfimg
