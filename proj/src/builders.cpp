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

#include "hopfimg/builders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace hopfimg {

// ---------------------------------------------------------------------------------------------
// Groups

GroupTable make_group_table(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels) {
  const std::size_t n = mult.size();
  if (n == 0) throw InvalidTable("empty group table");
  for (const auto& row : mult) {
    if (row.size() != n) throw InvalidTable("group table is not square");
    for (std::size_t v : row)
      if (v >= n) throw InvalidTable("group table entry out of range");
  }
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != n) throw InvalidTable("wrong number of labels");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw InvalidTable("not associative at (" + labels[a] + "," + labels[b] + "," + labels[c] + ")");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = mult[e][g] == g && mult[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidTable("no identity element");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (mult[g][h] == *identity && mult[h][g] == *identity) inverse[g] = h;
    if (inverse[g] == n) throw InvalidTable("element " + labels[g] + " has no inverse");
  }
  return GroupTable{n, std::move(mult), *identity, std::move(inverse), std::move(labels)};
}

namespace {

std::string power_label(const std::string& base, std::size_t e) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string or_one(const std::string& s) { return s.empty() ? "1" : s; }

}  // namespace

GroupTable cyclic_group_table(std::size_t n) {
  if (n == 0) throw InvalidTable("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(or_one(power_label("x", i)));
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  }
  return make_group_table(std::move(mult), std::move(labels));
}

GroupTable direct_product_table(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.order * b.order;
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.labels[x / b.order] + "," + b.labels[x % b.order] + ")");
    for (std::size_t y = 0; y < n; ++y)
      mult[x][y] = a.mult[x / b.order][y / b.order] * b.order + b.mult[x % b.order][y % b.order];
  }
  return make_group_table(std::move(mult), std::move(labels));
}

GroupTable dihedral_group_table(std::size_t n) {
  if (n == 0) throw InvalidTable("dihedral group of order 0");
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, b = x / n;
    labels[x] = b ? power_label("r", i) + "s" : or_one(power_label("r", i));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n, c = y / n;
      const std::size_t rot = b ? (i + n - j) % n : (i + j) % n;
      mult[x][y] = ((b + c) % 2) * n + rot;
    }
  }
  return make_group_table(std::move(mult), std::move(labels));
}

std::size_t element_order(const GroupTable& t, std::size_t g) {
  std::size_t k = 1, x = g;
  while (x != t.identity) {
    x = t.mult[x][g];
    ++k;
  }
  return k;
}

std::vector<std::size_t> generated_subgroup(const GroupTable& t, const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(t.order, false);
  std::deque<std::size_t> queue{t.identity};
  seen[t.identity] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g : gens) {
      if (g >= t.order) throw IndexOutOfRange("group element index out of range");
      std::size_t y = t.mult[x][g];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < t.order; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Symmetric groups

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> done(n, false);
  std::string out;
  for (int x = 1; x <= n; ++x) {
    if (done[x - 1] || p[x - 1] == x) continue;
    out += "(";
    int y = x;
    bool first = true;
    while (!done[y - 1]) {
      done[y - 1] = true;
      if (!first) out += ",";
      out += std::to_string(y);
      first = false;
      y = p[y - 1];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<int> cycle_type(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> done(n, false);
  std::vector<int> type;
  for (int x = 1; x <= n; ++x) {
    if (done[x - 1]) continue;
    int len = 0;
    for (int y = x; !done[y - 1]; y = p[y - 1]) {
      done[y - 1] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

/// Characters of S_n (n ≤ 4) by cycle type.
std::vector<std::vector<long>> symmetric_characters(int n, const std::vector<int>& type) {
  using T = std::vector<int>;
  std::map<T, std::vector<long>> table;  // cycle type → column of character values
  switch (n) {
    case 1:
      table[{1}] = {1};
      break;
    case 2:
      table[{1, 1}] = {1, 1};
      table[{2}] = {1, -1};
      break;
    case 3:
      table[{1, 1, 1}] = {1, 1, 2};
      table[{2, 1}] = {1, -1, 0};
      table[{3}] = {1, 1, -1};
      break;
    case 4:
      table[{1, 1, 1, 1}] = {1, 1, 2, 3, 3};
      table[{2, 1, 1}] = {1, -1, 0, 1, -1};
      table[{2, 2}] = {1, 1, 2, -1, -1};
      table[{3, 1}] = {1, 1, -1, 0, 0};
      table[{4}] = {1, -1, 0, -1, 1};
      break;
    default:
      throw MissingCharacterTable("character tables are shipped for n ≤ 4 only");
  }
  return {table.at(type)};
}

}  // namespace

SymmetricGroup symmetric_group_table(const Context& ctx, int n) {
  if (n < 1 || n > 4) throw InvalidTable("symmetric groups are built for 1 ≤ n ≤ 4");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t order = perms.size();
  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x] - 1];
      mult[a][b] = index.at(c);
    }
  }
  SymmetricGroup out{make_group_table(std::move(mult), std::move(labels)), {}, perms};
  const std::size_t nchars = symmetric_characters(n, cycle_type(perms[0]))[0].size();
  out.characters.characters.assign(nchars, std::vector<Cyclotomic>(order, Cyclotomic(ctx)));
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<long> col = symmetric_characters(n, cycle_type(perms[g]))[0];
    for (std::size_t c = 0; c < nchars; ++c) out.characters.characters[c][g] = Cyclotomic(ctx, col[c]);
  }
  return out;
}

std::size_t find_permutation(const SymmetricGroup& s, const std::string& cycles) {
  const int n = s.permutations.empty() ? 0 : static_cast<int>(s.permutations[0].size());
  std::vector<int> total(n);
  std::iota(total.begin(), total.end(), 1);
  std::size_t pos = 0;
  auto bad = [&] { return FormatError("cannot read permutation '" + cycles + "'"); };
  while (pos < cycles.size()) {
    if (cycles[pos] == ' ') {
      ++pos;
      continue;
    }
    if (cycles[pos] != '(') throw bad();
    ++pos;
    std::vector<int> cyc;
    while (pos < cycles.size() && cycles[pos] != ')') {
      if (cycles[pos] == ',' || cycles[pos] == ' ') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos]))) throw bad();
      int v = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        v = v * 10 + (cycles[pos++] - '0');
      if (v < 1 || v > n) throw bad();
      cyc.push_back(v);
    }
    if (pos >= cycles.size()) throw bad();
    ++pos;
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 1);
    for (std::size_t t = 0; t < cyc.size(); ++t) c[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
    std::vector<int> composed(n);
    for (int x = 0; x < n; ++x) composed[x] = total[c[x] - 1];
    total = composed;
  }
  for (std::size_t i = 0; i < s.permutations.size(); ++i)
    if (s.permutations[i] == total) return i;
  throw bad();
}

// ---------------------------------------------------------------------------------------------
// Group and function algebras

BuiltHopf group_algebra(const Context& ctx, const GroupTable& t) {
  const std::size_t n = t.order;
  StructureTensor mult(ctx, n, n, n), comult(ctx, n, n, n);
  Matrix antipode(ctx, n, n);
  Vec counit(n, Cyclotomic::one(ctx));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.add(i, j, t.mult[i][j], Cyclotomic::one(ctx));
    comult.add(i, i, i, Cyclotomic::one(ctx));
    antipode(t.inverse[i], i) = Cyclotomic::one(ctx);
  }
  AlgebraData alg(ctx, n, t.labels, std::move(mult), unit_vec(ctx, n, t.identity));
  HopfAlgebraData h(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
  std::vector<Vec> gl;
  for (std::size_t i = 0; i < n; ++i) gl.push_back(unit_vec(ctx, n, i));
  GroupLikeSet set = verify_grouplikes(h, gl);
  return BuiltHopf{std::move(h), std::move(set)};
}

namespace {

/// Roots of unity lying in Q(ζ_N): ±ζ^j.
std::vector<Cyclotomic> field_roots_of_unity(const Context& ctx) {
  std::vector<Cyclotomic> out;
  const long n = static_cast<long>(ctx->conductor());
  for (long j = 0; j < n; ++j) {
    for (const Cyclotomic& z : {Cyclotomic::zeta(ctx, j), -Cyclotomic::zeta(ctx, j)}) {
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
  }
  return out;
}

std::size_t exponent(const GroupTable& t) {
  std::size_t e = 1;
  for (std::size_t g = 0; g < t.order; ++g) e = std::lcm(e, element_order(t, g));
  return e;
}

}  // namespace

std::vector<std::vector<Cyclotomic>> linear_characters(const Context& ctx, const GroupTable& t) {
  std::vector<std::size_t> gens;
  while (generated_subgroup(t, gens).size() < t.order) {
    std::vector<std::size_t> sub = generated_subgroup(t, gens);
    for (std::size_t g = 0; g < t.order; ++g)
      if (!std::binary_search(sub.begin(), sub.end(), g)) {
        gens.push_back(g);
        break;
      }
  }
  const std::vector<Cyclotomic> roots = field_roots_of_unity(ctx);
  std::vector<std::vector<Cyclotomic>> options;
  for (std::size_t g : gens) {
    const long ord = static_cast<long>(element_order(t, g));
    std::vector<Cyclotomic> opts;
    for (const auto& z : roots)
      if (z.pow(ord).is_one()) opts.push_back(z);
    options.push_back(std::move(opts));
  }
  std::vector<std::vector<Cyclotomic>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::optional<Cyclotomic>> values(t.order);
    values[t.identity] = Cyclotomic::one(ctx);
    std::deque<std::size_t> queue{t.identity};
    bool ok = true;
    while (!queue.empty() && ok) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < gens.size() && ok; ++a) {
        std::size_t y = t.mult[x][gens[a]];
        Cyclotomic v = *values[x] * options[a][choice[a]];
        if (!values[y]) {
          values[y] = v;
          queue.push_back(y);
        } else if (*values[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<Cyclotomic> chi;
      for (auto& v : values) chi.push_back(*v);
      out.push_back(std::move(chi));
    }
    std::size_t a = 0;
    while (a < gens.size() && ++choice[a] == options[a].size()) choice[a++] = 0;
    if (a == gens.size()) break;
  }
  return out;
}

CharacterTable abelian_character_table(const Context& ctx, const GroupTable& t) {
  auto chars = linear_characters(ctx, t);
  if (chars.size() != t.order)
    throw MissingCharacterTable("only " + std::to_string(chars.size()) + " of " + std::to_string(t.order) +
                                " irreducible characters are available over this field");
  return CharacterTable{std::move(chars)};
}

BuiltHopf function_algebra(const Context& ctx, const GroupTable& t) {
  BuiltHopf g = group_algebra(ctx, t);
  HopfAlgebraData h = dual(g.hopf);
  for (std::size_t i = 0; i < t.order; ++i) h.algebra.labels[i] = "delta_" + t.labels[i];
  std::vector<Vec> candidates;
  for (auto& chi : linear_characters(ctx, t)) candidates.push_back(std::move(chi));
  GroupLikeSet set = verify_grouplikes(h, candidates);
  const std::size_t roots = std::lcm<std::size_t>(ctx->conductor(), 2);
  set.complete = roots % exponent(t) == 0;
  return BuiltHopf{std::move(h), std::move(set)};
}

// ---------------------------------------------------------------------------------------------
// Small algebras and representations

AlgebraData product_algebra(const Context& ctx, std::size_t n) {
  StructureTensor mult(ctx, n, n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    mult.add(i, i, i, Cyclotomic::one(ctx));
    labels.push_back("p" + std::to_string(i + 1));
  }
  return AlgebraData(ctx, n, std::move(labels), std::move(mult), Vec(n, Cyclotomic::one(ctx)));
}

AlgebraData matrix_algebra(const Context& ctx, std::size_t n) {
  const std::size_t d = n * n;
  StructureTensor mult(ctx, d, d, d);
  std::vector<std::string> labels;
  Vec unit = zero_vec(ctx, d);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = Cyclotomic::one(ctx);
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) mult.add(i * n + j, j * n + l, i * n + l, Cyclotomic::one(ctx));
    }
  }
  return AlgebraData(ctx, d, std::move(labels), std::move(mult), std::move(unit));
}

Representation identity_rep(const HopfAlgebraData& h) {
  return Representation{h, h.algebra, Matrix::identity(h.ctx(), h.dim())};
}

Representation counit_rep(const HopfAlgebraData& h) {
  return Representation{h, product_algebra(h.ctx(), 1), Matrix::from_rows(h.ctx(), {h.counit}, h.dim())};
}

Representation evaluation_rep(const HopfAlgebraData& fa, const std::vector<std::size_t>& points) {
  const Context& ctx = fa.ctx();
  std::vector<Vec> rows;
  for (std::size_t p : points) {
    if (p >= fa.dim()) throw IndexOutOfRange("evaluation point " + std::to_string(p) + " out of range");
    rows.push_back(unit_vec(ctx, fa.dim(), p));
  }
  return Representation{fa, product_algebra(ctx, points.size()), Matrix::from_rows(ctx, rows, fa.dim())};
}

bool character_span_injectivity(const CharacterTable& chars, const Representation& r) {
  if (chars.characters.empty()) throw MissingCharacterTable("empty character table");
  for (const auto& chi : chars.characters)
    if (chi.size() != r.source.dim()) throw MissingCharacterTable("character table does not match the algebra");
  std::vector<Vec> images;
  for (const auto& chi : chars.characters) {
    Vec img = r.matrix.apply(Vec(chi.begin(), chi.end()));
    if (std::find(images.begin(), images.end(), img) != images.end()) return false;
    images.push_back(std::move(img));
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// Taft algebras

BuiltHopf taft(const Context& ctx, std::size_t n, const Cyclotomic& q) {
  if (n < 2) throw WrongOrder("Taft algebras need n ≥ 2");
  auto ord = root_of_unity_order(q);
  if (!ord || *ord != n) throw WrongOrder("q must be a primitive " + std::to_string(n) + "-th root of unity");
  const std::size_t d = n * n;
  StructureTensor mult(ctx, d, d, d);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      labels.push_back(or_one(power_label("g", a) + power_label("x", b)));
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e + b < n; ++e)
          mult.add(a * n + b, c * n + e, ((a + c) % n) * n + (b + e), q.pow(static_cast<long>(b * c)));
    }
  AlgebraData alg(ctx, d, std::move(labels), std::move(mult), unit_vec(ctx, d, 0));
  const Vec one = unit_vec(ctx, d, 0), g = unit_vec(ctx, d, n), x = unit_vec(ctx, d, 1);
  const Vec dg = outer(g, g);
  const Vec dx = add(outer(one, x), outer(x, g));
  Vec g_inv = one;
  for (std::size_t t = 1; t < n; ++t) g_inv = multiply(alg, g_inv, g);
  const Vec sx = scale(Cyclotomic(ctx, -1L), multiply(alg, x, g_inv));

  StructureTensor comult(ctx, d, d, d);
  Matrix antipode(ctx, d, d);
  Vec counit = zero_vec(ctx, d);
  Vec delta_ga = outer(one, one), s_ga = one;
  for (std::size_t a = 0; a < n; ++a) {
    Vec delta = delta_ga, s_xb = one;
    for (std::size_t b = 0; b < n; ++b) {
      comult.set_slice(a * n + b, delta);
      Vec s = multiply(alg, s_xb, s_ga);  // S(g^a x^b) = S(x)^b S(g)^a
      for (std::size_t i = 0; i < d; ++i) antipode(i, a * n + b) = s[i];
      delta = tensor_multiply(alg, alg, delta, dx);
      s_xb = multiply(alg, sx, s_xb);
    }
    counit[a * n] = Cyclotomic::one(ctx);
    delta_ga = tensor_multiply(alg, alg, delta_ga, dg);
    s_ga = multiply(alg, s_ga, g_inv);
  }
  HopfAlgebraData h(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
  std::vector<Vec> gl;
  for (std::size_t a = 0; a < n; ++a) gl.push_back(unit_vec(ctx, d, a * n));
  GroupLikeSet set = verify_grouplikes(h, gl);
  return BuiltHopf{std::move(h), std::move(set)};
}

// ---------------------------------------------------------------------------------------------
// A(k, e)

namespace {

/// Element r^a s^b of the dihedral group of order 4k.
struct Dihedral {
  long a;
  int b;
};

Dihedral word_element(char first, std::size_t length) {
  const long j = static_cast<long>(length / 2);
  if (first == 's') return length % 2 ? Dihedral{j, 1} : Dihedral{j, 0};
  return length % 2 ? Dihedral{-j - 1, 1} : Dihedral{-j, 0};
}

std::size_t local_index(std::size_t k, char first, std::size_t length) {
  if (length == 0) return 0;
  if (length == k) return 2 * k - 1;
  return 1 + 2 * (length - 1) + (first == 'u' ? 1 : 0);
}

struct AkeModel {
  std::size_t k;
  int e;
  // lookup[comp][b][a] = (local index, sign) of r^a s^b in component comp
  std::vector<std::pair<std::size_t, int>> lookup[2][2];

  AkeModel(std::size_t k_, int e_) : k(k_), e(e_) {
    const long m = static_cast<long>(2 * k);
    for (int comp = 0; comp < 2; ++comp) {
      const int c = comp == 0 ? 1 : e;
      for (int b = 0; b < 2; ++b) lookup[comp][b].assign(2 * k, {0, 0});
      auto set = [&](Dihedral x, std::size_t idx, int sign) {
        auto& slot = lookup[comp][x.b][((x.a % m) + m) % m];
        if (slot.second != 0) throw std::logic_error("dihedral word model is not a bijection");
        slot = {idx, sign};
      };
      for (std::size_t len = 0; len <= k; ++len)
        for (char first : {'s', 'u'}) {
          if ((len == 0 || len == k) && first == 'u') continue;
          Dihedral x = word_element(first, len);
          const std::size_t idx = local_index(k, first, len);
          set(x, idx, 1);
          set(Dihedral{x.a + static_cast<long>(k), x.b}, idx, c);
        }
    }
  }

  std::pair<std::size_t, int> find(int comp, Dihedral x) const {
    const long m = static_cast<long>(2 * k);
    return lookup[comp][x.b][((x.a % m) + m) % m];
  }

  static Dihedral product(Dihedral x, Dihedral y) { return Dihedral{x.a + (x.b ? -y.a : y.a), x.b ^ y.b}; }
};

/// Letters of the alternating word of given first letter and length.
std::string letters(char first, std::size_t length) {
  std::string w;
  char c = first;
  for (std::size_t t = 0; t < length; ++t) {
    w += c;
    c = c == 's' ? 'u' : 's';
  }
  return w;
}

}  // namespace

std::pair<std::size_t, int> AkeData::word(int component, char first, std::size_t length) const {
  if (length > k || (first != 's' && first != 'u') || (component != 0 && component != 1))
    throw IndexOutOfRange("no such alternating word");
  AkeModel model(k, e);
  auto [idx, sign] = model.find(component, word_element(first, length));
  return {static_cast<std::size_t>(component) * 2 * k + idx, sign};
}

AkeData ake(const Context& ctx, std::size_t k, int e) {
  if (k < 1) throw DimensionMismatch("A(k, e) needs k ≥ 1");
  if (e != 1 && e != -1) throw FormatError("sign e must be +1 or -1");
  const AkeModel model(k, e);
  const std::size_t half = 2 * k, d = 4 * k;

  // basis words by global index
  std::vector<int> comp_of(d);
  std::vector<char> first_of(d);
  std::vector<std::size_t> len_of(d);
  std::vector<std::string> labels(d);
  for (int comp = 0; comp < 2; ++comp)
    for (std::size_t len = 0; len <= k; ++len)
      for (char first : {'s', 'u'}) {
        if ((len == 0 || len == k) && first == 'u') continue;
        const std::size_t i = comp * half + local_index(k, first, len);
        comp_of[i] = comp;
        first_of[i] = first;
        len_of[i] = len;
        if (len == 0) {
          labels[i] = comp == 0 ? "v11^2" : "v12^2";
        } else {
          for (char c : letters(first, len))
            labels[i] += comp == 0 ? (c == 's' ? "v11" : "v22") : (c == 's' ? "v12" : "v21");
        }
      }

  StructureTensor mult(ctx, d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (comp_of[i] != comp_of[j]) continue;
      Dihedral z = AkeModel::product(word_element(first_of[i], len_of[i]), word_element(first_of[j], len_of[j]));
      auto [idx, sign] = model.find(comp_of[i], z);
      mult.add(i, j, comp_of[i] * half + idx, Cyclotomic(ctx, static_cast<long>(sign)));
    }
  Vec unit = add(unit_vec(ctx, d, 0), unit_vec(ctx, d, half));
  AlgebraData alg(ctx, d, labels, std::move(mult), unit);

  auto word_vec = [&](int comp, char first, std::size_t len) {
    auto [idx, sign] = model.find(comp, word_element(first, len));
    return scale(Cyclotomic(ctx, static_cast<long>(sign)), unit_vec(ctx, d, comp * half + idx));
  };
  // generator v_ij for letter c in component comp
  const Vec v11 = word_vec(0, 's', 1), v22 = word_vec(0, 'u', 1), v12 = word_vec(1, 's', 1),
            v21 = word_vec(1, 'u', 1);
  auto gen = [&](int comp, char c) -> const Vec& {
    return comp == 0 ? (c == 's' ? v11 : v22) : (c == 's' ? v12 : v21);
  };
  // Δ(v_ij) = Σ_m v_im ⊗ v_mj; S(v_ij) = v_ji
  const Vec d11 = add(outer(v11, v11), outer(v12, v21)), d12 = add(outer(v11, v12), outer(v12, v22)),
            d21 = add(outer(v21, v11), outer(v22, v21)), d22 = add(outer(v21, v12), outer(v22, v22));
  auto gen_delta = [&](int comp, char c) -> const Vec& {
    return comp == 0 ? (c == 's' ? d11 : d22) : (c == 's' ? d12 : d21);
  };
  auto gen_antipode = [&](int comp, char c) -> const Vec& {
    return comp == 0 ? gen(0, c) : gen(1, c == 's' ? 'u' : 's');
  };

  StructureTensor comult(ctx, d, d, d);
  Matrix antipode(ctx, d, d);
  Vec counit = zero_vec(ctx, d);
  for (std::size_t i = 0; i < d; ++i) {
    const int comp = comp_of[i];
    // the empty word of a component is the square of its s-generator
    const std::string w = len_of[i] == 0 ? std::string("ss") : letters(first_of[i], len_of[i]);
    Vec delta = outer(unit, unit), s = unit;
    for (char c : w) {
      delta = tensor_multiply(alg, alg, delta, gen_delta(comp, c));
      s = multiply(alg, gen_antipode(comp, c), s);
    }
    comult.set_slice(i, delta);
    for (std::size_t r = 0; r < d; ++r) antipode(r, i) = s[r];
    if (comp == 0) counit[i] = Cyclotomic::one(ctx);
  }

  AkeData out;
  out.hopf = std::make_shared<const HopfAlgebraData>(std::move(alg), std::move(comult), std::move(counit),
                                                     std::move(antipode));
  out.k = k;
  out.e = e;
  out.v11 = v11;
  out.v12 = v12;
  out.v21 = v21;
  out.v22 = v22;

  std::optional<Cyclotomic> c;
  if (e == 1) {
    c = Cyclotomic::one(ctx);
  } else if (ctx->conductor() % 4 == 0) {
    c = Cyclotomic::zeta(ctx, static_cast<long>(ctx->conductor() / 4));
  }
  const Vec one = out.hopf->one();
  const Vec dd = sub(unit_vec(ctx, d, 0), unit_vec(ctx, d, half));
  std::vector<Vec> candidates{one, dd};
  if (c) {
    const Vec ds = word_vec(0, 's', k), as = word_vec(1, 's', k);
    candidates.push_back(add(ds, scale(*c, as)));
    candidates.push_back(sub(ds, scale(*c, as)));
  }
  out.grouplikes = verify_grouplikes(*out.hopf, candidates);
  out.grouplikes.complete = c.has_value();

  for (std::size_t j = 1; j < k; ++j) {
    Comodule cm;
    cm.host = out.hopf;
    cm.dim = 2;
    cm.u = {{word_vec(0, 's', j), word_vec(1, 's', j)}, {word_vec(1, 'u', j), word_vec(0, 'u', j)}};
    out.comodules.push_back(std::move(cm));
  }
  return out;
}

Representation pi_q(const AkeData& a, const Cyclotomic& q) {
  const HopfAlgebraData& h = *a.hopf;
  const Context& ctx = h.ctx();
  if (q.is_zero()) throw OrderMismatch("q must be nonzero");
  const std::size_t d = h.dim(), half = 2 * a.k;
  AlgebraData m2 = matrix_algebra(ctx, 2);
  auto mat = [&](Cyclotomic a11, Cyclotomic a12, Cyclotomic a21, Cyclotomic a22) {
    return Vec{std::move(a11), std::move(a12), std::move(a21), std::move(a22)};
  };
  const Cyclotomic zero(ctx), one = Cyclotomic::one(ctx);
  const Vec p = mat(zero, q.inverse(), q, zero), qm = mat(zero, one, one, zero);
  Matrix pi(ctx, 4, d);
  for (std::size_t len = 0; len <= a.k; ++len)
    for (char first : {'s', 'u'}) {
      if ((len == 0 || len == a.k) && first == 'u') continue;
      Vec img = m2.unit;
      for (char c : letters(first, len)) img = multiply(m2, img, c == 's' ? p : qm);
      const std::size_t col = half + local_index(a.k, first, len);
      for (std::size_t r = 0; r < 4; ++r) pi(r, col) = img[r];
    }
  Vec ws = m2.unit, wu = m2.unit;
  for (char c : letters('s', a.k)) ws = multiply(m2, ws, c == 's' ? p : qm);
  for (char c : letters('u', a.k)) wu = multiply(m2, wu, c == 's' ? p : qm);
  if (ws != scale(Cyclotomic(ctx, static_cast<long>(a.e)), wu))
    throw OrderMismatch("q does not satisfy the length-" + std::to_string(a.k) + " relation with sign " +
                        std::to_string(a.e));
  Representation r{h, std::move(m2), std::move(pi)};
  if (!validate_rep(r).ok()) throw OrderMismatch("π_q is not an algebra map on A(k, e)");
  return r;
}

Representation cyclic_rep(const Context& ctx, std::size_t n, const Cyclotomic& w) {
  if (n == 0 || !w.pow(static_cast<long>(n)).is_one())
    throw NotAnNthRoot(w.str() + " is not an " + std::to_string(n) + "-th root of unity");
  BuiltHopf g = group_algebra(ctx, cyclic_group_table(n));
  Matrix m(ctx, 1, n);
  for (std::size_t i = 0; i < n; ++i) m(0, i) = w.pow(static_cast<long>(i));
  return Representation{std::move(g.hopf), product_algebra(ctx, 1), std::move(m)};
}

// ---------------------------------------------------------------------------------------------
// The dihedral group of order 8

HopfMorphism dihedral_abelianization(const Context& ctx) {
  BuiltHopf d4 = group_algebra(ctx, dihedral_group_table(4));
  BuiltHopf klein = group_algebra(ctx, direct_product_table(cyclic_group_table(2), cyclic_group_table(2)));
  Matrix m(ctx, 4, 8);
  for (std::size_t x = 0; x < 8; ++x) m(2 * ((x % 4) % 2) + x / 4, x) = Cyclotomic::one(ctx);
  return HopfMorphism{std::move(d4.hopf), std::move(klein.hopf), std::move(m)};
}

Vec dihedral_klein_twist(const HopfAlgebraData& kd4) {
  const Context& ctx = kd4.ctx();
  if (kd4.dim() != 8) throw DimensionMismatch("expected k[D_4]");
  const std::size_t element[2][2] = {{0, 4}, {2, 6}};  // α^x β^y with α = r², β = s
  const Cyclotomic quarter(ctx, Rational(1, 4));
  std::vector<Vec> idem;  // e_(p,q) at index 2p + q
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      Vec v = zero_vec(ctx, 8);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          v[element[x][y]] += ((p * x + q * y) % 2 ? -quarter : quarter);
      idem.push_back(std::move(v));
    }
  Vec omega = zero_vec(ctx, 64);
  for (int chi = 0; chi < 4; ++chi)
    for (int psi = 0; psi < 4; ++psi) {
      const int sign = ((chi % 2) * (psi / 2)) % 2 ? -1 : 1;
      axpy(Cyclotomic(ctx, static_cast<long>(sign)), outer(idem[chi], idem[psi]), omega);
    }
  return omega;
}

Matrix klein_bicharacter(const Context& ctx) {
  Matrix s(ctx, 4, 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) s(x, y) = Cyclotomic(ctx, ((x % 2) * (y / 2)) % 2 ? -1L : 1L);
  return s;
}

}  // namespace hopfimg
