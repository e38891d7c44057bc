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

#include "hopfimg/field.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopfimg {

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly divisor = b;
  trim(divisor);
  if (divisor.empty()) throw DivisionByZero("polynomial division by zero");
  RationalPoly rem = a;
  trim(rem);
  if (rem.size() < divisor.size()) return {RationalPoly{}, rem};
  RationalPoly quot(rem.size() - divisor.size() + 1, Rational(0));
  const Rational& lead = divisor.back();
  while (rem.size() >= divisor.size()) {
    std::size_t shift = rem.size() - divisor.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < divisor.size(); ++i) rem[shift + i] -= c * divisor[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

RationalPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DimensionMismatch("conductor must be positive");
  RationalPoly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw Error("InternalError", "cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

CyclotomicContext::CyclotomicContext(unsigned conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  const std::size_t phi = degree();
  zeta_powers_.reserve(conductor_);
  RationalPoly power{Rational(1)};
  for (unsigned j = 0; j < conductor_; ++j) {
    auto [q, r] = poly_divmod(power, modulus_);
    r.resize(phi, Rational(0));
    zeta_powers_.push_back(r);
    power.insert(power.begin(), Rational(0));
  }
}

const std::vector<Rational>& CyclotomicContext::zeta_power(long j) const {
  long n = static_cast<long>(conductor_);
  long r = ((j % n) + n) % n;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

Context make_context(unsigned conductor) { return std::make_shared<const CyclotomicContext>(conductor); }

bool same_field(const Context& a, const Context& b) noexcept {
  return a == b || (a && b && a->conductor() == b->conductor());
}

Cyclotomic::Cyclotomic(Context ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), Rational(0)) {}

Cyclotomic::Cyclotomic(Context ctx, long value) : Cyclotomic(std::move(ctx)) { coeffs_[0] = value; }

Cyclotomic::Cyclotomic(Context ctx, Rational value) : Cyclotomic(std::move(ctx)) {
  value.canonicalize();
  coeffs_[0] = std::move(value);
}

Cyclotomic::Cyclotomic(Context ctx, std::vector<Rational> coefficients)
    : ctx_(std::move(ctx)), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

Cyclotomic Cyclotomic::zeta(const Context& ctx, long j) {
  return Cyclotomic(ctx, std::vector<Rational>(ctx->zeta_power(j)));
}

void Cyclotomic::reduce() {
  const RationalPoly& mod = ctx_->modulus();
  const std::size_t phi = ctx_->degree();
  // Φ_N is monic: eliminate from the top.
  for (std::size_t top = coeffs_.size(); top-- > phi;) {
    if (coeffs_[top] == 0) continue;
    Rational c = coeffs_[top];
    std::size_t shift = top - phi;
    for (std::size_t i = 0; i <= phi; ++i) coeffs_[shift + i] -= c * mod[i];
  }
  coeffs_.resize(phi, Rational(0));
}

void Cyclotomic::check_same(const Cyclotomic& other) const {
  if (!same_field(ctx_, other.ctx_))
    throw ContextMismatch("conductors " + std::to_string(ctx_->conductor()) + " and " +
                          std::to_string(other.ctx_->conductor()));
}

bool Cyclotomic::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  const std::size_t phi = a.coeffs_.size();
  if (phi == 1) {
    Cyclotomic out(a.ctx_);
    out.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return out;
  }
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic out(a.ctx_);
  out.coeffs_ = std::move(prod);
  out.reduce();
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) {
  check_same(other);
  return *this = *this * other.inverse();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return Cyclotomic(ctx_, Rational(1 / coeffs_[0]));
  // Extended Euclid: track s with s·a ≡ r (mod Φ_N).
  RationalPoly r0 = ctx_->modulus(), r1 = coeffs_;
  trim(r1);
  RationalPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    RationalPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Φ_N is irreducible.
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return Cyclotomic(ctx_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  Cyclotomic base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Cyclotomic result = one(ctx_);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::str() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return first ? std::string("0") : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

std::optional<unsigned> root_of_unity_order(const Cyclotomic& a) {
  if (a.is_zero()) return std::nullopt;
  const unsigned bound = 2 * a.context()->conductor();
  Cyclotomic power = a;
  for (unsigned n = 1; n <= bound; ++n) {
    if (power.is_one()) return n;
    power *= a;
  }
  return std::nullopt;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

  Cyclotomic parse() {
    std::vector<Rational> acc(std::max<std::size_t>(ctx_->conductor(), ctx_->degree()), Rational(0));
    skip_ws();
    if (at_end()) fail("empty scalar");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, power] = term();
      acc[power] += sign * coef;
      skip_ws();
      if (at_end()) break;
    }
    return Cyclotomic(ctx_, std::move(acc));
  }

 private:
  std::pair<Rational, std::size_t> term() {
    Rational coef(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      skip_ws();
      if (peek() != '*') return {coef, 0};
      get();
      skip_ws();
    }
    if (peek() != 'z') fail("expected 'z' or a number");
    get();
    skip_ws();
    unsigned long k = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      k = integer();
    }
    return {coef, static_cast<std::size_t>(k % ctx_->conductor())};
  }

  Rational rational() {
    mpz_class num(digits());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      std::size_t at = pos_;
      den = mpz_class(digits());
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  unsigned long integer() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 18) throw ParseError("exponent too large", at);
    return std::stoul(d);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  const Context& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text, const Context& ctx) { return ScalarParser(text, ctx).parse(); }

}  // namespace hopfimg
