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
 * @file field.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(ζ_N).
 *
 * Elements are stored as coefficient vectors of length φ(N) in the power basis 1, ζ, …, ζ^{φ(N)-1},
 * reduced modulo the N-th cyclotomic polynomial Φ_N. Rationals are GMP rationals, so no coefficient
 * growth is ever truncated. One conductor is fixed per computation; a root of unity ζ_n with n | N
 * is addressed as ζ_N^{N/n}.
 *
 * Scalar grammar (shared by every file format and all CLI output):
 *
 * @code
 *   scalar := ['+'|'-'] term (('+'|'-') term)*
 *   term   := rational ['*' 'z' ['^' k]] | 'z' ['^' k]
 * @endcode
 *
 * Canonical output lists terms in increasing power of z with reduced rationals and no zero terms,
 * e.g. `3 - 1/2*z^2`; zero prints as `0`.
 */

#ifndef HOPFIMG_FIELD_HPP
#define HOPFIMG_FIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfimg/errors.hpp"

namespace hopfimg {

using Rational = mpq_class;

/// Dense polynomial over Q, lowest degree first.
using RationalPoly = std::vector<Rational>;

/// The N-th cyclotomic polynomial Φ_N, computed by exact division of x^N - 1 by Φ_d for d | N, d < N.
RationalPoly cyclotomic_polynomial(unsigned n);

/// Euclidean division a = q·b + r over Q; b must be nonzero.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b);

/// Fixed conductor N together with its modulus Φ_N.
class CyclotomicContext {
 public:
  explicit CyclotomicContext(unsigned conductor);

  unsigned conductor() const noexcept { return conductor_; }
  /// φ(N), the number of coefficients of every element.
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  /// Monic Φ_N, lowest degree first (length φ(N)+1).
  const RationalPoly& modulus() const noexcept { return modulus_; }
  /// Reduced coefficients of ζ^j; j is taken modulo N.
  const std::vector<Rational>& zeta_power(long j) const;

 private:
  unsigned conductor_;
  RationalPoly modulus_;
  std::vector<std::vector<Rational>> zeta_powers_;
};

using Context = std::shared_ptr<const CyclotomicContext>;

Context make_context(unsigned conductor);

/// Two contexts are interchangeable iff they have the same conductor.
bool same_field(const Context& a, const Context& b) noexcept;

/// An element of Q(ζ_N) in unique reduced form.
class Cyclotomic {
 public:
  /// Zero of the given field.
  explicit Cyclotomic(Context ctx);
  Cyclotomic(Context ctx, long value);
  Cyclotomic(Context ctx, Rational value);
  /// Takes ownership of an arbitrary-length coefficient list and reduces it modulo Φ_N.
  Cyclotomic(Context ctx, std::vector<Rational> coefficients);

  static Cyclotomic zero(const Context& ctx) { return Cyclotomic(ctx); }
  static Cyclotomic one(const Context& ctx) { return Cyclotomic(ctx, 1L); }
  /// ζ_N^j.
  static Cyclotomic zeta(const Context& ctx, long j = 1);

  const Context& context() const noexcept { return ctx_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in Q.
  bool is_rational() const noexcept;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);
  Cyclotomic operator-() const;

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]/Φ_N.
  Cyclotomic inverse() const;
  /// Integer power; negative exponents invert first.
  Cyclotomic pow(long exponent) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Canonical text form in the scalar grammar.
  std::string str() const;

 private:
  void reduce();
  void check_same(const Cyclotomic& other) const;

  Context ctx_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

/// Multiplicative order of `a`, searched up to 2N; empty when `a` is not a root of unity.
std::optional<unsigned> root_of_unity_order(const Cyclotomic& a);

/// Parses the scalar grammar. Powers of z are reduced modulo N.
Cyclotomic parse_scalar(std::string_view text, const Context& ctx);

inline std::string format_scalar(const Cyclotomic& a) { return a.str(); }

}  // namespace hopfimg

#endif  // HOPFIMG_FIELD_HPP
