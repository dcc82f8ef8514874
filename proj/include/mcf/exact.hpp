// Copyright 2026 The mcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// elements of a single real quadratic field Q(sqrt d), and rational
// enclosures used whenever values from different fields must be ordered.

#ifndef MCF_EXACT_HPP_
#define MCF_EXACT_HPP_

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace mcf {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Canonical num/den; throws kInvalidSurd on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_of(const BigRational& x);
BigInt ceil_of(const BigRational& x);
BigRational pow10(int exponent);
BigRational pow2(int exponent);

// The value (p + q*sqrt(d)) / r.
//
// Canonical form: r > 0, gcd(p, q, r) = 1, d square-free and >= 2 whenever
// q != 0. A value with q = 0 is rational and is always stored with d = 1, so
// `is_rational()` reflects the algebraic degree and two canonical values are
// equal exactly when their fields are equal.
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), q_(0), d_(1), r_(1) {}
  QuadraticSurd(long value) : p_(value), q_(0), d_(1), r_(1) {}  // NOLINT
  QuadraticSurd(const BigInt& value) : p_(value), q_(0), d_(1), r_(1) {}  // NOLINT
  QuadraticSurd(const BigRational& value);  // NOLINT

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& d() const { return d_; }
  const BigInt& r() const { return r_; }

  // Square-free radicand; 1 for rationals.
  const BigInt& field() const { return d_; }
  bool is_rational() const { return q_ == 0; }
  std::optional<BigRational> as_rational() const;
  BigRational rational_part() const { return make_rational(p_, r_); }
  BigRational surd_part() const { return make_rational(q_, r_); }

  int sign() const;
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  QuadraticSurd conjugate() const;
  QuadraticSurd reciprocal() const;
  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  // "(p+q*sqrtd)/r" for surds, "p/r" or "p" for rationals.
  std::string to_string() const;

  friend QuadraticSurd operator-(const QuadraticSurd& a);
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);
  QuadraticSurd& operator+=(const QuadraticSurd& b) { return *this = *this + b; }
  QuadraticSurd& operator-=(const QuadraticSurd& b) { return *this = *this - b; }
  QuadraticSurd& operator*=(const QuadraticSurd& b) { return *this = *this * b; }
  QuadraticSurd& operator/=(const QuadraticSurd& b) { return *this = *this / b; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
  }
  // Exact; throws kCrossField for irrationals from different fields.
  friend std::strong_ordering operator<=>(const QuadraticSurd& a,
                                          const QuadraticSurd& b);

 private:
  friend QuadraticSurd surd_make(BigInt p, BigInt q, BigInt d, BigInt r);
  // d must already be square-free (or 1 when q = 0).
  static QuadraticSurd normalized(BigInt p, BigInt q, BigInt d, BigInt r);

  BigInt p_, q_, d_, r_;
};

// Builds the canonical form of (p + q*sqrt(d)) / r. Square factors of d move
// into q; a perfect-square d collapses the value to a rational.
// Throws kInvalidSurd when d <= 0 or r == 0.
QuadraticSurd surd_make(BigInt p, BigInt q, BigInt d, BigInt r);

// Throws kCrossField when a and b are irrationals of different fields.
std::strong_ordering surd_compare(const QuadraticSurd& a, const QuadraticSurd& b);

BigInt surd_floor(const QuadraticSurd& a);

// Whether a and b can be combined exactly.
bool same_field(const QuadraticSurd& a, const QuadraticSurd& b);

// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  RationalInterval() = default;
  RationalInterval(BigRational lo_, BigRational hi_);
  static RationalInterval point(const BigRational& x) { return {x, x}; }

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  bool contains(const QuadraticSurd& x) const;
  bool contains(const RationalInterval& inner) const {
    return lo <= inner.lo && inner.hi <= hi;
  }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool strictly_below(const RationalInterval& other) const { return hi < other.lo; }
  RationalInterval reciprocal() const;

  friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }
  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  // Throws kDomain when b contains zero.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

RationalInterval hull(const RationalInterval& a, const RationalInterval& b);

// An interval containing `a` of width at most `width` (> 0). Rational inputs
// give the degenerate interval. Halving the width yields a nested interval.
RationalInterval approximate(const QuadraticSurd& a, const BigRational& width);
RationalInterval approximate_bits(const QuadraticSurd& a, unsigned bits);

// Orders values from arbitrary fields. Same-field pairs are compared exactly;
// otherwise enclosures are refined from `start_bits`, doubling up to
// `cap_bits`, until they separate. Throws kUndecided at the cap.
std::strong_ordering compare_certified(const QuadraticSurd& a, const QuadraticSurd& b,
                                       unsigned start_bits, unsigned cap_bits);

// Correctly rounded (half away from zero) fixed-point rendering.
std::string to_fixed(const QuadraticSurd& x, int digits);
// Correctly rounded rendering like "4.4721359549995794e-01".
std::string to_scientific(const QuadraticSurd& x, int significant);
double to_double(const QuadraticSurd& x);

// Number literals: "rat:NUM/DEN", "rat:NUM", "surd:(P+Q*sqrtD)/R".
// Throws kParse on malformed text and kInvalidSurd on bad fields.
QuadraticSurd parse_number_literal(std::string_view text);
std::string format_number_literal(const QuadraticSurd& x);

}  // namespace mcf

#endif  // MCF_EXACT_HPP_
