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

#include "mcf/exact.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <string>
#include <utility>

#include "mcf/error.hpp"

namespace mcf {
namespace {

int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

BigInt isqrt(const BigInt& x) {
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// d = square * core with core square-free. Trial division by every f below
// 2^20; a leftover cofactor m has only prime factors above that bound, so
// below 2^60 it is 1, a prime, a product of two distinct primes or a square.
// Larger cofactors are accepted only when probably prime.
std::pair<BigInt, BigInt> split_square(BigInt d) {
  constexpr unsigned long kTrialBound = 1UL << 20;
  BigInt root = 1;
  BigInt core = 1;
  for (unsigned long f = 2; f < kTrialBound; f += (f == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(d.get_mpz_t(), f * f) < 0) break;
    if (!mpz_divisible_ui_p(d.get_mpz_t(), f)) continue;
    int multiplicity = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), f)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), f);
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) root *= f;
    if (multiplicity % 2 == 1) core *= f;
  }
  if (d > 1 && mpz_perfect_square_p(d.get_mpz_t())) {
    root *= isqrt(d);
    return {root, core};
  }
  BigInt limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), 60);
  if (d >= limit && mpz_probab_prime_p(d.get_mpz_t(), 40) == 0) {
    fail(ErrorKind::kInvalidSurd,
         "cannot certify the square-free part of a radicand with cofactor " + d.get_str());
  }
  core *= d;
  return {root, core};
}

BigInt round_half_away(const BigRational& v) {
  if (v >= 0) return floor_of(v + BigRational(1, 2));
  return -floor_of(-v + BigRational(1, 2));
}

// round(x * scale) for a surd x; refinement terminates because x * scale + 1/2
// is never an integer for irrational x.
BigInt round_scaled(const QuadraticSurd& x, const BigRational& scale) {
  if (auto r = x.as_rational()) return round_half_away(*r * scale);
  BigRational width = 1 / (scale * pow2(16));
  for (;;) {
    RationalInterval enclosure = approximate(x, width);
    BigInt lo = round_half_away(enclosure.lo * scale);
    BigInt hi = round_half_away(enclosure.hi * scale);
    if (lo == hi) return lo;
    width /= pow2(32);
  }
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::kInvalidSurd, "zero denominator");
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

BigInt floor_of(const BigRational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const BigRational& x) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

BigRational pow10(int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? BigRational(p) : make_rational(1, p);
}

BigRational pow2(int exponent) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(std::abs(exponent)));
  return exponent >= 0 ? BigRational(p) : make_rational(1, p);
}

// --- QuadraticSurd ---------------------------------------------------------

QuadraticSurd::QuadraticSurd(const BigRational& value)
    : p_(value.get_num()), q_(0), d_(1), r_(value.get_den()) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    r_ /= g;
  }
  if (r_ < 0) {
    p_ = -p_;
    r_ = -r_;
  }
}

QuadraticSurd QuadraticSurd::normalized(BigInt p, BigInt q, BigInt d, BigInt r) {
  QuadraticSurd out;
  if (q == 0) d = 1;
  if (p == 0 && q == 0) return out;
  BigInt g = gcd3(p, q, r);
  if (g != 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  out.p_ = std::move(p);
  out.q_ = std::move(q);
  out.d_ = std::move(d);
  out.r_ = std::move(r);
  return out;
}

QuadraticSurd surd_make(BigInt p, BigInt q, BigInt d, BigInt r) {
  if (r == 0) fail(ErrorKind::kInvalidSurd, "r must be nonzero");
  if (d <= 0) fail(ErrorKind::kInvalidSurd, "d must be positive");
  auto [root, core] = split_square(std::move(d));
  q *= root;
  if (core == 1) {
    // Perfect square radicand: the value is rational.
    return QuadraticSurd::normalized(p + q, 0, 1, std::move(r));
  }
  return QuadraticSurd::normalized(std::move(p), std::move(q), std::move(core), std::move(r));
}

std::optional<BigRational> QuadraticSurd::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return rational_part();
}

int QuadraticSurd::sign() const {
  int sp = sign_of(p_);
  int sq = sign_of(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and q^2 d wins; they never tie.
  return cmp(p_ * p_, q_ * q_ * d_) > 0 ? sp : sq;
}

QuadraticSurd QuadraticSurd::conjugate() const { return normalized(p_, -q_, d_, r_); }

QuadraticSurd QuadraticSurd::reciprocal() const {
  if (is_zero()) fail(ErrorKind::kDomain, "reciprocal of zero");
  BigInt norm = p_ * p_ - q_ * q_ * d_;
  return normalized(r_ * p_, -r_ * q_, d_, std::move(norm));
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) {
    if (r_ == 1) return p_.get_str();
    return p_.get_str() + "/" + r_.get_str();
  }
  std::string out = "(" + p_.get_str();
  out += q_ < 0 ? "-" : "+";
  BigInt abs_q = q_ < 0 ? BigInt(-q_) : q_;
  out += abs_q.get_str() + "*sqrt" + d_.get_str() + ")/" + r_.get_str();
  return out;
}

bool same_field(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a.is_rational() || b.is_rational() || a.field() == b.field();
}

namespace {

const BigInt& common_field(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.field();
  if (b.is_rational() || a.field() == b.field()) return a.field();
  fail(ErrorKind::kCrossField, "operands in Q(sqrt" + a.field().get_str() + ") and Q(sqrt" +
                                   b.field().get_str() + ")");
}

}  // namespace

QuadraticSurd operator-(const QuadraticSurd& a) {
  return QuadraticSurd::normalized(-a.p_, -a.q_, a.d_, a.r_);
}

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const BigInt& d = common_field(a, b);
  if (a.r_ == b.r_) return QuadraticSurd::normalized(a.p_ + b.p_, a.q_ + b.q_, d, a.r_);
  return QuadraticSurd::normalized(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d,
                                   a.r_ * b.r_);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const BigInt& d = common_field(a, b);
  return QuadraticSurd::normalized(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d,
                                   a.r_ * b.r_);
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  common_field(a, b);
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering surd_compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a <=> b;
}

BigInt surd_floor(const QuadraticSurd& a) {
  BigInt out;
  if (a.is_rational()) {
    mpz_fdiv_q(out.get_mpz_t(), a.p().get_mpz_t(), a.r().get_mpz_t());
    return out;
  }
  // |q| sqrt(d) lies strictly between s and s + 1.
  BigInt s = isqrt(a.q() * a.q() * a.d());
  BigInt n = a.p() + (a.q() > 0 ? s : BigInt(-s - 1));
  mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), a.r().get_mpz_t());
  return out;
}

// --- RationalInterval ------------------------------------------------------

RationalInterval::RationalInterval(BigRational lo_, BigRational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) std::swap(lo, hi);
}

bool RationalInterval::contains(const QuadraticSurd& x) const {
  return QuadraticSurd(lo) <= x && x <= QuadraticSurd(hi);
}

RationalInterval RationalInterval::reciprocal() const {
  if (contains_zero()) fail(ErrorKind::kDomain, "reciprocal of an interval containing zero");
  return {1 / hi, 1 / lo};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  BigRational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return {*mn, *mx};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  return a * b.reciprocal();
}

RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RationalInterval approximate(const QuadraticSurd& a, const BigRational& width) {
  if (a.is_rational()) return RationalInterval::point(a.rational_part());
  if (width <= 0) fail(ErrorKind::kDomain, "approximation width must be positive");
  // sqrt(d) lies in [s, s + 1] / 2^k with s = isqrt(d * 4^k); choose k so the
  // induced width |q| / (r 2^k) is at most `width`.
  BigInt abs_q = abs(a.q());
  BigInt ratio = ceil_of(BigRational(abs_q) / (BigRational(a.r()) * width));
  unsigned long k = 0;
  if (ratio > 1) {
    BigInt m1 = ratio - 1;
    k = mpz_sizeinbase(m1.get_mpz_t(), 2);
  }
  BigInt scaled = a.d();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  BigInt s = isqrt(scaled);
  BigRational unit = pow2(-static_cast<int>(k));
  BigRational root_lo = BigRational(s) * unit;
  BigRational root_hi = BigRational(s + 1) * unit;
  BigRational p(a.p()), q(a.q()), r(a.r());
  BigRational x = (p + q * root_lo) / r;
  BigRational y = (p + q * root_hi) / r;
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

RationalInterval approximate_bits(const QuadraticSurd& a, unsigned bits) {
  return approximate(a, pow2(-static_cast<int>(bits)));
}

std::strong_ordering compare_certified(const QuadraticSurd& a, const QuadraticSurd& b,
                                       unsigned start_bits, unsigned cap_bits) {
  if (same_field(a, b)) return a <=> b;
  unsigned bits = std::max(start_bits, 8U);
  for (;;) {
    RationalInterval ia = approximate_bits(a, bits);
    RationalInterval ib = approximate_bits(b, bits);
    if (ia.hi < ib.lo) return std::strong_ordering::less;
    if (ib.hi < ia.lo) return std::strong_ordering::greater;
    if (bits >= cap_bits) {
      fail(ErrorKind::kUndecided, "values " + a.to_string() + " and " + b.to_string() +
                                      " not separated at " + std::to_string(cap_bits) + " bits");
    }
    bits = std::min(cap_bits, bits * 2);
  }
}

// --- Rendering -------------------------------------------------------------

std::string to_fixed(const QuadraticSurd& x, int digits) {
  BigInt n = round_scaled(x, pow10(digits));
  bool negative = n < 0;
  std::string body = BigInt(abs(n)).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

std::string to_scientific(const QuadraticSurd& x, int significant) {
  if (x.is_zero()) return "0";
  QuadraticSurd a = x.abs();
  double approx = to_double(a);
  int e = static_cast<int>(std::floor(std::log10(approx)));
  while (a < QuadraticSurd(pow10(e))) --e;
  while (a >= QuadraticSurd(pow10(e + 1))) ++e;
  BigInt n = round_scaled(a, pow10(significant - 1 - e));
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant));
  if (n >= limit) {
    n /= 10;
    ++e;
  }
  std::string digits = n.get_str();
  std::string out = x.sign() < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += e < 0 ? "e-" : "e+";
  std::string exponent = std::to_string(std::abs(e));
  if (exponent.size() < 2) exponent.insert(0, "0");
  return out + exponent;
}

double to_double(const QuadraticSurd& x) {
  if (auto r = x.as_rational()) return r->get_d();
  BigRational width = 1;
  for (;;) {
    RationalInterval enclosure = approximate(x, width);
    if (!enclosure.contains_zero()) {
      BigRational magnitude = std::min(abs(enclosure.lo), abs(enclosure.hi));
      if (width <= magnitude * pow2(-64)) return enclosure.midpoint().get_d();
    }
    width *= pow2(-64);
  }
}

// --- Literals --------------------------------------------------------------

QuadraticSurd parse_number_literal(std::string_view text) {
  static const std::regex kRational(R"(^rat:\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$)");
  static const std::regex kSurd(
      R"(^surd:\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\s*(\d+)\s*\)\s*(?:/\s*([+-]?\d+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kRational)) {
    BigInt num(m[1].str());
    BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
    return QuadraticSurd(make_rational(num, den));
  }
  if (std::regex_match(s, m, kSurd)) {
    BigInt p(m[1].str());
    BigInt q(m[3].str());
    if (m[2].str() == "-") q = -q;
    BigInt d(m[4].str());
    BigInt r = m[5].matched ? BigInt(m[5].str()) : BigInt(1);
    return surd_make(p, q, d, r);
  }
  fail(ErrorKind::kParse, "malformed number literal '" + s +
                              "' (expected rat:NUM/DEN or surd:(P+Q*sqrtD)/R)");
}

std::string format_number_literal(const QuadraticSurd& x) {
  if (x.is_rational()) return "rat:" + x.p().get_str() + "/" + x.r().get_str();
  return "surd:" + x.to_string();
}

}  // namespace mcf
