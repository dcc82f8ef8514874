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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mcf/error.hpp"
#include "mcf/legendre.hpp"
#include "mcf/minkowski.hpp"
#include "mcf/oscillation.hpp"
#include "oracles.hpp"

using namespace mcf;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an mcf::Error");
  return ErrorKind::kConfig;
}

const QuadraticSurd kGolden = surd_make(1, 1, 5, 2);
const QuadraticSurd kSqrt2 = surd_make(0, 1, 2, 1);
const QuadraticSurd kSqrt3Half = surd_make(1, 1, 3, 2);

// Sign changes of mu_alpha - mu_beta over the integers in [lo, hi], with the
// chain taken as every Q satisfying ||Q alpha|| < 1/(2Q) and mu interpolated
// in long double.
struct BruteMu {
  std::vector<long> q;
  std::vector<long double> err;

  BruteMu(const QuadraticSurd& alpha, long limit) {
    for (long x = 1; x <= limit; ++x) {
      QuadraticSurd e = oracle::nearest_distance(QuadraticSurd(x) * alpha);
      if (e * QuadraticSurd(2 * x) < QuadraticSurd(1L)) {
        q.push_back(x);
        err.push_back(to_double(e));
      }
    }
  }

  long double operator()(long t) const {
    std::size_t i = 0;
    while (i + 1 < q.size() && q[i + 1] <= t) ++i;
    if (q[i] == t) return err[i];
    long double w = static_cast<long double>(t - q[i]) / (q[i + 1] - q[i]);
    return err[i] * (1 - w) + err[i + 1] * w;
  }
};

int brute_sign_changes(const QuadraticSurd& a, const QuadraticSurd& b, long lo, long hi) {
  BruteMu ma(a, 3 * hi), mb(b, 3 * hi);
  int changes = 0, prev = 0;
  for (long t = lo; t <= hi; ++t) {
    long double d = ma(t) - mb(t);
    int s = d < 0 ? -1 : d > 0 ? 1 : 0;
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("dominance hypothesis on the worked pairs") {
  CHECK(dominance_hypothesis(kSqrt2, kGolden));
  CHECK(dominance_hypothesis(kSqrt3Half, kGolden));
  CHECK_FALSE(dominance_hypothesis(kGolden, kSqrt2));
  CHECK(kind_of([] { dominance_hypothesis(QuadraticSurd(1L), kGolden); }) == ErrorKind::kNotDefined);
}

TEST_CASE("oscillation precondition") {
  CHECK(oscillation_precondition(kSqrt2, kSqrt3Half));
  CHECK_FALSE(oscillation_precondition(kGolden, kSqrt2));
  CHECK(kind_of([] { oscillation_precondition(kSqrt2, 2 * kSqrt2 + 1); }) == ErrorKind::kNotApplicable);
  CHECK(kind_of([] { oscillation_precondition(kGolden, kGolden); }) == ErrorKind::kNotApplicable);
}

TEST_CASE("sqrt 2 is eventually dominated by the golden ratio") {
  CrossingReport r = find_crossings(kSqrt2, kGolden, 10, 1000000);
  REQUIRE(r.predicted_sign.has_value());
  CHECK(*r.predicted_sign == -1);
  CHECK(r.final_sign == -1);
  REQUIRE(r.dominance_t0.has_value());
  CHECK(r.undecided.empty());
  for (const auto& s : r.samples) {
    if (s.t >= *r.dominance_t0) CHECK(*s.sign == -1);
  }
  CHECK_FALSE(r.precondition_holds.value());
}

TEST_CASE("sqrt 2 against (1 + sqrt 3)/2 keeps changing sign") {
  CrossingReport r = find_crossings(kSqrt2, kSqrt3Half, 10, 1000000);
  CHECK(r.crossings.size() >= 10);
  CHECK(r.precondition_holds.value());
  CHECK_FALSE(r.predicted_sign.has_value());
  CHECK_FALSE(r.dominance_t0.has_value());
  for (std::size_t i = 0; i < r.crossings.size(); ++i) {
    CHECK(r.crossings[i].lo < r.crossings[i].hi);
    CHECK(r.crossings[i].root_estimate >= r.crossings[i].lo.get_d());
    CHECK(r.crossings[i].root_estimate <= r.crossings[i].hi.get_d());
    if (i > 0) CHECK(r.crossings[i - 1].hi <= r.crossings[i].lo);
  }
}

TEST_CASE("crossing count matches an integer scan of the brute-force chains") {
  std::mt19937_64 rng(29);
  std::vector<std::pair<QuadraticSurd, QuadraticSurd>> pairs = {
      {kSqrt2, kSqrt3Half}, {kSqrt2, kGolden}, {kSqrt3Half, kGolden}};
  for (int k = 0; k < 6; ++k) {
    QuadraticSurd a = evaluate(oracle::random_word(rng, 1, 3, 4).expansion());
    QuadraticSurd b = evaluate(oracle::random_word(rng, 1, 3, 4).expansion());
    if (!same_field(a, b)) pairs.emplace_back(a, b);
  }
  for (const auto& [a, b] : pairs) {
    INFO(a.to_string() << " vs " << b.to_string());
    CrossingReport r = find_crossings(a, b, 10, 3000);
    CHECK(static_cast<int>(r.crossings.size()) == brute_sign_changes(a, b, 10, 3000));
  }
}

TEST_CASE("degenerate inputs") {
  CHECK(kind_of([] { find_crossings(kSqrt2, kSqrt2, 10, 100); }) == ErrorKind::kEqualInputs);
  CHECK(kind_of([] { find_crossings(kSqrt2, QuadraticSurd(2L), 10, 100); }) == ErrorKind::kNotDefined);
  CHECK(kind_of([] { find_crossings(kSqrt2, kGolden, 100, 10); }) == ErrorKind::kDomain);
  // Same field, different numbers: the scan runs, the precondition does not apply.
  CrossingReport r = find_crossings(kSqrt2, kSqrt2 / 3, 10, 10000);
  CHECK_FALSE(r.precondition_holds.has_value());
}

TEST_CASE("the difference is affine between merged breakpoints") {
  CrossingReport r = find_crossings(kSqrt2, kSqrt3Half, 10, 100000);
  ChainedTable ca = chain_covering(kSqrt2, 100000);
  ChainedTable cb = chain_covering(kSqrt3Half, 100000);
  for (std::size_t i = 0; i + 1 < r.samples.size(); ++i) {
    const BigRational& lo = r.samples[i].t;
    const BigRational& hi = r.samples[i + 1].t;
    BigRational mid = (lo + hi) / 2;
    // Each side is exactly affine; so is their difference.
    for (const ChainedTable* c : {&ca, &cb}) {
      QuadraticSurd a = mu_eval(c->chain, lo), b = mu_eval(c->chain, hi), m = mu_eval(c->chain, mid);
      CHECK(m * 2 == a + b);
    }
  }
}

TEST_CASE("dominance holds on [T, 4T] past the threshold") {
  for (const auto& alpha : {kSqrt2, kSqrt3Half}) {
    REQUIRE(dominance_hypothesis(alpha, kGolden));
    for (long t : {1000L, 100000L, 10000000L}) {
      CrossingReport r = find_crossings(alpha, kGolden, t, 4 * t);
      CHECK(r.crossings.empty());
      for (const auto& s : r.samples) CHECK(s.sign.value() == -1);
    }
  }
}

TEST_CASE("crossing counts grow with the window and have certified opposite ends") {
  std::size_t prev = 0;
  for (long hi : {1000L, 100000L, 10000000L}) {
    CrossingReport r = find_crossings(kSqrt2, kSqrt3Half, 10, hi);
    CHECK(r.crossings.size() >= prev);
    prev = r.crossings.size();
    for (const auto& c : r.crossings) {
      int lo_sign = 0, hi_sign = 0;
      for (const auto& s : r.samples) {
        if (s.t == c.lo) lo_sign = s.sign.value();
        if (s.t == c.hi) hi_sign = s.sign.value();
      }
      CHECK(lo_sign * hi_sign == -1);
    }
  }
}
