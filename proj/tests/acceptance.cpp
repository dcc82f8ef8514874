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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcf/cf.hpp"
#include "mcf/error.hpp"
#include "mcf/exact.hpp"
#include "mcf/legendre.hpp"
#include "mcf/minkowski.hpp"
#include "mcf/oscillation.hpp"
#include "mcf/spectra.hpp"
#include "mcf/verify.hpp"
#include "oracles.hpp"

using namespace mcf;

namespace {

// Pinned tolerances.
constexpr int kDisplayDigits = 12;
constexpr double kSampleAbove = 1e-9;
constexpr double kSampleNear = 1e-6;
constexpr double kGeneratorSlack = 0.02;
constexpr int kSamplePoints = 1000;

const QuadraticSurd kGolden = surd_make(1, 1, 5, 2);
const QuadraticSurd kSqrt2 = surd_make(0, 1, 2, 1);
const QuadraticSurd kSqrt3Half = surd_make(1, 1, 3, 2);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < budget_s, "runtime " + std::to_string(s) + " s over budget");
  if (!o.pass) ++g_failed;
  std::printf("%s [%d] %s (%.2f s, budget %.0f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), s,
              budget_s, o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
  std::fflush(stdout);
}

std::string decimal(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

// Max of t * mu at k + 1 equally spaced points of a segment, in long double.
long double sampled_segment_max(const QuadraticSurd& ql, const QuadraticSurd& el, const QuadraticSurd& qr,
                                const QuadraticSurd& er) {
  const long double a = to_double(ql), b = to_double(qr), ea = to_double(el), eb = to_double(er);
  long double best = 0;
  for (int j = 0; j <= kSamplePoints; ++j) {
    long double t = a + (b - a) * j / kSamplePoints;
    long double mu = ea + (eb - ea) * (t - a) / (b - a);
    best = std::max(best, t * mu);
  }
  return best;
}

std::vector<QuadraticSurd> random_surds(std::uint64_t seed, int count, std::size_t max_period, long max_q) {
  std::mt19937_64 rng(seed);
  std::vector<QuadraticSurd> out;
  for (int k = 0; k < count; ++k) out.push_back(evaluate(oracle::random_word(rng, 3, max_period, max_q).expansion()));
  return out;
}

void golden_constants() {
  struct Case {
    const char* what;
    std::function<SpectrumValue()> value;
    QuadraticSurd expected;
    long double oracle;
  };
  const long double s5 = std::sqrt(5.0L), s2 = std::sqrt(2.0L), s3 = std::sqrt(3.0L);
  std::vector<Case> cases = {
      {"lambda(golden) = 1/sqrt5", [] { return lambda_of(kGolden); }, surd_make(0, 1, 5, 5), 1 / s5},
      {"d(golden) = 1/2 + 1/(2 sqrt5)", [] { return dirichlet_of(kGolden); }, surd_make(5, 1, 5, 10),
       0.5L + 1 / (2 * s5)},
      {"m(golden) = 1/4 + 1/(2 sqrt5)", [] { return m_of(kGolden); }, surd_make(5, 2, 5, 20),
       0.25L + 1 / (2 * s5)},
      {"m(sqrt2) = 1/4 + 1/(4 sqrt2)", [] { return m_of(kSqrt2); }, surd_make(2, 1, 2, 8), 0.25L + 1 / (4 * s2)},
      {"m((1+sqrt3)/2) = sqrt3/4", [] { return m_of(kSqrt3Half); }, surd_make(0, 1, 3, 4), s3 / 4},
  };
  criterion(1, "golden-value constants lambda, d, m exact and to 12 digits", 5, [&](Outcome& o) {
    for (const auto& c : cases) {
      auto t0 = std::chrono::steady_clock::now();
      SpectrumValue v = c.value();
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(s < 1.0, std::string(c.what) + " took " + std::to_string(s) + " s");
      o.require(v.exact.has_value() && *v.exact == c.expected,
                std::string(c.what) + ": exact value " + (v.exact ? v.exact->to_string() : "missing"));
      if (!v.exact) continue;
      o.require(to_fixed(*v.exact, kDisplayDigits) == decimal(c.oracle, kDisplayDigits),
                std::string(c.what) + ": decimal " + to_fixed(*v.exact, kDisplayDigits) + " vs " +
                    decimal(c.oracle, kDisplayDigits));
      if (o.pass) o.detail << (o.detail.str().empty() ? "" : ", ") << to_fixed(*v.exact, kDisplayDigits);
    }
  });
}

void m_equals_limit_peaks() {
  criterion(2, "m equals the largest limit segment peak on 20 random periodic words", 30, [](Outcome& o) {
    std::mt19937_64 rng(2026);
    long double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      oracle::RandomWord w = oracle::random_word(rng, 3, 4, 6);
      QuadraticSurd alpha = evaluate(w.expansion());
      SpectraReport rep = spectra_of(alpha);
      const QuadraticSurd m = *rep.m.exact;
      CFExpansion cf = expand(alpha);
      const std::size_t k = cf.period.size();
      const std::size_t horizon = std::max<std::size_t>(rep.horizon_used + 2 * k + 2, 104);
      ConvergentTable table(alpha, horizon);
      LegendreChain chain = build_chain(table, horizon);

      // Exact: closed-form limit peaks over one period of realized gaps.
      std::optional<QuadraticSurd> best;
      for (const auto& gap : chain.gaps) {
        if (gap.nu < rep.horizon_used || gap.nu >= rep.horizon_used + k) continue;
        QuadraticSurd v = limit_peak_closed_form(table, gap.kind, gap.nu);
        if (!best || v > *best) best = v;
      }
      o.require(best && *best == m, "closed-form limit peaks != m for " + format_cf_literal(w.expansion()));

      // Sampled: t * mu over the segments of the last period below node 100.
      const std::size_t last = std::min<std::size_t>(100, chain.size() - 1);
      long double sampled = 0;
      for (std::size_t i = last > 2 * k + 2 ? last - 2 * k - 2 : 0; i < last; ++i) {
        sampled = std::max(sampled, sampled_segment_max(QuadraticSurd(chain.nodes[i].q), chain.nodes[i].err,
                                                        QuadraticSurd(chain.nodes[i + 1].q), chain.nodes[i + 1].err));
      }
      long double gap = std::fabs(sampled - static_cast<long double>(to_double(m)));
      worst = std::max(worst, gap);
      o.require(gap < kSampleNear, "sampled limsup off by " + std::to_string(static_cast<double>(gap)));
    }
    o.detail << "max |sampled - m| = " << static_cast<double>(worst);
  });
}

void identity_suite() {
  criterion(3, "exact identities, peak formulas and straddles at every nu <= 100, 3 worked + 20 random surds", 60, [](Outcome& o) {
    std::vector<QuadraticSurd> alphas = {kGolden, kSqrt2, kSqrt3Half};
    for (const auto& a : random_surds(303, 20, 4, 6)) alphas.push_back(a);
    std::map<std::string, std::size_t> exercised;
    std::size_t total = 0;
    for (const auto& alpha : alphas) {
      VerifyReport r = verify_alpha(alpha, 102);
      for (const auto& c : r.checks) {
        exercised[c.name] += c.passed;
        total += c.passed;
        o.require(c.failed == 0, r.alpha + " " + c.name + (c.failures.empty() ? "" : " at " + c.failures[0]));
      }
    }
    for (const char* name : {"product-a", "product-b", "product-c", "error-ratio", "skip-ratio",
                             "skip-peak=G", "adjacent-peak=F", "skip-straddle", "adjacent-straddle"}) {
      o.require(exercised[name] > 0, std::string(name) + " never applicable");
    }
    o.detail << total << " exact checks, 0 failures";
  });
}

void segment_sampling() {
  criterion(4, "segment peaks vs dense sampling on 50 random segments", 10, [](Outcome& o) {
    std::mt19937_64 rng(404);
    std::vector<QuadraticSurd> alphas = random_surds(405, 25, 4, 6);
    int done = 0;
    long double worst = 0;
    for (const auto& alpha : alphas) {
      ConvergentTable table(alpha, 40);
      LegendreChain chain = build_chain(table, 38);
      std::uniform_int_distribution<std::size_t> pick(0, chain.gaps.size() - 1);
      for (int rep = 0; rep < 2; ++rep) {
        std::size_t i = pick(rng);
        SegmentPeak peak = segment_peak(table, chain.gaps[i]);
        long double pv = to_double(peak.value);
        long double s = sampled_segment_max(QuadraticSurd(chain.nodes[i].q), chain.nodes[i].err,
                                            QuadraticSurd(chain.nodes[i + 1].q), chain.nodes[i + 1].err);
        o.require(s <= pv + kSampleAbove, "sample above peak");
        o.require(s >= pv - kSampleNear, "sample far below peak");
        worst = std::max(worst, pv - s);
        ++done;
      }
    }
    o.require(done == 50, "segment count");
    o.detail << done << " segments, max peak - sampled = " << static_cast<double>(worst);
  });
}

void m_range() {
  criterion(5, "m in [1/4, 1/2] over all periods <= 3 with quotients <= 8; alpha-/alpha+ approach", 60,
            [](Outcome& o) {
              auto words = periodic_words(3, 8);
              SampleResult res = sample_m(words, 1);
              const QuadraticSurd quarter(make_rational(1, 4)), half(make_rational(1, 2));
              for (const auto& e : res.entries) {
                o.require(quarter <= e.m && e.m <= half, "m out of range: " + e.m.to_string());
              }
              double minus = spectra_of(make_alpha_minus(growth_values(Growth::kLinear, 40))).m.estimate();
              double plus = spectra_of(make_alpha_plus(growth_values(Growth::kLinear, 15, 3), 45)).m.estimate();
              o.require(std::fabs(minus - 0.25) < kGeneratorSlack, "alpha- estimate " + std::to_string(minus));
              o.require(std::fabs(plus - 0.5) < kGeneratorSlack, "alpha+ estimate " + std::to_string(plus));
              o.detail << words.size() << " words, m in [" << to_fixed(res.min, 6) << ", " << to_fixed(res.max, 6)
                       << "]; alpha- " << minus << ", alpha+ " << plus;
            });
}

void dominance() {
  criterion(6, "eventual dominance of mu_golden over mu_sqrt2 and mu_(1+sqrt3)/2 on [10, 1e6]", 60, [](Outcome& o) {
    for (const auto& [alpha, name] : {std::pair{kSqrt2, "sqrt2"}, std::pair{kSqrt3Half, "(1+sqrt3)/2"}}) {
      o.require(dominance_hypothesis(alpha, kGolden), std::string(name) + ": m(alpha) < lambda(golden)");
      CrossingReport r = find_crossings(alpha, kGolden, 10, 1000000);
      o.require(r.dominance_t0.has_value(), std::string(name) + ": no dominance threshold");
      o.require(r.final_sign == -1, std::string(name) + ": final sign");
      if (!r.dominance_t0) continue;
      std::size_t beyond = 0;
      for (const auto& s : r.samples) {
        if (s.t < *r.dominance_t0) continue;
        o.require(s.sign.has_value() && *s.sign == -1, std::string(name) + ": sign at t = " + s.t.get_str());
        ++beyond;
      }
      if (o.pass) {
        o.detail << (o.detail.str().empty() ? "" : "; ") << name << ": t0 = " << r.dominance_t0->get_str() << ", "
                 << r.crossings.size() << " crossings below, " << beyond << " certified breakpoints above";
      }
    }
  });
}

void oscillation() {
  criterion(7, "sign changes of mu_sqrt2 - mu_(1+sqrt3)/2", 60, [](Outcome& o) {
    o.require(oscillation_precondition(kSqrt2, kSqrt3Half), "precondition");
    CrossingReport narrow = find_crossings(kSqrt2, kSqrt3Half, 10, 1000000);
    CrossingReport wide = find_crossings(kSqrt2, kSqrt3Half, 10, 10000000);
    o.require(narrow.crossings.size() >= 5, "fewer than 5 crossings");
    o.require(wide.crossings.size() >= narrow.crossings.size(), "count decreased when widening");
    o.require(narrow.undecided.empty() && wide.undecided.empty(), "undecided breakpoints");
    for (const auto& c : wide.crossings) o.require(c.lo < c.hi, "empty crossing interval");
    o.detail << narrow.crossings.size() << " on [10, 1e6], " << wide.crossings.size() << " on [10, 1e7]";
  });
}

void brute_force() {
  criterion(8, "psi fast path, Legendre test and chain shape against brute force", 120, [](Outcome& o) {
    std::vector<QuadraticSurd> alphas = random_surds(808, 10, 4, 7);
    std::size_t checks = 0;
    for (const auto& alpha : alphas) {
      ConvergentTable table(alpha, 100);
      QuadraticSurd best = oracle::nearest_distance(alpha);
      for (long t = 1; t <= 10000; ++t) {
        QuadraticSurd v = oracle::nearest_distance(QuadraticSurd(t) * alpha);
        if (v < best) best = v;
        o.require(psi_eval(table, t) == best, "psi at t = " + std::to_string(t));
      }
      for (std::size_t nu = 0; nu <= 100; ++nu) {
        o.require(is_legendre(table, nu) == oracle::legendre_direct(alpha, table[nu].p, table[nu].q),
                  "legendre at nu = " + std::to_string(nu));
        ++checks;
      }
      LegendreChain chain = build_chain(table, 100);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        std::size_t step = chain.nodes[i + 1].source_nu - chain.nodes[i].source_nu;
        o.require(step == 1 || step == 2, "chain skips two convergents");
        if (step == 2) o.require(table.quotient(chain.nodes[i].source_nu + 2) == 1, "skip with a_{nu+1} != 1");
      }
    }
    o.detail << "10 surds x 10^4 psi values, " << checks << " Legendre indices";
  });
}

}  // namespace

int main() {
  golden_constants();
  m_equals_limit_peaks();
  identity_suite();
  segment_sampling();
  m_range();
  dominance();
  oscillation();
  brute_force();
  std::printf("%s: %d criterion line(s) failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
  return g_failed == 0 ? 0 : 1;
}
