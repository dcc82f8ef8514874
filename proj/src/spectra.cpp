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

#include "mcf/spectra.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "mcf/error.hpp"
#include "mcf/minkowski.hpp"

namespace mcf {

double SpectrumValue::estimate() const {
  if (exact) return to_double(*exact);
  return enclosure.midpoint().get_d();
}

namespace {

constexpr std::size_t kMaxPatternHorizon = 1 << 14;
const BigRational kSharpWidth = pow2(-20);

SpectrumValue exact_value(const QuadraticSurd& v, unsigned bits) {
  return {v, approximate_bits(v, bits)};
}

SpectrumValue enclosed(const RationalInterval& v) { return {std::nullopt, v}; }

RationalInterval point(const BigRational& x) { return RationalInterval::point(x); }

// Enclosure of the larger (smaller) of two enclosed values.
RationalInterval interval_max(const RationalInterval& a, const RationalInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}
RationalInterval interval_min(const RationalInterval& a, const RationalInterval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

SpectraReport exact_report(const QuadraticSurd& alpha, unsigned bits) {
  CFExpansion cf = expand(alpha);
  const std::size_t k = cf.period.size();
  const std::size_t start = cf.period_start();

  // Grow the table until the exact pass/fail flags have followed the limit
  // pattern for a full period: the chain then realizes the limit gaps.
  std::size_t horizon = start + 2 * k + 2;
  std::optional<ConvergentTable> table;
  LegendrePattern pattern;
  for (;;) {
    table.emplace(alpha, horizon);
    pattern = legendre_pattern(*table);
    if (pattern.settled_from + k <= horizon + 1) break;
    if (horizon > kMaxPatternHorizon) {
      fail(ErrorKind::kInternalConsistency,
           "Legendre flags did not settle on their limit pattern by nu = " + std::to_string(horizon));
    }
    horizon *= 2;
  }

  std::vector<QuadraticSurd> star(k), next(k), after(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t nu = start + i;
    star[i] = reversed_limit(*table, nu);
    next[i] = table->tail(nu + 1);
    after[i] = table->tail(nu + 2);
  }

  SpectraReport report;
  report.exact = true;
  report.convergence_guaranteed = true;
  report.horizon_used = horizon;

  std::optional<QuadraticSurd> lambda, dirichlet;
  for (std::size_t i = 0; i < k; ++i) {
    QuadraticSurd s = star[i] + next[i];
    QuadraticSurd l = s.reciprocal();
    QuadraticSurd d = next[i] / s;
    if (!lambda || l < *lambda) lambda = l;
    if (!dirichlet || d > *dirichlet) dirichlet = d;
  }

  std::optional<QuadraticSurd> adjacent, skip;
  for (std::size_t i = 0; i < k; ++i) {
    bool here = pattern.limit[i];
    bool succ = pattern.limit[(i + 1) % k];
    bool pred = pattern.limit[(i + k - 1) % k];
    PeakTerm term;
    term.nu = start + i;
    QuadraticSurd v;
    if (!here) {
      if (!succ || !pred) {
        fail(ErrorKind::kInternalConsistency, "two consecutive limit indices fail the Legendre test");
      }
      term.kind = GapKind::kSkip;
      v = G(star[i], after[i].reciprocal());
      if (!skip || v > *skip) skip = v;
    } else if (succ) {
      term.kind = GapKind::kAdjacent;
      v = F(star[(i + 1) % k], after[i].reciprocal());
      if (!adjacent || v > *adjacent) adjacent = v;
    } else {
      continue;
    }
    term.value = exact_value(v, bits);
    report.peaks.push_back(std::move(term));
  }

  report.lambda = exact_value(*lambda, bits);
  report.dirichlet = exact_value(*dirichlet, bits);
  if (adjacent) report.m_adjacent = exact_value(*adjacent, bits);
  if (skip) report.m_skip = exact_value(*skip, bits);
  QuadraticSurd m = adjacent && skip ? std::max(*adjacent, *skip) : adjacent ? *adjacent : *skip;
  report.m = exact_value(m, bits);
  return report;
}

std::optional<bool> decide_above_two(const RationalInterval& s) {
  if (point(2).strictly_below(s)) return true;
  if (s.strictly_below(point(2))) return false;
  return std::nullopt;
}

SpectraReport windowed_report(const CFExpansion& cf, std::size_t window) {
  const std::vector<BigInt>& a = cf.preperiod;  // a_1 .. a_N
  const std::size_t n = a.size();
  if (n < 4) fail(ErrorKind::kInsufficientHorizon, "need at least four known quotients");
  if (window == 0) fail(ErrorKind::kConfig, "window must be positive");
  auto quotient = [&](std::size_t j) -> const BigInt& { return a[j - 1]; };

  // alpha*_nu = q_{nu-1} / q_nu, exact.
  std::vector<BigRational> star(n + 1);
  BigInt q_prev = 0, q = 1;
  star[0] = 0;
  for (std::size_t nu = 1; nu <= n; ++nu) {
    BigInt qn = quotient(nu) * q + q_prev;
    q_prev = q;
    q = qn;
    star[nu] = make_rational(q_prev, q);
  }
  // alpha_N lies in (a_N, a_N + 1); earlier tails follow by alpha_nu = a_nu + 1/alpha_{nu+1}.
  std::vector<RationalInterval> tail(n + 2);
  tail[n] = RationalInterval(BigRational(quotient(n)), BigRational(quotient(n) + 1));
  for (std::size_t nu = n - 1; nu >= 1; --nu) {
    tail[nu] = point(BigRational(quotient(nu))) + tail[nu + 1].reciprocal();
  }

  SpectraReport report;
  report.horizon_used = n;
  std::vector<std::optional<bool>> flag(n);
  for (std::size_t nu = 1; nu + 1 <= n; ++nu) {
    RationalInterval s = point(star[nu]) + tail[nu + 1];
    report.running_lambda.push_back(s.reciprocal());
    // y/(x + y) = 1/(1 + x/y), written with a single occurrence of y.
    report.running_dirichlet.push_back(
        (point(1) + point(star[nu]) * tail[nu + 1].reciprocal()).reciprocal());
    flag[nu] = decide_above_two(s);
  }

  auto is_true = [&](std::size_t nu) { return flag[nu].has_value() && *flag[nu]; };
  for (std::size_t nu = 1; nu + 2 <= n; ++nu) {
    if (!flag[nu].has_value()) continue;
    RationalInterval inv = tail[nu + 2].reciprocal();
    PeakTerm term;
    term.nu = nu;
    if (!*flag[nu]) {
      if (nu < 2 || !is_true(nu - 1) || !is_true(nu + 1)) continue;
      term.kind = GapKind::kSkip;
      term.value = enclosed(G(point(star[nu]), inv));
    } else if (is_true(nu + 1)) {
      term.kind = GapKind::kAdjacent;
      term.value = enclosed(F(point(star[nu + 1]), inv));
    } else {
      continue;
    }
    report.peaks.push_back(std::move(term));
  }
  if (report.peaks.empty()) fail(ErrorKind::kInsufficientHorizon, "no decided segment peak");

  // The last `window` terms whose enclosures are sharp; terms near the end of
  // the prefix carry the uncertainty of the unknown quotients.
  auto fold = [&](const std::vector<RationalInterval>& seq, auto combine) {
    std::size_t end = seq.size();
    while (end > 1 && seq[end - 1].width() > kSharpWidth) --end;
    std::size_t from = end > window ? end - window : 0;
    RationalInterval acc = seq[from];
    for (std::size_t i = from + 1; i < end; ++i) acc = combine(acc, seq[i]);
    return acc;
  };
  auto peak_values = [&](std::optional<GapKind> kind) {
    std::vector<RationalInterval> out;
    for (const auto& p : report.peaks) {
      if (!kind || p.kind == *kind) out.push_back(p.value.enclosure);
    }
    return out;
  };

  report.lambda = enclosed(fold(report.running_lambda, interval_min));
  report.dirichlet = enclosed(fold(report.running_dirichlet, interval_max));
  report.m = enclosed(fold(peak_values(std::nullopt), interval_max));
  auto adj = peak_values(GapKind::kAdjacent);
  auto skp = peak_values(GapKind::kSkip);
  if (!adj.empty()) report.m_adjacent = enclosed(fold(adj, interval_max));
  if (!skp.empty()) report.m_skip = enclosed(fold(skp, interval_max));
  return report;
}

}  // namespace

SpectraReport spectra_of(const QuadraticSurd& alpha, unsigned precision_bits) {
  if (alpha.is_rational()) {
    fail(ErrorKind::kNotDefined, "spectra are undefined for rational " + alpha.to_string());
  }
  return exact_report(alpha, precision_bits);
}

SpectraReport spectra_of(const CFExpansion& cf, unsigned precision_bits, std::size_t window) {
  if (cf.finite) fail(ErrorKind::kNotDefined, "spectra are undefined for a finite word");
  if (cf.truncated) return windowed_report(cf, window);
  return exact_report(evaluate(cf), precision_bits);
}

SpectrumValue lambda_of(const QuadraticSurd& alpha) { return spectra_of(alpha).lambda; }
SpectrumValue dirichlet_of(const QuadraticSurd& alpha) { return spectra_of(alpha).dirichlet; }
SpectrumValue m_of(const QuadraticSurd& alpha) { return spectra_of(alpha).m; }

CFExpansion make_alpha_minus(const std::vector<BigInt>& quotients) {
  if (quotients.empty()) fail(ErrorKind::kInvalidSpec, "no quotients");
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i] < 1) fail(ErrorKind::kInvalidSpec, "quotients must be positive");
    if (i > 0 && quotients[i] <= quotients[i - 1]) {
      fail(ErrorKind::kInvalidSpec, "quotients must increase strictly (a_" + std::to_string(i + 1) +
                                        " = " + quotients[i].get_str() + ")");
    }
  }
  CFExpansion cf;
  cf.a0 = 0;
  cf.preperiod = quotients;
  cf.truncated = true;
  return cf;
}

CFExpansion make_alpha_plus(const std::vector<BigInt>& gap_values, std::size_t terms) {
  if (terms < 3) fail(ErrorKind::kInvalidSpec, "need at least three terms");
  if (gap_values.size() < terms / 3) {
    fail(ErrorKind::kInvalidSpec, std::to_string(terms) + " terms need " + std::to_string(terms / 3) +
                                      " gap values, got " + std::to_string(gap_values.size()));
  }
  for (std::size_t i = 0; i < terms / 3; ++i) {
    if (gap_values[i] < 2) fail(ErrorKind::kInvalidSpec, "gap values must be at least 2");
    if (i > 0 && gap_values[i] <= gap_values[i - 1]) {
      fail(ErrorKind::kInvalidSpec, "gap values must increase strictly");
    }
  }
  CFExpansion cf;
  cf.a0 = 0;
  cf.truncated = true;
  for (std::size_t j = 1; j <= terms; ++j) {
    cf.preperiod.push_back(j % 3 == 0 ? gap_values[j / 3 - 1] : BigInt(1));
  }
  return cf;
}

std::vector<BigInt> growth_values(Growth growth, std::size_t count, std::size_t first) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t n = first; n < first + count; ++n) {
    switch (growth) {
      case Growth::kLinear: out.emplace_back(static_cast<unsigned long>(n)); break;
      case Growth::kPow2: out.push_back(BigInt(BigInt(1) << static_cast<unsigned long>(n))); break;
      case Growth::kConstant: out.emplace_back(1); break;
    }
  }
  return out;
}

SampleResult sample_m(const std::vector<std::vector<BigInt>>& periods, unsigned jobs) {
  if (periods.empty()) fail(ErrorKind::kInvalidSpec, "no words to sample");
  SampleResult result;
  result.entries.resize(periods.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(periods.size())));
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < periods.size(); i += jobs) {
        CFExpansion cf;
        cf.period = periods[i];
        result.entries[i] = {periods[i], *spectra_of(cf).m.exact};
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  // Values from different fields: order through certified enclosures.
  auto less = [](const SampleEntry& x, const SampleEntry& y) {
    return compare_certified(x.m, y.m, 64, 4096) < 0;
  };
  result.min = std::min_element(result.entries.begin(), result.entries.end(), less)->m;
  result.max = std::max_element(result.entries.begin(), result.entries.end(), less)->m;
  return result;
}

std::vector<std::vector<BigInt>> periodic_words(std::size_t max_period, long max_quotient) {
  std::vector<std::vector<BigInt>> out;
  for (std::size_t len = 1; len <= max_period; ++len) {
    std::vector<long> word(len, 1);
    for (;;) {
      bool primitive = true;
      for (std::size_t p = 1; p < len && primitive; ++p) {
        if (len % p != 0) continue;
        bool repeats = true;
        for (std::size_t i = p; i < len && repeats; ++i) repeats = word[i] == word[i - p];
        if (repeats) primitive = false;
      }
      if (primitive) out.emplace_back(word.begin(), word.end());
      std::size_t i = len;
      while (i > 0 && word[i - 1] == max_quotient) word[--i] = 1;
      if (i == 0) break;
      ++word[i - 1];
    }
  }
  return out;
}

}  // namespace mcf
