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

#include "mcf/oscillation.hpp"

#include <algorithm>
#include <string>

#include "mcf/error.hpp"
#include "mcf/legendre.hpp"
#include "mcf/minkowski.hpp"
#include "mcf/spectra.hpp"

namespace mcf {

namespace {

bool certified_less(const QuadraticSurd& a, const QuadraticSurd& b, const CompareConfig& cfg) {
  return compare_certified(a, b, cfg.precision_bits, cfg.cap_bits) < 0;
}

void require_irrational(const QuadraticSurd& x, const char* name) {
  if (x.is_rational()) fail(ErrorKind::kNotDefined, std::string(name) + " is rational");
}

}  // namespace

bool dominance_hypothesis(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                        const CompareConfig& cfg) {
  require_irrational(alpha, "alpha");
  require_irrational(beta, "beta");
  return certified_less(*m_of(alpha).exact, *lambda_of(beta).exact, cfg);
}

bool oscillation_precondition(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                           const CompareConfig& cfg) {
  require_irrational(alpha, "alpha");
  require_irrational(beta, "beta");
  // Two irrationals of one quadratic field span it together with 1; from
  // distinct fields, 1, sqrt d1, sqrt d2 are independent.
  if (same_field(alpha, beta)) {
    fail(ErrorKind::kNotApplicable, "alpha, beta and 1 are dependent: both lie in Q(sqrt" +
                                        alpha.d().get_str() + ")");
  }
  SpectraReport a = spectra_of(alpha, cfg.precision_bits);
  SpectraReport b = spectra_of(beta, cfg.precision_bits);
  return certified_less(*b.lambda.exact, *a.lambda.exact, cfg) &&
         certified_less(*a.lambda.exact, *b.m.exact, cfg);
}

CrossingReport find_crossings(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                              const BigRational& t_lo, const BigRational& t_hi,
                              const CompareConfig& cfg) {
  if (alpha == beta) fail(ErrorKind::kEqualInputs, "alpha == beta: the difference vanishes identically");
  require_irrational(alpha, "alpha");
  require_irrational(beta, "beta");
  if (t_lo < 1 || t_hi <= t_lo) fail(ErrorKind::kDomain, "need 1 <= t_lo < t_hi");

  BigInt t_max = ceil_of(t_hi);
  ChainedTable ca = chain_covering(alpha, t_max);
  ChainedTable cb = chain_covering(beta, t_max);
  for (const auto* c : {&ca, &cb}) {
    if (t_lo < BigRational(c->chain.first_q())) {
      fail(ErrorKind::kOutsideChain, "t_lo = " + t_lo.get_str() + " precedes the chain start " +
                                         c->chain.first_q().get_str());
    }
  }

  std::vector<BigRational> ts = {t_lo, t_hi};
  for (const auto* c : {&ca, &cb}) {
    for (const auto& node : c->chain.nodes) {
      BigRational q(node.q);
      if (t_lo < q && q < t_hi) ts.push_back(q);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  CrossingReport report;
  report.t_lo = t_lo;
  report.t_hi = t_hi;
  for (const auto& t : ts) {
    BreakpointSample s{t, mu_eval(ca.chain, t), mu_eval(cb.chain, t), std::nullopt};
    try {
      auto ord = compare_certified(s.mu_alpha, s.mu_beta, cfg.precision_bits, cfg.cap_bits);
      s.sign = ord < 0 ? -1 : ord > 0 ? 1 : 0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUndecided) throw;
    }
    report.samples.push_back(std::move(s));
  }

  // Walk the breakpoints; a change between the last decided nonzero sign
  // and the next one brackets a crossing.
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const auto& s = report.samples[i];
    if (!s.sign) {
      const BigRational& prev = report.samples[i == 0 ? 0 : i - 1].t;
      const BigRational& next = report.samples[std::min(i + 1, report.samples.size() - 1)].t;
      report.undecided.emplace_back(prev, next);
      continue;
    }
    if (*s.sign == 0) continue;
    if (last && *report.samples[*last].sign != *s.sign) {
      const auto& l = report.samples[*last];
      double dl = to_double(l.mu_alpha) - to_double(l.mu_beta);
      double dr = to_double(s.mu_alpha) - to_double(s.mu_beta);
      double tl = l.t.get_d(), tr = s.t.get_d();
      double root = i == *last + 1 && dl != dr ? tl + dl * (tr - tl) / (dl - dr) : (tl + tr) / 2;
      report.crossings.push_back({l.t, s.t, root});
    }
    last = i;
  }
  if (last) report.final_sign = *report.samples[*last].sign;

  if (dominance_hypothesis(alpha, beta, cfg)) {
    report.predicted_sign = -1;
  } else if (dominance_hypothesis(beta, alpha, cfg)) {
    report.predicted_sign = 1;
  }
  if (report.predicted_sign && report.final_sign == *report.predicted_sign) {
    report.dominance_t0 = report.crossings.empty() ? t_lo : report.crossings.back().hi;
  }
  try {
    report.precondition_holds = oscillation_precondition(alpha, beta, cfg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotApplicable) throw;
  }
  return report;
}

}  // namespace mcf
