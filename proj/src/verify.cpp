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

#include "mcf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mcf/error.hpp"
#include "mcf/minkowski.hpp"
#include "mcf/spectra.hpp"

namespace mcf {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

class Suite {
 public:
  CheckTally& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, tallies_.size()).first;
      tallies_.push_back({name});
    }
    return tallies_[it->second];
  }

  // Runs `check`; an exception counts as a failure carrying its message.
  void run(const std::string& name, const std::string& where, const std::function<bool()>& check) {
    try {
      (*this)[name].record(check(), where);
    } catch (const Error& e) {
      (*this)[name].record(false, where + ": " + e.what());
    }
  }

  void skip(const std::string& name) { ++(*this)[name].skipped; }

  std::vector<CheckTally> take() { return std::move(tallies_); }

 private:
  std::vector<CheckTally> tallies_;
  std::map<std::string, std::size_t> index_;
};

std::string at(std::size_t nu) { return "nu=" + std::to_string(nu); }

}  // namespace

void CheckTally::record(bool ok, const std::string& where) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxListedFailures) failures.push_back(where);
}

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

QuadraticSurd limit_peak_closed_form(const ConvergentTable& table, GapKind kind, std::size_t nu) {
  auto star = [&](std::size_t j) { return -table.tail(j + 1).conjugate(); };
  // Limit of q_j xi_j.
  auto product = [&](std::size_t j) { return (star(j) + table.tail(j + 1)).reciprocal(); };
  // Rescale so the left endpoint is (1, P_left); the right endpoint is
  // (rho, P_right / rho) with rho the limit ratio of denominators.
  std::size_t left = kind == GapKind::kSkip ? nu - 1 : nu;
  QuadraticSurd rho = star(nu + 1).reciprocal();
  if (kind == GapKind::kSkip) rho = rho / star(nu);
  const QuadraticSurd xl = product(left);
  const QuadraticSurd xr = product(nu + 1) / rho;
  const QuadraticSurd d2 = (rho - 1) / (xl - xr);
  const QuadraticSurd s = xl * d2 + 1;
  return s * s / (4 * d2);
}

VerifyReport verify_alpha(const QuadraticSurd& alpha, std::size_t horizon) {
  if (alpha.is_rational()) fail(ErrorKind::kNotDefined, "verify needs an irrational alpha");
  if (horizon < 4) fail(ErrorKind::kConfig, "verify needs a horizon of at least 4");
  ConvergentTable table(alpha, horizon);
  Suite suite;
  const QuadraticSurd one(1L), two(2L);

  for (std::size_t nu = 0; nu <= horizon; ++nu) {
    const ConvergentRecord& r = table[nu];
    if (nu >= 1) {
      const ConvergentRecord& p = table[nu - 1];
      BigInt det = r.p * p.q - p.p * r.q;
      suite.run("determinant", at(nu), [&] { return det == (nu % 2 == 1 ? 1 : -1); });
      suite.run("alpha-star", at(nu), [&] {
        return r.alpha_star == make_rational(p.q, r.q) &&
               r.alpha_star == 1 / (BigRational(table.quotient(nu)) + p.alpha_star);
      });
    }
    suite.run("legendre-direct", at(nu), [&] {
      QuadraticSurd gap = (alpha - QuadraticSurd(make_rational(r.p, r.q))).abs();
      bool direct = gap < QuadraticSurd(make_rational(1, 2 * r.q * r.q));
      return is_legendre(table, nu) == direct;
    });
  }

  for (std::size_t nu = 0; nu + 2 <= horizon; ++nu) {
    const std::string where = at(nu);
    IdentityReport ids = check_identities(table, nu);
    for (const auto& c : ids.checks) {
      const std::string& name = c.name;
      if (c.applicable) {
        suite[name].record(c.passed, where);
      } else {
        suite.skip(name);
      }
    }

    const QuadraticSurd inv = table.tail(nu + 2).reciprocal();
    const bool unit = nu >= 1 && table.quotient(nu + 1) == 1;
    if (unit) {
      const QuadraticSurd star(table[nu].alpha_star);
      const QuadraticSurd denom = star + inv + 1;
      const QuadraticSurd d2 = d1_squared(table, nu);
      const ConvergentRecord& prev = table[nu - 1];
      suite.run("skip-peak.left-t", where, [&] {
        return d2 * prev.xi * prev.xi == (inv + 1) * (inv + 1) / denom;
      });
      suite.run("skip-peak.left-mu", where, [&] {
        return QuadraticSurd(BigInt(prev.q * prev.q)) / d2 == star * star / denom;
      });
      suite.run("skip-peak.left-product", where, [&] {
        return QuadraticSurd(prev.q) * prev.xi == star * (inv + 1) / denom;
      });
      suite.run("skip-peak=G", where, [&] { return m1(table, nu) == G(star, inv); });
      suite.run("skip-straddle", where, [&] {
        auto [right, left] = straddle1(table, nu);
        return right && left;
      });
    } else {
      for (const char* name : {"skip-peak.left-t", "skip-peak.left-mu", "skip-peak.left-product", "skip-peak=G", "skip-straddle"}) suite.skip(name);
    }

    if (table[nu + 1].q > table[nu].q) {
      suite.run("adjacent-peak=F", where, [&] {
        return m2(table, nu) == F(QuadraticSurd(table[nu + 1].alpha_star), inv);
      });
    } else {
      suite.skip("adjacent-peak=F");
    }

    const bool both = QuadraticSurd(table[nu].alpha_star) + table.tail(nu + 1) > two &&
                      QuadraticSurd(table[nu + 1].alpha_star) + table.tail(nu + 2) > two;
    if (both && table[nu + 1].q > table[nu].q) {
      suite.run("adjacent-straddle", where, [&] {
        auto [right, left] = straddle2(table, nu);
        return right && left;
      });
    } else {
      suite.skip("adjacent-straddle");
    }
  }

  // The chain and its segment peaks.
  LegendreChain chain;
  try {
    chain = build_chain(table, horizon - 1);
    suite["chain"].record(true, "build");
  } catch (const Error& e) {
    suite["chain"].record(false, std::string("build: ") + e.what());
  }
  for (std::size_t i = 0; i < chain.gaps.size(); ++i) {
    const GapClass& gap = chain.gaps[i];
    const std::string where = at(gap.nu) + " " + std::string(to_string(gap.kind));
    suite.run("chain.gap", where, [&] {
      if (gap.kind == GapKind::kAdjacent) return chain.nodes[i].source_nu + 1 == chain.nodes[i + 1].source_nu;
      return chain.nodes[i].source_nu + 2 == chain.nodes[i + 1].source_nu &&
             table.quotient(gap.nu + 1) == 1;
    });
    if (gap.nu + 2 > horizon) continue;
    const std::string name = gap.kind == GapKind::kSkip ? "skip-segment-max" : "adjacent-segment-max";
    suite.run(name, where, [&] {
      SegmentPeak peak = segment_peak(table, gap);
      const LegendreNode& l = chain.nodes[i];
      const LegendreNode& r = chain.nodes[i + 1];
      // The peak dominates both endpoints and is attained at t*.
      return QuadraticSurd(l.q) * l.err <= peak.value && QuadraticSurd(r.q) * r.err <= peak.value &&
             peak.t_star * peak.mu_star == peak.value;
    });
  }

  // At the limit: the exact m equals the largest closed-form limit
  // peak over one period of gaps in the realized chain.
  suite.run("m-limit", "limit", [&] {
    SpectraReport rep = spectra_of(alpha);
    CFExpansion cf = table.expansion();
    const std::size_t k = cf.period.size();
    const std::size_t start = cf.period_start();
    ConvergentTable deep(alpha, std::max(rep.horizon_used, start + 2 * k + 2) + 2 * k + 2);
    LegendreChain realized = build_chain(deep, deep.horizon());
    std::optional<QuadraticSurd> best;
    for (const auto& gap : realized.gaps) {
      if (gap.nu < rep.horizon_used || gap.nu >= rep.horizon_used + k) continue;
      QuadraticSurd v = limit_peak_closed_form(deep, gap.kind, gap.nu);
      if (!best || v > *best) best = v;
    }
    return best && *best == *rep.m.exact;
  });

  VerifyReport report;
  report.alpha = format_number_literal(alpha);
  report.horizon = horizon;
  report.checks = suite.take();
  return report;
}

CheckTally verify_f_extremes_grid(long n) {
  CheckTally tally{"F-extremes"};
  const BigRational quarter = make_rational(1, 4), half = make_rational(1, 2);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      BigRational x = make_rational(i, n), y = make_rational(j, n);
      if (!omega_contains(x, y)) continue;
      BigRational v = F(x, y);
      bool boundary = (y != 0 && x + 1 / y == 2) || (x != 0 && 1 / x + y == 2);
      bool ok = quarter <= v && v <= half && ((v == quarter) == (i == 0 && j == 0)) &&
                ((v == half) == boundary);
      tally.record(ok, "(" + x.get_str() + ", " + y.get_str() + ")");
    }
  }
  return tally;
}

}  // namespace mcf
