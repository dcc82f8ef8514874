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

#include "mcf/legendre.hpp"

#include <string>

#include "mcf/error.hpp"

namespace mcf {

namespace {

bool legendre_by_tails(const ConvergentTable& table, std::size_t nu) {
  const ConvergentRecord& rec = table.at(nu);
  if (rec.xi.is_zero()) return true;  // last convergent of a rational
  return QuadraticSurd(rec.alpha_star) + table.tail(nu + 1) > QuadraticSurd(2);
}

}  // namespace

bool is_legendre(const ConvergentTable& table, std::size_t nu) {
  const ConvergentRecord& rec = table.at(nu);
  bool direct = QuadraticSurd(rec.q) * rec.xi < QuadraticSurd(BigRational(1, 2));
  if (direct != legendre_by_tails(table, nu)) {
    fail(ErrorKind::kInternalConsistency,
         "Legendre criteria disagree at nu = " + std::to_string(nu));
  }
  return direct;
}

std::string_view to_string(GapKind kind) {
  return kind == GapKind::kAdjacent ? "adjacent" : "skip";
}

LegendreChain build_chain(const ConvergentTable& table, std::size_t n) {
  if (table.is_rational()) fail(ErrorKind::kFiniteChain, "alpha is rational");
  LegendreChain chain;
  for (std::size_t nu = 0; nu <= n; ++nu) {
    if (!is_legendre(table, nu)) continue;
    const ConvergentRecord& rec = table.at(nu);
    LegendreNode node{0, rec.q, rec.xi, nu};
    // q_0 = q_1 = 1 when a_1 = 1: keep the later, better convergent.
    if (!chain.nodes.empty() && chain.nodes.back().q == rec.q) {
      chain.nodes.back() = std::move(node);
    } else {
      chain.nodes.push_back(std::move(node));
    }
  }
  if (chain.nodes.size() < 2) {
    fail(ErrorKind::kInsufficientHorizon,
         "horizon " + std::to_string(n) + " yields fewer than two chain nodes");
  }
  for (std::size_t i = 0; i < chain.nodes.size(); ++i) chain.nodes[i].n = i;

  for (std::size_t i = 0; i + 1 < chain.nodes.size(); ++i) {
    const LegendreNode& left = chain.nodes[i];
    const LegendreNode& right = chain.nodes[i + 1];
    std::size_t step = right.source_nu - left.source_nu;
    if (!(left.q < right.q) || !(right.err < left.err)) {
      fail(ErrorKind::kInternalConsistency, "chain not monotone at node " + std::to_string(i));
    }
    if (step == 1) {
      chain.gaps.push_back({GapKind::kAdjacent, left.source_nu});
    } else if (step == 2) {
      std::size_t nu = left.source_nu + 1;
      if (table.quotient(nu + 1) != 1) {
        fail(ErrorKind::kInternalConsistency,
             "skip gap at nu = " + std::to_string(nu) + " with a_{nu+1} != 1");
      }
      chain.gaps.push_back({GapKind::kSkip, nu});
    } else {
      fail(ErrorKind::kInternalConsistency,
           "convergents " + std::to_string(left.source_nu + 1) + ".." +
               std::to_string(right.source_nu - 1) + " all fail the Legendre test");
    }
  }
  return chain;
}

QuadraticSurd reversed_limit(const ConvergentTable& table, std::size_t nu) {
  const CFExpansion& cf = table.expansion();
  if (!cf.is_periodic()) fail(ErrorKind::kFiniteExpansion, "reversed limit needs a periodic expansion");
  std::size_t k = cf.period.size();
  std::size_t start = cf.period_start();
  // Position of nu in the period, extended backwards periodically.
  std::size_t pos = nu >= start ? (nu - start) % k : (k - (start - nu) % k) % k;
  std::vector<BigInt> word;
  word.reserve(k);
  for (std::size_t i = 0; i < k; ++i) word.push_back(cf.period[(pos + k - i) % k]);
  return purely_periodic_value(word, table.alpha().field()).reciprocal();
}

LegendrePattern legendre_pattern(const ConvergentTable& table) {
  const CFExpansion& cf = table.expansion();
  if (!cf.is_periodic()) fail(ErrorKind::kFiniteExpansion, "pattern needs a periodic expansion");
  LegendrePattern pattern;
  for (std::size_t nu = 0; nu <= table.horizon(); ++nu) pattern.flags.push_back(is_legendre(table, nu));
  std::size_t start = cf.period_start();
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    std::size_t nu = start + i;
    pattern.limit.push_back(reversed_limit(table, nu) + table.tail(nu + 1) > QuadraticSurd(2));
  }
  pattern.settled_from = pattern.flags.size();
  while (pattern.settled_from > start &&
         pattern.flags[pattern.settled_from - 1] == pattern.limit_at(pattern.settled_from - 1, start)) {
    --pattern.settled_from;
  }
  return pattern;
}

ChainedTable chain_covering(const QuadraticSurd& alpha, const BigInt& t_max,
                            std::size_t min_horizon) {
  if (alpha.is_rational()) fail(ErrorKind::kFiniteChain, "alpha is rational");
  std::size_t horizon = std::max<std::size_t>(min_horizon, 4);
  for (;;) {
    ConvergentTable table(alpha, horizon);
    // The last convergent may fail; the chain must end at or beyond t_max.
    if (table[horizon - 1].q >= t_max) {
      LegendreChain chain = build_chain(table, horizon);
      if (chain.last_q() >= t_max) return {std::move(table), std::move(chain)};
    }
    horizon *= 2;
  }
}

}  // namespace mcf
