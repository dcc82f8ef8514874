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

#ifndef MCF_LEGENDRE_HPP_
#define MCF_LEGENDRE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "mcf/cf.hpp"
#include "mcf/exact.hpp"

namespace mcf {

// Whether q_nu ||q_nu alpha|| < 1/2, i.e. |alpha - p/q| < 1/(2 q^2). Decided
// exactly twice, directly and as alpha*_nu + alpha_{nu+1} > 2; the two must
// agree.
bool is_legendre(const ConvergentTable& table, std::size_t nu);

enum class GapKind { kAdjacent, kSkip };
std::string_view to_string(GapKind kind);

// How consecutive chain denominators relate to the convergents:
// adjacent (Q_n, Q_{n+1}) = (q_nu, q_{nu+1}); skip (Q_n, Q_{n+1}) = (q_{nu-1},
// q_{nu+1}) with convergent nu failing the Legendre test.
struct GapClass {
  GapKind kind = GapKind::kAdjacent;
  std::size_t nu = 0;

  friend bool operator==(const GapClass&, const GapClass&) = default;
};

struct LegendreNode {
  std::size_t n = 0;
  BigInt q;
  QuadraticSurd err;  // ||Q alpha||
  std::size_t source_nu = 0;
};

// Strictly increasing Legendre denominators; gaps[i] joins nodes[i] and
// nodes[i + 1].
struct LegendreChain {
  std::vector<LegendreNode> nodes;
  std::vector<GapClass> gaps;

  std::size_t size() const { return nodes.size(); }
  const BigInt& first_q() const { return nodes.front().q; }
  const BigInt& last_q() const { return nodes.back().q; }
};

// Chain over convergents 0..n. Throws kFiniteChain for rational alpha,
// kInsufficientHorizon for fewer than two nodes, and kInternalConsistency if
// two consecutive convergents both fail or a skip has a_{nu+1} != 1.
LegendreChain build_chain(const ConvergentTable& table, std::size_t n);

// Pass/fail flags per index and their eventual periodic pattern.
struct LegendrePattern {
  std::vector<bool> flags;       // nu = 0..horizon, decided exactly
  std::vector<bool> limit;       // per period position, for nu >= period_start
  std::size_t settled_from = 0;  // flags follow `limit` from here to the horizon

  bool limit_at(std::size_t nu, std::size_t period_start) const {
    return limit[(nu - period_start) % limit.size()];
  }
};

// Requires a periodic expansion. The limit pattern tests
// lim alpha*_nu + alpha_{nu+1} > 2 with the reversed-period limit of alpha*.
LegendrePattern legendre_pattern(const ConvergentTable& table);

// lim alpha*_{nu + jk} as j grows: 1 / [a_nu; a_{nu-1}, ..., a_{nu-k+1}]
// repeated, i.e. the purely periodic surd of the reversed period, read
// backwards from position nu.
QuadraticSurd reversed_limit(const ConvergentTable& table, std::size_t nu);

// A table and chain with last_q() >= t_max (and at least `min_horizon`
// convergents). Grows the horizon geometrically.
struct ChainedTable {
  ConvergentTable table;
  LegendreChain chain;
};
ChainedTable chain_covering(const QuadraticSurd& alpha, const BigInt& t_max,
                            std::size_t min_horizon = 8);

}  // namespace mcf

#endif  // MCF_LEGENDRE_HPP_
