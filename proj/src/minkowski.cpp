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

#include "mcf/minkowski.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace mcf {

bool omega_contains(const BigRational& x, const BigRational& y) {
  if (x < 0 || x >= 1 || y < 0 || y >= 1) return false;
  bool first = y == 0 || x + 1 / y >= 2;
  bool second = x == 0 || 1 / x + y >= 2;
  return first && second;
}

bool omega_contains(const QuadraticSurd& x, const QuadraticSurd& y) {
  const QuadraticSurd zero(0L), one(1L), two(2L);
  if (x < zero || x >= one || y < zero || y >= one) return false;
  bool first = y.is_zero() || x + y.reciprocal() >= two;
  bool second = x.is_zero() || x.reciprocal() + y >= two;
  return first && second;
}

QuadraticSurd psi_eval(const ConvergentTable& table, const BigRational& t) {
  if (t < 1) fail(ErrorKind::kDomain, "psi needs t >= 1");
  const auto& records = table.records();
  // Best approximations are the convergents: psi(t) = xi_nu for the largest
  // nu with q_nu <= t.
  auto it = std::upper_bound(records.begin(), records.end(), t,
                             [](const BigRational& v, const ConvergentRecord& r) { return v < r.q; });
  std::size_t nu = static_cast<std::size_t>(it - records.begin()) - 1;
  // q_{H+1} >= q_H + q_{H-1}, so the last row still answers below that.
  if (it == records.end() && !records.back().xi.is_zero() &&
      (records.size() < 2 || t >= BigRational(records.back().q + records[records.size() - 2].q))) {
    fail(ErrorKind::kHorizonExceeded,
         "t beyond q_" + std::to_string(table.horizon()) + "; extend the table");
  }
  return records[nu].xi;
}

QuadraticSurd mu_eval(const LegendreChain& chain, const BigRational& t) {
  if (chain.nodes.empty() || t < BigRational(chain.first_q()) || t > BigRational(chain.last_q())) {
    fail(ErrorKind::kOutsideChain, "t = " + t.get_str() + " outside the built chain");
  }
  auto it = std::upper_bound(chain.nodes.begin(), chain.nodes.end(), t,
                             [](const BigRational& v, const LegendreNode& n) { return v < n.q; });
  if (it == chain.nodes.end()) return chain.nodes.back().err;
  const LegendreNode& right = *it;
  const LegendreNode& left = *(it - 1);
  BigRational span(right.q - left.q);
  QuadraticSurd wl((BigRational(right.q) - t) / span);
  QuadraticSurd wr((t - BigRational(left.q)) / span);
  return wl * left.err + wr * right.err;
}

namespace {

struct Endpoints {
  BigInt left_q;
  QuadraticSurd left_err;
  BigInt right_q;
  QuadraticSurd right_err;
};

Endpoints endpoints(const ConvergentTable& table, std::size_t left, std::size_t right) {
  const ConvergentRecord& l = table.at(left);
  const ConvergentRecord& r = table.at(right);
  return {l.q, l.xi, r.q, r.xi};
}

QuadraticSurd slope_inverse(const Endpoints& e) {
  return QuadraticSurd(BigInt(e.right_q - e.left_q)) / (e.left_err - e.right_err);
}

QuadraticSurd closed_form(const Endpoints& e, const QuadraticSurd& d2) {
  QuadraticSurd s = e.left_err * d2 + e.left_q;
  return s * s / (4 * d2);
}

std::pair<bool, bool> straddle(const Endpoints& e, const QuadraticSurd& d2) {
  const QuadraticSurd one(1L);
  return {d2 * e.right_err / e.right_q <= one, one <= d2 * e.left_err / e.left_q};
}

Endpoints segment_endpoints(const ConvergentTable& table, const GapClass& gap) {
  if (gap.kind == GapKind::kSkip) {
    if (gap.nu == 0) fail(ErrorKind::kDomain, "skip gap needs nu >= 1");
    return endpoints(table, gap.nu - 1, gap.nu + 1);
  }
  return endpoints(table, gap.nu, gap.nu + 1);
}

}  // namespace

QuadraticSurd d1_squared(const ConvergentTable& table, std::size_t nu) {
  return slope_inverse(endpoints(table, nu - 1, nu + 1));
}

QuadraticSurd d2_squared(const ConvergentTable& table, std::size_t nu) {
  return slope_inverse(endpoints(table, nu, nu + 1));
}

QuadraticSurd m1(const ConvergentTable& table, std::size_t nu) {
  Endpoints e = endpoints(table, nu - 1, nu + 1);
  return closed_form(e, slope_inverse(e));
}

QuadraticSurd m2(const ConvergentTable& table, std::size_t nu) {
  Endpoints e = endpoints(table, nu, nu + 1);
  return closed_form(e, slope_inverse(e));
}

std::pair<bool, bool> straddle1(const ConvergentTable& table, std::size_t nu) {
  Endpoints e = endpoints(table, nu - 1, nu + 1);
  return straddle(e, slope_inverse(e));
}

std::pair<bool, bool> straddle2(const ConvergentTable& table, std::size_t nu) {
  Endpoints e = endpoints(table, nu, nu + 1);
  return straddle(e, slope_inverse(e));
}

SegmentPeak segment_peak(const ConvergentTable& table, const GapClass& gap) {
  Endpoints e = segment_endpoints(table, gap);
  SegmentPeak peak;
  peak.witness.d_squared = slope_inverse(e);
  peak.witness.closed_form = closed_form(e, peak.witness.d_squared);
  std::tie(peak.witness.right_below, peak.witness.left_above) = straddle(e, peak.witness.d_squared);
  if (!peak.witness.right_below || !peak.witness.left_above) {
    fail(ErrorKind::kInternalConsistency,
         "segment endpoints do not straddle the diagonal at nu = " + std::to_string(gap.nu) +
             " (" + std::string(to_string(gap.kind)) + ")");
  }

  const QuadraticSurd inv_tail = table.tail(gap.nu + 2).reciprocal();
  if (gap.kind == GapKind::kSkip) {
    peak.value = G(QuadraticSurd(table.at(gap.nu).alpha_star), inv_tail);
  } else {
    peak.value = F(QuadraticSurd(table.at(gap.nu + 1).alpha_star), inv_tail);
  }
  if (peak.value != peak.witness.closed_form) {
    fail(ErrorKind::kInternalConsistency,
         "closed-form peak " + peak.witness.closed_form.to_string() + " != " +
             (gap.kind == GapKind::kSkip ? "G " : "F ") + peak.value.to_string() +
             " at nu = " + std::to_string(gap.nu));
  }
  peak.t_star = (e.left_err * peak.witness.d_squared + e.left_q) / 2;
  peak.mu_star = peak.t_star / peak.witness.d_squared;
  return peak;
}

std::vector<MuSegment> mu_segments(const ConvergentTable& table, const LegendreChain& chain) {
  std::vector<MuSegment> out;
  out.reserve(chain.gaps.size());
  for (std::size_t i = 0; i < chain.gaps.size(); ++i) {
    const LegendreNode& l = chain.nodes[i];
    const LegendreNode& r = chain.nodes[i + 1];
    out.push_back({l.q, l.err, r.q, r.err, chain.gaps[i], segment_peak(table, chain.gaps[i]).value});
  }
  return out;
}

}  // namespace mcf
