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

#include "mcf/cf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>
#include <utility>

#include "mcf/error.hpp"

namespace mcf {

bool CFExpansion::has_quotient(std::size_t j) const {
  if (j == 0 || is_periodic()) return true;
  return j <= preperiod.size();
}

BigInt CFExpansion::quotient(std::size_t j) const {
  if (j == 0) return a0;
  if (j <= preperiod.size()) return preperiod[j - 1];
  if (!is_periodic()) {
    fail(ErrorKind::kFiniteExpansion,
         "quotient a_" + std::to_string(j) + " beyond a word of length " +
             std::to_string(preperiod.size()) + (truncated ? " (truncated)" : ""));
  }
  return period[(j - period_start()) % period.size()];
}

CFExpansion expand(const QuadraticSurd& x, std::size_t max_terms) {
  CFExpansion cf;
  if (auto r = x.as_rational()) {
    cf.finite = true;
    BigInt num = r->get_num();
    BigInt den = r->get_den();
    cf.a0 = floor_of(*r);
    num -= cf.a0 * den;
    while (num != 0) {
      std::swap(num, den);
      BigInt a = num / den;  // both positive here
      num -= a * den;
      cf.preperiod.push_back(a);
    }
    return cf;
  }

  cf.a0 = surd_floor(x);
  QuadraticSurd state = (x - cf.a0).reciprocal();
  std::vector<BigInt> quotients;  // quotients[j - 1] = a_j
  std::map<std::tuple<BigInt, BigInt, BigInt>, std::size_t> seen;
  for (std::size_t j = 1;; ++j) {
    auto key = std::make_tuple(state.p(), state.q(), state.r());
    if (auto it = seen.find(key); it != seen.end()) {
      std::size_t first = it->second;
      cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<long>(first - 1));
      cf.period.assign(quotients.begin() + static_cast<long>(first - 1), quotients.end());
      return cf;
    }
    if (quotients.size() >= max_terms) {
      fail(ErrorKind::kHorizonExceeded,
           "no period detected within " + std::to_string(max_terms) + " quotients of " +
               x.to_string());
    }
    seen.emplace(std::move(key), j);
    BigInt a = surd_floor(state);
    quotients.push_back(a);
    state = (state - a).reciprocal();
  }
}

QuadraticSurd purely_periodic_value(std::span<const BigInt> period, const BigInt& field) {
  if (period.empty()) fail(ErrorKind::kInvalidSurd, "empty period");
  // x = (P x + P') / (Q x + Q') with P/Q, P'/Q' the last two convergents of
  // the period word, so Q x^2 + (Q' - P) x - P' = 0 and x is the positive root.
  BigInt p_prev = 1, p = period[0];
  BigInt q_prev = 0, q = 1;
  for (std::size_t i = 1; i < period.size(); ++i) {
    BigInt p_next = period[i] * p + p_prev;
    BigInt q_next = period[i] * q + q_prev;
    p_prev = std::exchange(p, std::move(p_next));
    q_prev = std::exchange(q, std::move(q_next));
  }
  BigInt b = p - q_prev;
  BigInt disc = b * b + 4 * q * p_prev;
  if (field > 1 && mpz_divisible_p(disc.get_mpz_t(), field.get_mpz_t())) {
    BigInt square = disc / field;
    if (mpz_perfect_square_p(square.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), square.get_mpz_t());
      return surd_make(b, root, field, 2 * q);
    }
  }
  return surd_make(b, 1, disc, 2 * q);
}

QuadraticSurd evaluate(const CFExpansion& cf) {
  if (cf.truncated) fail(ErrorKind::kFiniteExpansion, "a truncated word has no exact value");
  if (!cf.is_periodic() && cf.preperiod.empty()) return QuadraticSurd(cf.a0);
  return tail(cf, 0);
}

QuadraticSurd tail(const CFExpansion& cf, std::size_t nu) {
  if (cf.truncated) fail(ErrorKind::kFiniteExpansion, "tails of a truncated word are unknown");
  std::size_t start;
  QuadraticSurd x;
  if (cf.is_periodic()) {
    std::size_t k = cf.period.size();
    if (nu >= cf.period_start()) {
      std::size_t offset = (nu - cf.period_start()) % k;
      std::vector<BigInt> rotated(cf.period.begin() + static_cast<long>(offset), cf.period.end());
      rotated.insert(rotated.end(), cf.period.begin(), cf.period.begin() + static_cast<long>(offset));
      return purely_periodic_value(rotated);
    }
    start = cf.period_start();
    x = purely_periodic_value(cf.period);
  } else {
    std::size_t n = cf.preperiod.size();
    if (nu > n) {
      fail(ErrorKind::kFiniteExpansion,
           "tail alpha_" + std::to_string(nu) + " beyond a word of length " + std::to_string(n));
    }
    start = n;
    x = QuadraticSurd(cf.quotient(n));
  }
  for (std::size_t j = start; j-- > nu;) x = QuadraticSurd(cf.quotient(j)) + x.reciprocal();
  return x;
}

// --- Literals --------------------------------------------------------------

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

BigInt parse_integer(std::string_view raw, std::string_view literal, bool positive) {
  std::string s = strip(raw);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    bool sign = i == 0 && (s[i] == '-' || s[i] == '+') && s.size() > 1;
    ok = sign || std::isdigit(static_cast<unsigned char>(s[i]));
  }
  if (!ok) fail(ErrorKind::kParse, "bad integer '" + s + "' in '" + std::string(literal) + "'");
  if (s[0] == '+') s.erase(0, 1);
  BigInt v(s);
  if (positive && v < 1) {
    fail(ErrorKind::kParse, "partial quotients after a0 must be >= 1 in '" + std::string(literal) + "'");
  }
  return v;
}

std::vector<std::string> split_items(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

}  // namespace

CFExpansion parse_cf_literal(std::string_view text) {
  std::string s = strip(text);
  auto bad = [&](const char* why) {
    fail(ErrorKind::kParse, std::string(why) + " in CF literal '" + s + "'");
  };
  if (s.rfind("cf:", 0) != 0) bad("missing 'cf:' prefix");
  std::string body = strip(std::string_view(s).substr(3));
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') bad("expected [...]");
  body = body.substr(1, body.size() - 2);

  CFExpansion cf;
  std::size_t semi = body.find(';');
  cf.a0 = parse_integer(std::string_view(body).substr(0, semi), s, false);
  if (semi == std::string::npos) {
    cf.finite = true;
    return cf;
  }
  std::string rest = strip(std::string_view(body).substr(semi + 1));
  if (rest.empty()) bad("empty word after ';'");

  std::size_t open = rest.find('(');
  std::string head = rest;
  if (open != std::string::npos) {
    if (rest.back() != ')' || rest.find('(', open + 1) != std::string::npos) bad("period must come last");
    std::string inner = rest.substr(open + 1, rest.size() - open - 2);
    for (const auto& item : split_items(inner)) cf.period.push_back(parse_integer(item, s, true));
    head = strip(std::string_view(rest).substr(0, open));
    if (!head.empty()) {
      if (head.back() != ',') bad("expected ',' before the period");
      head.pop_back();
    }
  }
  if (!head.empty()) {
    auto items = split_items(head);
    if (items.back() == "...") {
      if (open != std::string::npos) bad("'...' cannot be combined with a period");
      cf.truncated = true;
      items.pop_back();
    }
    for (const auto& item : items) cf.preperiod.push_back(parse_integer(item, s, true));
  }
  if (!cf.is_periodic() && !cf.truncated) {
    cf.finite = true;
    // Canonical finite form ends with a quotient >= 2.
    if (!cf.preperiod.empty() && cf.preperiod.back() == 1) {
      cf.preperiod.pop_back();
      if (cf.preperiod.empty()) {
        cf.a0 += 1;
      } else {
        cf.preperiod.back() += 1;
      }
    }
  }
  return cf;
}

std::string format_cf_literal(const CFExpansion& cf) {
  std::string out = "cf:[" + cf.a0.get_str();
  if (cf.preperiod.empty() && cf.period.empty()) return out + "]";
  out += ";";
  bool first = true;
  for (const auto& a : cf.preperiod) {
    if (!first) out += ",";
    out += a.get_str();
    first = false;
  }
  if (cf.is_periodic()) {
    if (!first) out += ",";
    out += "(";
    for (std::size_t i = 0; i < cf.period.size(); ++i) {
      if (i) out += ",";
      out += cf.period[i].get_str();
    }
    out += ")";
  } else if (cf.truncated) {
    out += first ? "..." : ",...";
  }
  return out + "]";
}

// --- Convergents -----------------------------------------------------------

std::vector<ConvergentRecord> convergents(const CFExpansion& cf, const QuadraticSurd& alpha,
                                          std::size_t n) {
  if (cf.finite && n > cf.preperiod.size()) {
    fail(ErrorKind::kFiniteExpansion,
         "rational alpha has only " + std::to_string(cf.preperiod.size() + 1) +
             " convergents, requested " + std::to_string(n + 1));
  }
  std::vector<ConvergentRecord> out;
  out.reserve(n + 1);
  BigInt p_prev = 1, p_prev2 = 0;
  BigInt q_prev = 0, q_prev2 = 1;
  BigRational star = 0;
  for (std::size_t nu = 0; nu <= n; ++nu) {
    BigInt a = cf.quotient(nu);
    ConvergentRecord rec;
    rec.nu = nu;
    rec.p = a * p_prev + p_prev2;
    rec.q = a * q_prev + q_prev2;
    rec.xi = (QuadraticSurd(rec.q) * alpha - rec.p).abs();

    // [0; a_nu, ..., a_1] built inside out, against q_{nu-1}/q_nu.
    if (nu > 0) {
      star = 1 / (BigRational(a) + star);
      star.canonicalize();
    }
    BigRational ratio = make_rational(q_prev, rec.q);
    if (star != ratio) {
      fail(ErrorKind::kInternalConsistency,
           "alpha*_" + std::to_string(nu) + " routes disagree: " + star.get_str() + " vs " +
               ratio.get_str());
    }
    rec.alpha_star = star;

    p_prev2 = std::exchange(p_prev, rec.p);
    q_prev2 = std::exchange(q_prev, rec.q);
    out.push_back(std::move(rec));
  }
  return out;
}

ConvergentTable::ConvergentTable(const QuadraticSurd& alpha, std::size_t horizon,
                                 std::size_t max_terms)
    : alpha_(alpha), cf_(expand(alpha, max_terms)) {
  records_ = convergents(cf_, alpha_, horizon);
  // Complete quotients by iterating x -> 1/(x - a); they stay in alpha's
  // field, so no discriminant is ever factored.
  std::size_t head = cf_.is_periodic() ? cf_.period_start() : cf_.preperiod.size() + 1;
  head_tails_.reserve(head);
  QuadraticSurd x = alpha_;
  for (std::size_t j = 0; j < head; ++j) {
    head_tails_.push_back(x);
    if (j + 1 < head || cf_.is_periodic()) x = (x - cf_.quotient(j)).reciprocal();
  }
  if (cf_.is_periodic()) {
    for (std::size_t i = 0; i < cf_.period.size(); ++i) {
      rotations_.push_back(x);
      x = (x - cf_.quotient(cf_.period_start() + i)).reciprocal();
    }
    if (x != rotations_.front()) {
      fail(ErrorKind::kInternalConsistency, "complete quotients do not close the period");
    }
  }
}

const ConvergentRecord& ConvergentTable::at(std::size_t nu) const {
  if (nu >= records_.size()) {
    fail(ErrorKind::kHorizonExceeded, "convergent " + std::to_string(nu) +
                                          " beyond horizon " + std::to_string(horizon()));
  }
  return records_[nu];
}

QuadraticSurd ConvergentTable::tail(std::size_t nu) const {
  if (nu < head_tails_.size()) return head_tails_[nu];
  if (rotations_.empty()) {
    fail(ErrorKind::kFiniteExpansion, "tail alpha_" + std::to_string(nu) + " of a rational");
  }
  return rotations_[(nu - cf_.period_start()) % rotations_.size()];
}

// --- Identities --------------------------------------------------------------

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return !c.applicable || c.passed; });
}

IdentityReport check_identities(const ConvergentTable& table, std::size_t nu) {
  if (table.is_rational()) fail(ErrorKind::kFiniteExpansion, "identities need an irrational alpha");
  const ConvergentRecord& cur = table.at(nu);
  const ConvergentRecord& next = table.at(nu + 1);
  const QuadraticSurd star(cur.alpha_star);
  const QuadraticSurd star_next(next.alpha_star);
  const QuadraticSurd tail1 = table.tail(nu + 1);
  const QuadraticSurd tail2 = table.tail(nu + 2);
  const QuadraticSurd lhs = QuadraticSurd(cur.q) * cur.xi;

  IdentityReport report;
  report.nu = nu;
  report.checks.push_back({"product-a", true, lhs == (star + tail1).reciprocal()});
  report.checks.push_back(
      {"product-b", true, lhs == (star_next.reciprocal() + tail2.reciprocal()).reciprocal()});
  report.checks.push_back({"product-c", true, lhs == star_next * tail2 / (star_next + tail2)});
  report.checks.push_back({"error-ratio", true, cur.xi / next.xi == tail2});
  IdentityCheck l1{"skip-ratio", nu >= 1 && table.quotient(nu + 1) == 1, false};
  if (l1.applicable) l1.passed = table[nu - 1].xi / next.xi == tail2 + 1;
  report.checks.push_back(l1);
  return report;
}

}  // namespace mcf
