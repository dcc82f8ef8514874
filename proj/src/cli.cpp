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

#include "mcf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcf/cf.hpp"
#include "mcf/error.hpp"
#include "mcf/exact.hpp"
#include "mcf/legendre.hpp"
#include "mcf/minkowski.hpp"
#include "mcf/oscillation.hpp"
#include "mcf/spectra.hpp"
#include "mcf/verify.hpp"

namespace mcf::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDecimalDigits = 30;
constexpr int kSignificant = 20;

void config_fail(const std::string& msg) { fail(ErrorKind::kConfig, msg); }

std::string fixed(const QuadraticSurd& x) { return to_fixed(x, kDecimalDigits); }
std::string sci(const QuadraticSurd& x) { return to_scientific(x, kSignificant); }

Json json_header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void csv_header(std::ostream& out, const std::string& command, const std::string& columns) {
  out << "# " << kSchema << " " << command << "\n" << columns << "\n";
}

// "rat:", "surd:" or "cf:" literal.
struct AlphaArg {
  std::optional<QuadraticSurd> value;
  std::optional<CFExpansion> truncated;
};

AlphaArg parse_alpha(const std::string& text) {
  if (text.rfind("cf:", 0) == 0) {
    CFExpansion cf = parse_cf_literal(text);
    if (cf.truncated) return {std::nullopt, cf};
    return {evaluate(cf), std::nullopt};
  }
  return {parse_number_literal(text), std::nullopt};
}

QuadraticSurd exact_alpha(const std::string& text) {
  AlphaArg a = parse_alpha(text);
  if (!a.value) fail(ErrorKind::kParse, "this command needs an exact value, not a truncated word: " + text);
  return *a.value;
}

// Integer, fraction "p/q" or "MeE" (e.g. 1e6).
BigRational parse_bound(const std::string& text) {
  static const std::regex kForm(R"(([0-9]+)(?:/([0-9]+)|[eE]([0-9]+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, kForm)) fail(ErrorKind::kParse, "bad bound '" + text + "'");
  BigRational v{BigInt(m[1].str())};
  if (m[2].matched) {
    BigInt den(m[2].str());
    if (den == 0) fail(ErrorKind::kParse, "zero denominator in '" + text + "'");
    v = make_rational(BigInt(m[1].str()), den);
  }
  if (m[3].matched) v *= pow10(std::stol(m[3].str()));
  return v;
}

std::string format_word(const std::vector<BigInt>& word) {
  std::string s = "(";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + word[i].get_str();
  return s + ")";
}

// "1;2;2,1" -> {(1), (2), (2,1)}.
std::vector<std::vector<BigInt>> parse_words(const std::string& text) {
  std::vector<std::vector<BigInt>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<BigInt> word;
    std::stringstream ws(item);
    std::string q;
    while (std::getline(ws, q, ',')) {
      if (q.empty() || !std::all_of(q.begin(), q.end(), ::isdigit) || BigInt(q) < 1) {
        fail(ErrorKind::kParse, "bad quotient '" + q + "' in word list");
      }
      word.emplace_back(q);
    }
    if (word.empty()) fail(ErrorKind::kParse, "empty word in list");
    out.push_back(std::move(word));
  }
  if (out.empty()) fail(ErrorKind::kParse, "no words given");
  return out;
}

Json to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

// ---------------------------------------------------------------- expand

void cmd_expand(const std::string& alpha_text, const RunConfig& cfg, std::ostream& out) {
  AlphaArg a = parse_alpha(alpha_text);
  CFExpansion cf = a.value ? expand(*a.value) : *a.truncated;
  std::string literal = a.value ? format_number_literal(*a.value) : "";
  if (cfg.format == "json") {
    Json j = json_header("expand");
    j["alpha"] = literal;
    j["cf"] = format_cf_literal(cf);
    j["a0"] = cf.a0.get_str();
    j["preperiod"] = to_json(cf.preperiod);
    j["period"] = to_json(cf.period);
    j["finite"] = cf.finite;
    j["truncated"] = cf.truncated;
    out << j.dump(2) << "\n";
    return;
  }
  csv_header(out, "expand", "alpha,cf");
  out << literal << "," << format_cf_literal(cf) << "\n";
}

// ----------------------------------------------------------- convergents

std::size_t usable_horizon(const QuadraticSurd& alpha, std::size_t horizon) {
  if (!alpha.is_rational()) return horizon;
  return std::min(horizon, expand(alpha).preperiod.size());
}

void cmd_convergents(const std::string& alpha_text, const RunConfig& cfg, std::ostream& out) {
  QuadraticSurd alpha = exact_alpha(alpha_text);
  ConvergentTable table(alpha, usable_horizon(alpha, cfg.horizon));
  if (cfg.format == "json") {
    Json j = json_header("convergents");
    j["alpha"] = format_number_literal(alpha);
    Json rows = Json::array();
    for (const auto& r : table.records()) {
      rows.push_back({{"nu", r.nu}, {"a", table.quotient(r.nu).get_str()}, {"p", r.p.get_str()},
                      {"q", r.q.get_str()}, {"alpha_star", r.alpha_star.get_str()},
                      {"xi", r.xi.to_string()}, {"xi_decimal", sci(r.xi)}});
    }
    j["rows"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  csv_header(out, "convergents", "nu,a,p,q,alpha_star,xi,xi_decimal");
  for (const auto& r : table.records()) {
    out << r.nu << "," << table.quotient(r.nu) << "," << r.p << "," << r.q << "," << r.alpha_star.get_str()
        << "," << r.xi.to_string() << "," << sci(r.xi) << "\n";
  }
}

// -------------------------------------------------------------- legendre

void cmd_legendre(const std::string& alpha_text, const RunConfig& cfg, std::ostream& out) {
  QuadraticSurd alpha = exact_alpha(alpha_text);
  ConvergentTable table(alpha, usable_horizon(alpha, cfg.horizon));
  LegendreChain chain = build_chain(table, table.horizon());
  auto gap_of = [&](std::size_t n) {
    return n < chain.gaps.size() ? std::string(to_string(chain.gaps[n].kind)) : std::string();
  };
  if (cfg.format == "json") {
    Json j = json_header("legendre");
    j["alpha"] = format_number_literal(alpha);
    Json nodes = Json::array();
    for (const auto& node : chain.nodes) {
      nodes.push_back({{"n", node.n}, {"Q", node.q.get_str()}, {"err", node.err.to_string()},
                       {"err_num_approx", sci(node.err)}, {"source_nu", node.source_nu},
                       {"gap_kind", gap_of(node.n)}});
    }
    j["nodes"] = nodes;
    out << j.dump(2) << "\n";
    return;
  }
  csv_header(out, "legendre", "n,Q,err_num_approx,source_nu,gap_kind");
  for (const auto& node : chain.nodes) {
    out << node.n << "," << node.q << "," << sci(node.err) << "," << node.source_nu << "," << gap_of(node.n)
        << "\n";
  }
}

// -------------------------------------------------------------------- mu

struct MuOptions {
  std::string alpha;
  std::string t_min;
  std::string t_max = "1000";
  std::size_t samples = 100;
};

void cmd_mu(const MuOptions& opt, const RunConfig& cfg, std::ostream& out) {
  QuadraticSurd alpha = exact_alpha(opt.alpha);
  BigRational t_max = parse_bound(opt.t_max);
  ChainedTable ct = chain_covering(alpha, ceil_of(t_max));
  BigRational t_min = opt.t_min.empty() ? BigRational(ct.chain.first_q()) : parse_bound(opt.t_min);
  if (t_max <= t_min) config_fail("--t-max must exceed --t-min");
  if (opt.samples < 2) config_fail("--samples must be at least 2");

  struct Row {
    std::string kind;
    QuadraticSurd t, mu, t_mu;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    BigRational t = t_min + (t_max - t_min) * make_rational(static_cast<long>(k), static_cast<long>(opt.samples - 1));
    QuadraticSurd mu = mu_eval(ct.chain, t);
    rows.push_back({"sample", QuadraticSurd(t), mu, QuadraticSurd(t) * mu});
  }
  for (const auto& gap : ct.chain.gaps) {
    SegmentPeak peak = segment_peak(ct.table, gap);
    if (peak.t_star < QuadraticSurd(t_min) || peak.t_star > QuadraticSurd(t_max)) continue;
    rows.push_back({"peak-" + std::string(to_string(gap.kind)), peak.t_star, peak.mu_star, peak.value});
  }

  if (cfg.format == "json") {
    Json j = json_header("mu");
    j["alpha"] = format_number_literal(alpha);
    j["t_min"] = t_min.get_str();
    j["t_max"] = t_max.get_str();
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"kind", r.kind}, {"t", sci(r.t)}, {"mu", sci(r.mu)}, {"t_mu", sci(r.t_mu)},
                     {"exact", r.t_mu.to_string()}});
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return;
  }
  csv_header(out, "mu", "kind,t,mu,t_mu,exact");
  for (const auto& r : rows) {
    out << r.kind << "," << sci(r.t) << "," << sci(r.mu) << "," << sci(r.t_mu) << "," << r.t_mu.to_string()
        << "\n";
  }
}

// --------------------------------------------------------------- spectra

struct SpectraOptions {
  std::string alpha;
  std::string generator;
  std::size_t terms = 40;
  std::size_t window = kDefaultWindow;
};

CFExpansion generated_word(const SpectraOptions& opt) {
  const std::string& g = opt.generator;
  if (g == "alpha-minus:linear") return make_alpha_minus(growth_values(Growth::kLinear, opt.terms));
  if (g == "alpha-minus:pow2") return make_alpha_minus(growth_values(Growth::kPow2, opt.terms));
  if (g == "alpha-minus:constant") return make_alpha_minus(growth_values(Growth::kConstant, opt.terms));
  // a_{3k} = k + 2
  if (g == "alpha-plus:linear") return make_alpha_plus(growth_values(Growth::kLinear, opt.terms / 3, 3), opt.terms);
  fail(ErrorKind::kInvalidSpec, "unknown generator '" + g +
                                    "' (alpha-minus:linear|pow2|constant, alpha-plus:linear)");
}

void cmd_spectra(const SpectraOptions& opt, const RunConfig& cfg, std::ostream& out) {
  if (opt.alpha.empty() == opt.generator.empty()) config_fail("give exactly one of --alpha and --generator");
  SpectraReport rep;
  std::string subject;
  if (!opt.generator.empty()) {
    CFExpansion cf = generated_word(opt);
    subject = format_cf_literal(cf);
    rep = spectra_of(cf, cfg.precision_bits, opt.window);
  } else {
    AlphaArg a = parse_alpha(opt.alpha);
    if (a.value) {
      subject = format_number_literal(*a.value);
      rep = spectra_of(*a.value, cfg.precision_bits);
    } else {
      subject = format_cf_literal(*a.truncated);
      rep = spectra_of(*a.truncated, cfg.precision_bits, opt.window);
    }
  }

  std::vector<std::pair<std::string, const SpectrumValue*>> rows = {
      {"lambda", &rep.lambda}, {"d", &rep.dirichlet}, {"m", &rep.m}};
  if (rep.m_adjacent) rows.emplace_back("m_adjacent", &*rep.m_adjacent);
  if (rep.m_skip) rows.emplace_back("m_skip", &*rep.m_skip);
  auto decimal = [](const SpectrumValue& v) {
    return v.exact ? fixed(*v.exact) : fixed(QuadraticSurd(v.enclosure.midpoint()));
  };

  if (cfg.format == "json") {
    Json j = json_header("spectra");
    j["alpha"] = subject;
    j["exact"] = rep.exact;
    j["convergence_guaranteed"] = rep.convergence_guaranteed;
    j["horizon_used"] = rep.horizon_used;
    j["precision_bits"] = cfg.precision_bits;
    for (const auto& [name, v] : rows) {
      j[name] = {{"exact", v->exact ? v->exact->to_string() : ""},
                 {"decimal", decimal(*v)},
                 {"lo", fixed(QuadraticSurd(v->enclosure.lo))},
                 {"hi", fixed(QuadraticSurd(v->enclosure.hi))}};
    }
    Json peaks = Json::array();
    for (const auto& p : rep.peaks) {
      peaks.push_back({{"nu", p.nu}, {"kind", std::string(to_string(p.kind))}, {"decimal", decimal(p.value)}});
    }
    j["peaks"] = peaks;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# " << kSchema << " spectra\n";
  out << "# alpha=" << subject << " exact=" << (rep.exact ? "true" : "false")
      << " convergence_guaranteed=" << (rep.convergence_guaranteed ? "true" : "false")
      << " horizon_used=" << rep.horizon_used << "\n";
  out << "quantity,exact,decimal,lo,hi,precision_bits\n";
  for (const auto& [name, v] : rows) {
    out << name << "," << (v->exact ? v->exact->to_string() : "") << "," << decimal(*v) << ","
        << fixed(QuadraticSurd(v->enclosure.lo)) << "," << fixed(QuadraticSurd(v->enclosure.hi)) << ","
        << cfg.precision_bits << "\n";
  }
}

// ---------------------------------------------------------------- sample

struct SampleOptions {
  std::string words;
  std::size_t max_period = 0;
  long max_quotient = 0;
};

void cmd_sample(const SampleOptions& opt, const RunConfig& cfg, std::ostream& out) {
  std::vector<std::vector<BigInt>> words;
  if (!opt.words.empty()) {
    words = parse_words(opt.words);
  } else {
    if (opt.max_period < 1 || opt.max_quotient < 1) {
      config_fail("give --words or both --max-period and --max-quotient");
    }
    words = periodic_words(opt.max_period, opt.max_quotient);
  }
  SampleResult res = sample_m(words, cfg.jobs);
  if (cfg.format == "json") {
    Json j = json_header("sample");
    Json arr = Json::array();
    for (const auto& e : res.entries) {
      arr.push_back({{"word", format_word(e.period)}, {"m_exact", e.m.to_string()}, {"m_decimal", fixed(e.m)}});
    }
    j["entries"] = arr;
    j["min"] = {{"exact", res.min.to_string()}, {"decimal", fixed(res.min)}};
    j["max"] = {{"exact", res.max.to_string()}, {"decimal", fixed(res.max)}};
    out << j.dump(2) << "\n";
    return;
  }
  csv_header(out, "sample", "word,m_exact,m_decimal");
  for (const auto& e : res.entries) {
    out << format_word(e.period) << "," << e.m.to_string() << "," << fixed(e.m) << "\n";
  }
  out << "# min=" << res.min.to_string() << " max=" << res.max.to_string() << "\n";
}

// --------------------------------------------------------------- compare

struct CompareOptions {
  std::string alpha;
  std::string beta;
  std::string t_min = "10";
  std::string t_max = "1e6";
  std::string breakpoints;
};

void cmd_compare(const CompareOptions& opt, const RunConfig& cfg, std::ostream& out) {
  QuadraticSurd alpha = exact_alpha(opt.alpha);
  QuadraticSurd beta = exact_alpha(opt.beta);
  CompareConfig cc{cfg.precision_bits, cfg.refinement_cap_bits};
  CrossingReport r = find_crossings(alpha, beta, parse_bound(opt.t_min), parse_bound(opt.t_max), cc);

  if (!opt.breakpoints.empty()) {
    std::ofstream f(opt.breakpoints);
    if (!f) config_fail("cannot write " + opt.breakpoints);
    f << "# " << kSchema << " compare-breakpoints\n" << "t,mu_alpha,mu_beta,sign\n";
    for (const auto& s : r.samples) {
      f << s.t.get_str() << "," << sci(s.mu_alpha) << "," << sci(s.mu_beta) << ","
        << (s.sign ? std::to_string(*s.sign) : "undecided") << "\n";
    }
  }

  auto opt_str = [](const std::optional<BigRational>& v) { return v ? Json(v->get_str()) : Json(nullptr); };
  if (cfg.format == "json") {
    Json j = json_header("compare");
    j["alpha"] = format_number_literal(alpha);
    j["beta"] = format_number_literal(beta);
    j["t_range"] = {r.t_lo.get_str(), r.t_hi.get_str()};
    j["breakpoints"] = r.samples.size();
    Json cs = Json::array();
    for (const auto& c : r.crossings) {
      cs.push_back({{"lo", c.lo.get_str()}, {"hi", c.hi.get_str()}, {"root_estimate", c.root_estimate}});
    }
    j["crossings"] = cs;
    Json un = Json::array();
    for (const auto& [lo, hi] : r.undecided) un.push_back({lo.get_str(), hi.get_str()});
    j["undecided"] = un;
    j["predicted_sign"] = r.predicted_sign ? Json(*r.predicted_sign) : Json(nullptr);
    j["dominance_t0"] = opt_str(r.dominance_t0);
    j["precondition_holds"] = r.precondition_holds ? Json(*r.precondition_holds) : Json(nullptr);
    j["final_sign"] = r.final_sign;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# " << kSchema << " compare\n";
  out << "# alpha=" << format_number_literal(alpha) << " beta=" << format_number_literal(beta)
      << " breakpoints=" << r.samples.size() << " final_sign=" << r.final_sign
      << " dominance_t0=" << (r.dominance_t0 ? r.dominance_t0->get_str() : "none") << " precondition_holds="
      << (r.precondition_holds ? (*r.precondition_holds ? "true" : "false") : "n/a") << "\n";
  out << "kind,lo,hi,root_estimate\n";
  for (const auto& c : r.crossings) {
    out << "crossing," << c.lo.get_str() << "," << c.hi.get_str() << "," << c.root_estimate << "\n";
  }
  for (const auto& [lo, hi] : r.undecided) out << "undecided," << lo.get_str() << "," << hi.get_str() << ",\n";
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::vector<std::string> alphas;
  long grid = 200;
};

int cmd_verify(const VerifyOptions& opt, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> texts = opt.alphas;
  if (texts.empty()) texts = {"surd:(1+1*sqrt5)/2", "surd:(0+1*sqrt2)/1", "surd:(1+1*sqrt3)/2"};
  std::vector<VerifyReport> reports;
  for (const auto& t : texts) reports.push_back(verify_alpha(exact_alpha(t), cfg.horizon));
  CheckTally grid = verify_f_extremes_grid(opt.grid);

  std::size_t failures = grid.failed;
  for (const auto& r : reports) failures += r.failures();
  auto status = [](const CheckTally& c) { return c.failed == 0 ? "pass" : "FAIL"; };

  if (cfg.format == "json") {
    Json j = json_header("verify");
    j["horizon"] = cfg.horizon;
    Json arr = Json::array();
    auto row = [&](const std::string& subject, const CheckTally& c) {
      arr.push_back({{"alpha", subject}, {"check", c.name}, {"passed", c.passed}, {"failed", c.failed},
                     {"skipped", c.skipped}, {"status", status(c)}});
    };
    for (const auto& r : reports) {
      for (const auto& c : r.checks) row(r.alpha, c);
    }
    row("grid" + std::to_string(opt.grid), grid);
    j["checks"] = arr;
    j["all_passed"] = failures == 0;
    out << j.dump(2) << "\n";
  } else {
    csv_header(out, "verify", "alpha,check,passed,failed,skipped,status");
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        out << r.alpha << "," << c.name << "," << c.passed << "," << c.failed << "," << c.skipped << ","
            << status(c) << "\n";
      }
    }
    out << "grid" << opt.grid << "," << grid.name << "," << grid.passed << "," << grid.failed << ","
        << grid.skipped << "," << status(grid) << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      for (const auto& f : c.failures) err << "mcf verify: " << r.alpha << " " << c.name << " failed at " << f << "\n";
    }
  }
  for (const auto& f : grid.failures) err << "mcf verify: F-extremes failed at " << f << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

std::string exit_code_table() {
  std::ostringstream s;
  s << "Exit codes:\n"
    << "  0   success\n"
    << "  1   verify: at least one check failed\n"
    << "  2   usage error\n";
  for (int k = 0; k <= static_cast<int>(ErrorKind::kConfig); ++k) {
    auto kind = static_cast<ErrorKind>(k);
    s << "  " << exit_code_of(kind) << "  " << module_of(kind) << ": " << name_of(kind) << "\n";
  }
  return s.str();
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 64) config_fail("precision must be at least 64 bits");
  if (horizon < 10) config_fail("horizon must be at least 10");
  if (refinement_cap_bits < precision_bits) config_fail("refinement cap must be at least the precision");
  if (jobs < 1) config_fail("jobs must be at least 1");
  if (format != "csv" && format != "json") config_fail("format must be csv or json");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minkowski diagonal continued fractions: exact convergents, Legendre chains, mu_alpha and the "
               "constants lambda, d, m.",
               "mcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(exit_code_table());

  RunConfig cfg;
  std::string format;
  app.add_option("--precision-bits", cfg.precision_bits, "Enclosure precision (default 256)")
      ->envname("MCF_PRECISION_BITS");
  app.add_option("--horizon", cfg.horizon, "Convergents to build (default 200)");
  app.add_option("--format", format, "csv or json");
  app.add_option("--refinement-cap-bits", cfg.refinement_cap_bits,
                 "Precision cap for cross-field comparisons (default 1024)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for sample (default 1)");

  std::string alpha;
  auto* expand_cmd = app.add_subcommand("expand", "Continued fraction of a literal");
  expand_cmd->add_option("--alpha", alpha, "rat:, surd: or cf: literal")->required();

  auto* conv_cmd = app.add_subcommand("convergents", "Convergent table p, q, alpha*, ||q alpha||");
  conv_cmd->add_option("--alpha", alpha)->required();

  auto* leg_cmd = app.add_subcommand("legendre", "Legendre chain with gap classes");
  leg_cmd->add_option("--alpha", alpha)->required();

  MuOptions mu_opt;
  auto* mu_cmd = app.add_subcommand("mu", "Samples of mu_alpha and its exact segment peaks");
  mu_cmd->add_option("--alpha", mu_opt.alpha)->required();
  mu_cmd->add_option("--t-min", mu_opt.t_min, "Default: first chain denominator");
  mu_cmd->add_option("--t-max", mu_opt.t_max, "Default 1000");
  mu_cmd->add_option("--samples", mu_opt.samples, "Default 100");

  SpectraOptions sp_opt;
  auto* sp_cmd = app.add_subcommand("spectra", "lambda, d and m");
  sp_cmd->add_option("--alpha", sp_opt.alpha);
  sp_cmd->add_option("--generator", sp_opt.generator, "alpha-minus:linear|pow2, alpha-plus:linear");
  sp_cmd->add_option("--terms", sp_opt.terms, "Quotients in a generated word (default 40)");
  sp_cmd->add_option("--window", sp_opt.window, "Terms in a finite-horizon estimate (default 6)");

  SampleOptions sa_opt;
  auto* sa_cmd = app.add_subcommand("sample", "Exact m over periodic words");
  sa_cmd->add_option("--words", sa_opt.words, "Periods, e.g. \"1;2;2,1\"");
  sa_cmd->add_option("--max-period", sa_opt.max_period);
  sa_cmd->add_option("--max-quotient", sa_opt.max_quotient);

  CompareOptions co_opt;
  auto* co_cmd = app.add_subcommand("compare", "Sign changes of mu_alpha - mu_beta");
  co_cmd->add_option("--alpha", co_opt.alpha)->required();
  co_cmd->add_option("--beta", co_opt.beta)->required();
  co_cmd->add_option("--t-min", co_opt.t_min, "Default 10");
  co_cmd->add_option("--t-max", co_opt.t_max, "Default 1e6");
  co_cmd->add_option("--breakpoints", co_opt.breakpoints, "Write per-breakpoint CSV to this file");

  VerifyOptions ve_opt;
  auto* ve_cmd = app.add_subcommand("verify", "Exact identity and inequality suite");
  ve_cmd->add_option("--alpha", ve_opt.alphas, "Repeatable; default: the three worked examples");
  ve_cmd->add_option("--grid", ve_opt.grid, "Grid size for the F extremes check (default 200)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!format.empty()) {
      cfg.format = format;
    } else if (co_cmd->parsed()) {
      cfg.format = "json";
    }
    cfg.validate();
    if (expand_cmd->parsed()) cmd_expand(alpha, cfg, out);
    if (conv_cmd->parsed()) cmd_convergents(alpha, cfg, out);
    if (leg_cmd->parsed()) cmd_legendre(alpha, cfg, out);
    if (mu_cmd->parsed()) cmd_mu(mu_opt, cfg, out);
    if (sp_cmd->parsed()) cmd_spectra(sp_opt, cfg, out);
    if (sa_cmd->parsed()) cmd_sample(sa_opt, cfg, out);
    if (co_cmd->parsed()) cmd_compare(co_opt, cfg, out);
    if (ve_cmd->parsed()) return cmd_verify(ve_opt, cfg, out, err);
  } catch (const Error& e) {
    err << "mcf: " << e.what() << "\n";
    return e.exit_code();
  }
  return kExitOk;
}

}  // namespace mcf::cli
