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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "mcf/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mcf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("spectra prints exact forms and tagged decimals") {
  Result r = invoke({"spectra", "--alpha", "surd:(1+1*sqrt5)/2"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "# mcf/1 spectra"));
  CHECK(has(r.out, "lambda,(0+1*sqrt5)/5,0.447213595499957939281834733746,"));
  CHECK(has(r.out, "d,(5+1*sqrt5)/10,0.723606797749978969640917366873,"));
  CHECK(has(r.out, "m,(5+2*sqrt5)/20,0.473606797749978969640917366873,"));
  CHECK(has(r.out, ",256\n"));

  Result j = invoke({"--format", "json", "spectra", "--alpha", "surd:(0+1*sqrt2)/1"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "mcf/1");
  CHECK(doc["m"]["exact"] == "(2+1*sqrt2)/8");
  CHECK(doc["exact"] == true);
}

TEST_CASE("spectra generators report finite-horizon estimates") {
  Result r = invoke({"spectra", "--generator", "alpha-plus:linear", "--terms", "45", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["exact"] == false);
  CHECK(doc["convergence_guaranteed"] == false);
  CHECK(std::stod(doc["m"]["decimal"].get<std::string>()) == doctest::Approx(0.5).epsilon(0.04));
  CHECK(invoke({"spectra", "--generator", "alpha-minus:constant"}).code == 21);
  CHECK(invoke({"spectra"}).code == 25);
}

TEST_CASE("output is byte-identical across runs") {
  std::vector<std::string> args = {"mu", "--alpha", "surd:(1+1*sqrt3)/2", "--t-max", "500", "--samples", "50"};
  Result a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a.out, "kind,t,mu,t_mu,exact"));
  CHECK(has(a.out, "peak-skip,"));
}

TEST_CASE("expand, convergents and legendre") {
  Result e = invoke({"expand", "--alpha", "rat:355/113"});
  CHECK(has(e.out, "rat:355/113,cf:[3;7,16]"));
  Result p = invoke({"expand", "--alpha", "surd:(1+1*sqrt3)/2"});
  CHECK(has(p.out, "cf:[1;(2,1)]"));

  Result c = invoke({"convergents", "--alpha", "rat:355/113"});
  REQUIRE(c.code == 0);
  CHECK(has(c.out, "\n2,16,355,113,7/113,0,0\n"));

  Result l = invoke({"legendre", "--alpha", "surd:(1+1*sqrt3)/2", "--horizon", "10"});
  REQUIRE(l.code == 0);
  CHECK(has(l.out, "n,Q,err_num_approx,source_nu,gap_kind"));
  CHECK(has(l.out, ",skip\n"));
  CHECK(invoke({"legendre", "--alpha", "rat:355/113"}).code == 15);
}

TEST_CASE("sample over explicit words") {
  Result r = invoke({"sample", "--words", "1;2;2,1", "--jobs", "2"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "(1),(5+2*sqrt5)/20,0.473606797749978969640917366873"));
  CHECK(has(r.out, "(2),(2+1*sqrt2)/8,"));
  CHECK(has(r.out, "(2,1),(0+1*sqrt3)/4,"));
  CHECK(invoke({"sample", "--words", "1;x"}).code == 12);
}

TEST_CASE("compare reports dominance and writes breakpoints") {
  std::string path = "compare_breakpoints_test.csv";
  Result r = invoke({"compare", "--alpha", "surd:(0+1*sqrt2)/1", "--beta", "surd:(1+1*sqrt5)/2", "--t-max",
                     "1e5", "--breakpoints", path});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["predicted_sign"] == -1);
  CHECK(doc["final_sign"] == -1);
  CHECK_FALSE(doc["dominance_t0"].is_null());
  std::ifstream f(path);
  std::string header, columns;
  std::getline(f, header);
  std::getline(f, columns);
  CHECK(columns == "t,mu_alpha,mu_beta,sign");
  f.close();
  std::remove(path.c_str());

  CHECK(invoke({"compare", "--alpha", "surd:(0+1*sqrt2)/1", "--beta", "surd:(0+1*sqrt2)/1"}).code == 24);
}

TEST_CASE("verify exits cleanly on the worked examples") {
  Result r = invoke({"verify", "--horizon", "40", "--grid", "50"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "surd:(1+1*sqrt5)/2,skip-peak=G,"));
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(r.err.empty());
}

TEST_CASE("configuration is validated") {
  CHECK(invoke({"--precision-bits", "32", "spectra", "--alpha", "surd:(0+1*sqrt2)/1"}).code == 25);
  CHECK(invoke({"--horizon", "5", "verify"}).code == 25);
  CHECK(invoke({"--precision-bits", "2048", "spectra", "--alpha", "surd:(0+1*sqrt2)/1"}).code == 25);
  CHECK(invoke({"--format", "xml", "expand", "--alpha", "rat:1/2"}).code == 25);
  setenv("MCF_PRECISION_BITS", "32", 1);
  CHECK(invoke({"spectra", "--alpha", "surd:(0+1*sqrt2)/1"}).code == 25);
  setenv("MCF_PRECISION_BITS", "512", 1);
  Result r = invoke({"--refinement-cap-bits", "1024", "spectra", "--alpha", "surd:(0+1*sqrt2)/1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, ",512\n"));
  unsetenv("MCF_PRECISION_BITS");
}

TEST_CASE("usage errors and module errors map to distinct codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"spectra", "--alpha"}).code == 2);
  Result bad = invoke({"spectra", "--alpha", "1.618"});
  CHECK(bad.code == 12);
  CHECK(has(bad.err, "exact-numbers: parse:"));
  CHECK(invoke({"spectra", "--alpha", "rat:3/2"}).code == 20);
  Result help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(has(help.out, "Exit codes:"));
}
