/*
   Copyright 2026 The psibounds Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include <psibounds/cli.hpp>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = psib::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("psibounds_test_cli_" + name);
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--fn", "phi", "--x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-3.5890810288614", 0) == 0);

  r = run({"eval", "--fn", "digamma", "--x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-5.77215664901532", 0) == 0);
  CHECK(r.out.back() == '\n');

  r = run({"eval", "--fn", "digamma", "--x", "-1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("domain: x must be > 0") != std::string::npos);

  CHECK(run({"eval", "--fn", "gamma", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--fn", "phi", "--x", "nan"}).code == 2);
  CHECK(run({"eval", "--fn", "phi", "--x", "abc"}).code == 2);
  CHECK(run({"eval", "--fn", "phi"}).code == 2);
  CHECK(run({"eval", "--fn", "phi", "--x", "1", "--bogus"}).code == 2);
  CHECK(run({"eval", "--fn", "trigamma", "--x", "1e-200"}).code == 2);
}

TEST_CASE("bound") {
  auto r = run({"bound", "--harmonic", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1.0000000000000000 <= H_1 < 1.0099677944687", 0) == 0);

  r = run({"bound", "--psi", "--x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1.1185405195144", 0) == 0);
  CHECK(r.out.find(" < psi(1) < -0.5413248546129") != std::string::npos);

  r = run({"bound", "--harmonic", "--n", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be >= 1") != std::string::npos);

  CHECK(run({"bound"}).code == 2);
  CHECK(run({"bound", "--psi"}).code == 2);
  CHECK(run({"bound", "--psi", "--harmonic", "--x", "1", "--n", "1"}).code == 2);
  CHECK(run({"bound", "--psi", "--x", "0"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--points", "10", "--n-max", "100"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("PROPERTY ", 0) == 0);
    CHECK(line.find("result=PASS") != std::string::npos);
    ++count;
  }
  CHECK(count == 6);

  CHECK(run({"verify", "--grid-start", "0"}).code == 2);
  CHECK(run({"verify", "--points", "1"}).code == 2);
  CHECK(run({"verify", "--n-max", "0"}).code == 2);

  // A grid where f' drops below resolution fails the monotonicity check.
  r = run({"verify", "--grid-start", "1e6", "--grid-stop", "1e7", "--points", "20", "--n-max", "10"});
  CHECK(r.code == 1);
  CHECK(r.out.find("PROPERTY monotonicity points=20 result=FAIL") != std::string::npos);
}

TEST_CASE("verify writes a CSV report") {
  const auto path = temp_path("report.csv");
  const auto r = run({"verify", "--points", "10", "--n-max", "10", "--report-csv", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "property,points,result,worst_margin,violations,error");
  std::filesystem::remove(path);
}

TEST_CASE("table") {
  const auto path = temp_path("table.csv");
  auto r = run({"table", "--n-max", "5", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) {
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "n,H_exact,lower,upper,slack_lower,slack_upper");
  CHECK(rows[1].rfind("1,1,1,1.00996779446872", 0) == 0);
  CHECK(rows[1].find(",0,0.0099677944687") != std::string::npos);
  CHECK(rows[4].rfind("4,2.0833333333333335,", 0) == 0);
  std::filesystem::remove(path);

  CHECK(run({"table", "--n-max", "0", "--out", path.string()}).code == 2);
  CHECK(run({"table", "--n-max", "3", "--out", "/nonexistent-dir/x.csv"}).code == 2);
  CHECK(run({"table", "--n-max", "3"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  CHECK(run({"eval", "--help"}).code == 0);
}
