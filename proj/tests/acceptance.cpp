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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All thresholds are fixed below.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <psibounds/bounds.hpp>
#include <psibounds/cli.hpp>
#include <psibounds/format.hpp>
#include <psibounds/oracle.hpp>
#include <psibounds/polygamma.hpp>
#include <psibounds/verifier.hpp>

using namespace psib;

namespace {

// AC1
constexpr std::int64_t kAc1NMax = 10'000;
constexpr double kAc1Tol = 1e-12;
constexpr double kAc1Seconds = 2.0;
// AC2, AC3
constexpr double kGridStart = 1e-3;
constexpr double kGridStop = 1e3;
constexpr std::size_t kGridCount = 100'000;
constexpr double kAc2Seconds = 2.0;
// AC4
constexpr std::int64_t kAc4NMax = 10'000;
constexpr double kAc4GapTol = 1e-4;
// AC5
constexpr double kAc5XSmall = 1e-3;
constexpr double kAc5XLarge = 1e4;
constexpr double kAc5TolSmall = 1e-2;
constexpr double kAc5TolLarge = 1e-4;
// AC6
constexpr double kAc6Start = 0.1;
constexpr double kAc6Stop = 100.0;
constexpr std::size_t kAc6Count = 10'000;
// AC7
constexpr int kAc7Samples = 100;
constexpr double kAc7Ulps = 1.0;
constexpr std::uint64_t kAc7Seed = 7;
// AC8
constexpr std::size_t kAc8Count = 1'000;
constexpr double kAc8Start = 1e-300;
constexpr double kAc8Stop = 1e300;
// AC9
constexpr std::size_t kAc9Count = 100;
constexpr double kAc9Start = 1e-2;
constexpr double kAc9Stop = 1e2;
constexpr double kAc9RelStep = 1e-5;
constexpr double kAc9Tol = 1e-6;
// AC10
constexpr std::int64_t kAc10TableN = 10'000;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double ulp(double v) {
  const double a = std::fabs(v);
  return std::nextafter(a, INFINITY) - a;
}

std::vector<double> log_grid(double start, double stop, std::size_t count) {
  GridSpec g;
  g.start = start;
  g.stop = stop;
  g.count = count;
  g.spacing = Spacing::log;
  return g.points();
}

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

Outcome ac1() {
  const auto t0 = Clock::now();
  HarmonicSweep sweep;
  double worst = 0.0;
  for (std::int64_t n = 1; n <= kAc1NMax; ++n) {
    const double ref = digamma_from_harmonic(sweep.advance());
    worst = std::fmax(worst, std::fabs(digamma(static_cast<double>(n + 1)) - ref));
  }
  const double dt = seconds_since(t0);
  return {worst <= kAc1Tol && dt < kAc1Seconds,
          join({"max_abs_err=" + format_g17(worst), "tol=" + format_g17(kAc1Tol),
                "seconds=" + format_g17(dt)})};
}

PropertyReport grid_report(const std::function<PropertyReport(const GridSpec&)>& check) {
  GridSpec g;
  g.start = kGridStart;
  g.stop = kGridStop;
  g.count = kGridCount;
  return check(g);
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const auto xs = log_grid(kGridStart, kGridStop, kGridCount);
  double worst = INFINITY;
  std::size_t bad = 0;
  for (double x : xs) {
    const double d = f_prime(x);
    worst = std::fmin(worst, d);
    if (!(d > 0.0)) ++bad;
  }
  const double dt = seconds_since(t0);
  const auto report = grid_report([](const GridSpec& g) { return verify_monotonicity(g); });
  return {bad == 0 && worst > 0.0 && report.passed && dt < kAc2Seconds,
          join({"points=" + std::to_string(xs.size()), "violations=" + std::to_string(bad),
                "min_fprime=" + format_g17(worst), "verifier=" + std::string(report.passed ? "PASS" : "FAIL"),
                "seconds=" + format_g17(dt)})};
}

Outcome ac3() {
  const auto xs = log_grid(kGridStart, kGridStop, kGridCount);
  double worst = INFINITY;
  std::size_t bad = 0;
  for (double x : xs) {
    const double p = positivity_expr(x);
    worst = std::fmin(worst, p);
    if (!(p > 0.0)) ++bad;
  }
  return {bad == 0 && worst > 0.0,
          join({"points=" + std::to_string(xs.size()), "violations=" + std::to_string(bad),
                "min_value=" + format_g17(worst)})};
}

Outcome ac4() {
  HarmonicSweep sweep;
  std::size_t bad_containment = 0;
  std::size_t lower_equalities = 0;
  bool equality_at_one = false;
  bool gap_monotone = true;
  mpq_class prev_gap;
  mpq_class gap;
  for (std::int64_t n = 1; n <= kAc4NMax; ++n) {
    const ExactRational& h = sweep.advance();
    const Interval e = harmonic_enclosure(n);
    const mpq_class lo = ExactRational::from_double(e.lo).value();
    const mpq_class hi = ExactRational::from_double(e.hi).value();
    if (!(lo <= h.value() && h.value() < hi)) ++bad_containment;
    // Equality at the lower end means within one ulp of lo.
    mpq_class slack = h.value() - lo;
    if (slack <= mpq_class(ExactRational::from_double(ulp(e.lo)).value())) {
      ++lower_equalities;
      if (n == 1 && slack == 0) equality_at_one = true;
    }
    gap = hi - h.value();
    if (n > 1 && !(gap < prev_gap)) gap_monotone = false;
    prev_gap = gap;
  }
  const double last_gap = round_to_double(gap);
  const bool pass = bad_containment == 0 && equality_at_one && lower_equalities == 1 &&
                    gap_monotone && last_gap <= kAc4GapTol;
  return {pass, join({"n_max=" + std::to_string(kAc4NMax),
                      "containment_failures=" + std::to_string(bad_containment),
                      "lower_equalities=" + std::to_string(lower_equalities),
                      std::string("equality_at_n1=") + (equality_at_one ? "yes" : "no"),
                      std::string("gap_monotone=") + (gap_monotone ? "yes" : "no"),
                      "gap_at_n_max=" + format_g17(last_gap), "tol=" + format_g17(kAc4GapTol)})};
}

Outcome ac5() {
  const double small = std::fabs(phi(kAc5XSmall) + kEulerGamma);
  const double small_half = std::fabs(phi(kAc5XSmall / 2) + kEulerGamma);
  const double large = std::fabs(phi(kAc5XLarge));
  const double large_double = std::fabs(phi(kAc5XLarge * 2));
  const bool pass = small <= kAc5TolSmall && large <= kAc5TolLarge && small_half < small &&
                    large_double < large;
  return {pass, join({"|phi(1e-3)+gamma|=" + format_g17(small),
                      "|phi(5e-4)+gamma|=" + format_g17(small_half),
                      "|phi(1e4)|=" + format_g17(large), "|phi(2e4)|=" + format_g17(large_double)})};
}

Outcome ac6() {
  GridSpec g;
  g.start = kAc6Start;
  g.stop = kAc6Stop;
  g.count = kAc6Count;
  g.spacing = Spacing::linear;
  const auto xs = g.points();
  std::vector<double> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = phi(xs[i]);
  std::size_t bad = 0;
  double worst = -INFINITY;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double d = v[i - 1] - 2 * v[i] + v[i + 1];
    worst = std::fmax(worst, d);
    if (!(d < 0.0)) ++bad;
  }
  const auto report = verify_concavity(g);
  return {bad == 0 && report.passed,
          join({"interior_points=" + std::to_string(xs.size() - 2), "violations=" + std::to_string(bad),
                "max_second_difference=" + format_g17(worst),
                "verifier=" + std::string(report.passed ? "PASS" : "FAIL")})};
}

Outcome ac7() {
  // gamma - 1 - ln(sqrt(e) - 1) in extended precision; ln(sqrt(e) - 1) = L(2).
  const mpq_class width_ref = euler_gamma_fixed(40).to_rational() - 1 -
                              log_expm1_recip_reference(2.0, 40).value.to_rational();
  const double width = round_to_double(width_ref);

  std::mt19937_64 rng(kAc7Seed);
  std::uniform_real_distribution<double> expo(-6.0, 6.0);
  std::uniform_int_distribution<std::int64_t> index(1, 1'000'000);
  double worst_psi = 0.0;
  double worst_h = 0.0;
  for (int i = 0; i < kAc7Samples; ++i) {
    const Interval p = psi_enclosure(std::pow(10.0, expo(rng)));
    const double tol_p = kAc7Ulps * ulp(std::fmax(std::fabs(p.lo), std::fabs(p.hi)));
    worst_psi = std::fmax(worst_psi, std::fabs(p.width() - kEulerGamma) / tol_p);
    const Interval h = harmonic_enclosure(index(rng));
    const double tol_h = kAc7Ulps * ulp(std::fmax(std::fabs(h.lo), std::fabs(h.hi)));
    worst_h = std::fmax(worst_h, std::fabs(h.width() - width) / tol_h);
  }
  return {worst_psi <= 1.0 && worst_h <= 1.0,
          join({"samples=" + std::to_string(kAc7Samples),
                "psi_width_err_ulps=" + format_g17(worst_psi),
                "harmonic_width_err_ulps=" + format_g17(worst_h),
                "harmonic_width_ref=" + format_g17(width)})};
}

Outcome ac8() {
  const auto xs = log_grid(kAc8Start, kAc8Stop, kAc8Count);
  const double lo = std::exp(-kEulerGamma);
  std::size_t non_finite = 0;
  std::size_t non_monotone = 0;
  std::size_t f_out_of_range = 0;
  double prev = INFINITY;
  for (double x : xs) {
    const double l = log_expm1_recip(x);
    if (!std::isfinite(l)) ++non_finite;
    if (!(l < prev)) ++non_monotone;
    prev = l;
    const double f = f_func(x);
    if (!(f > lo && f < 1.0)) ++f_out_of_range;
  }
  // f_func also on the criterion-2 grid.
  for (double x : log_grid(kGridStart, kGridStop, kGridCount)) {
    const double f = f_func(x);
    if (!(f > lo && f < 1.0)) ++f_out_of_range;
  }
  return {non_finite == 0 && non_monotone == 0 && f_out_of_range == 0,
          join({"points=" + std::to_string(xs.size()), "non_finite=" + std::to_string(non_finite),
                "non_monotone=" + std::to_string(non_monotone),
                "f_out_of_range=" + std::to_string(f_out_of_range)})};
}

Outcome ac9() {
  double worst = 0.0;
  for (double x : log_grid(kAc9Start, kAc9Stop, kAc9Count)) {
    const double step = kAc9RelStep * x;
    const double fd = (f_func(x + step) - f_func(x - step)) / (2 * step);
    const double fp = f_prime(x);
    worst = std::fmax(worst, std::fabs(fp - fd) / std::fabs(fp));
  }
  return {worst <= kAc9Tol, join({"points=" + std::to_string(kAc9Count),
                                  "max_rel_err=" + format_g17(worst), "tol=" + format_g17(kAc9Tol)})};
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) cells.push_back(cell);
  return cells;
}

// Re-reads a `table` CSV and checks criteria 4 and 7 from the file alone,
// with the exact H_n recomputed for the exact comparisons.
bool revalidate_table(const std::filesystem::path& path, std::string& why) {
  std::ifstream in(path);
  std::string line;
  if (!std::getline(in, line) || line != "n,H_exact,lower,upper,slack_lower,slack_upper") {
    why = "bad_header";
    return false;
  }
  const double width = harmonic_enclosure_width();
  HarmonicSweep sweep;
  std::int64_t expected = 1;
  double prev_slack_upper = INFINITY;
  for (; std::getline(in, line); ++expected) {
    const auto c = split(line, ',');
    if (c.size() != 6 || std::stoll(c[0]) != expected) {
      why = "bad_row_" + std::to_string(expected);
      return false;
    }
    const ExactRational& h = sweep.advance();
    const double h_csv = std::strtod(c[1].c_str(), nullptr);
    const double lower = std::strtod(c[2].c_str(), nullptr);
    const double upper = std::strtod(c[3].c_str(), nullptr);
    const double slack_lower = std::strtod(c[4].c_str(), nullptr);
    const double slack_upper = std::strtod(c[5].c_str(), nullptr);
    if (h_csv != h.to_double()) {
      why = "h_exact_mismatch_" + c[0];
      return false;
    }
    const int lo_cmp = h.compare(lower);
    if (lo_cmp < 0 || (lo_cmp == 0) != (expected == 1) || h.compare(upper) >= 0) {
      why = "containment_" + c[0];
      return false;
    }
    if (slack_lower < 0.0 || (slack_lower == 0.0) != (expected == 1) || !(slack_upper > 0.0)) {
      why = "slack_sign_" + c[0];
      return false;
    }
    if (!(slack_upper < prev_slack_upper)) {
      why = "gap_not_decreasing_" + c[0];
      return false;
    }
    prev_slack_upper = slack_upper;
    const double tol = ulp(std::fmax(std::fabs(lower), std::fabs(upper)));
    if (std::fabs((upper - lower) - width) > tol ||
        std::fabs((slack_lower + slack_upper) - width) > 2 * tol) {
      why = "width_" + c[0];
      return false;
    }
  }
  if (expected - 1 != kAc10TableN) {
    why = "row_count";
    return false;
  }
  if (!(prev_slack_upper <= kAc4GapTol)) {
    why = "final_gap";
    return false;
  }
  return true;
}

Outcome ac10() {
  const bool verify_ok = cli({"verify"}).code == 0;

  const auto bound = cli({"bound", "--harmonic", "--n", "1"});
  const auto cells = split(bound.out, ' ');
  const bool lower_one = bound.code == 0 && !cells.empty() &&
                         std::strtod(cells[0].c_str(), nullptr) == 1.0 && cells.size() > 1 &&
                         cells[1] == "<=";

  const std::vector<std::vector<std::string>> malformed = {
      {},
      {"nonsense"},
      {"eval", "--fn", "digamma", "--x", "-1"},
      {"eval", "--fn", "digamma", "--x", "abc"},
      {"eval", "--fn", "nope", "--x", "1"},
      {"bound", "--harmonic", "--n", "0"},
      {"bound", "--psi", "--x", "0"},
      {"verify", "--grid-start", "0"},
      {"verify", "--unknown-flag"},
      {"table", "--n-max", "0", "--out", "unused.csv"},
      {"table", "--n-max", "5", "--out", "/nonexistent-dir/t.csv"},
  };
  std::size_t malformed_ok = 0;
  for (const auto& args : malformed) {
    if (cli(args).code == 2) ++malformed_ok;
  }

  const auto path = std::filesystem::temp_directory_path() / "psibounds_acceptance_table.csv";
  std::string why = "ok";
  const bool table_ok =
      cli({"table", "--n-max", std::to_string(kAc10TableN), "--out", path.string()}).code == 0 &&
      revalidate_table(path, why);
  std::filesystem::remove(path);

  return {verify_ok && lower_one && malformed_ok == malformed.size() && table_ok,
          join({std::string("verify_defaults_exit0=") + (verify_ok ? "yes" : "no"),
                std::string("harmonic_n1_lower_is_1=") + (lower_one ? "yes" : "no"),
                "malformed_exit2=" + std::to_string(malformed_ok) + "/" + std::to_string(malformed.size()),
                "table_revalidation=" + why})};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
