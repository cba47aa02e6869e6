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

#include <psibounds/verifier.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include <psibounds/bounds.hpp>
#include <psibounds/format.hpp>
#include <psibounds/oracle.hpp>

namespace psib {

namespace {

constexpr std::uint64_t kHarmonicGapCheckLimit = 10'000;
constexpr double kHarmonicGapThreshold = 1e-4;

// out[i] = fn(i) for i < n. Work is split into contiguous index blocks, so
// the result is identical for any thread count.
template <class T, class Fn>
std::vector<T> evaluate(std::size_t n, Fn fn, unsigned threads) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(1, n / 1024));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = fn(i);
    }
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(n, (w + 1) * block);
        for (std::size_t i = w * block; i < end; ++i) {
          out[i] = fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) { report_.property_name = std::move(name); }

  void checked(std::size_t n) { report_.points_checked += n; }

  void margin(double m) {
    if (!have_margin_ || m < report_.worst_margin || std::isnan(m)) {
      report_.worst_margin = m;
      have_margin_ = true;
    }
  }

  void violation(double x, double lhs, double rhs) {
    ++report_.violations;
    if (report_.counterexamples.size() < kMaxCounterexamples) {
      report_.counterexamples.push_back({x, lhs, rhs});
    }
  }

  PropertyReport finish() {
    report_.passed = report_.counterexamples.empty() && report_.error.empty();
    return std::move(report_);
  }

 private:
  PropertyReport report_;
  bool have_margin_ = false;
};

double ulp_above(double v) {
  return std::nextafter(v, std::numeric_limits<double>::infinity()) - v;
}

}  // namespace

void GridSpec::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw UsageError("grid: start and stop must be finite");
  }
  if (!(start > 0.0)) {
    throw UsageError("grid: start must be > 0");
  }
  if (!(start < stop)) {
    throw UsageError("grid: start must be < stop");
  }
  if (count < 2) {
    throw UsageError("grid: count must be >= 2");
  }
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> xs(count);
  const double last = static_cast<double>(count - 1);
  if (spacing == Spacing::log) {
    const double a = std::log(start);
    const double b = std::log(stop);
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = std::exp(a + (b - a) * (static_cast<double>(i) / last));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = start + (stop - start) * (static_cast<double>(i) / last);
    }
  }
  xs.front() = start;
  xs.back() = stop;
  return xs;
}

PropertyReport verify_monotonicity(const GridSpec& grid, const EvalOptions& opts) {
  const auto xs = grid.points();
  const auto& cfg = opts.kernel;
  struct Sample {
    double fprime;
    double phi;
  };
  const auto samples = evaluate<Sample>(
      xs.size(), [&](std::size_t i) { return Sample{f_prime(xs[i], cfg), phi(xs[i], cfg)}; },
      opts.threads);

  ReportBuilder out("monotonicity");
  out.checked(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // The derivative route: f' = h(x+1) - h(x) must clear its rounding floor.
    const double fp = samples[i].fprime;
    out.margin(fp - kDerivativeFloor);
    if (!(fp > kDerivativeFloor)) {
      out.violation(xs[i], fp, kDerivativeFloor);
    }
    if (i > 0) {
      const double prev = samples[i - 1].phi - kPairwiseSlack;
      if (!(samples[i].phi > prev)) {
        out.violation(xs[i], samples[i].phi, prev);
      }
    }
  }
  return out.finish();
}

PropertyReport verify_concavity(const GridSpec& grid, const EvalOptions& opts) {
  grid.validate();
  if (grid.count < 3) {
    throw UsageError("concavity needs >= 3 points");
  }
  const auto xs = grid.points();
  const auto& cfg = opts.kernel;
  const auto phis =
      evaluate<double>(xs.size(), [&](std::size_t i) { return phi(xs[i], cfg); }, opts.threads);

  // Interior points get a symmetric linear stencil x +- step. On a linear
  // grid that is the neighbouring points; on a log grid the narrower side
  // fixes the step and the wider side is re-evaluated.
  std::vector<double> interior(xs.begin() + 1, xs.end() - 1);
  std::vector<double> steps(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    steps[i] = std::min(xs[i + 1] - xs[i], xs[i + 2] - xs[i + 1]);
  }
  struct Stencil {
    double left;
    double right;
  };
  std::vector<Stencil> stencils(interior.size());
  if (grid.spacing == Spacing::linear) {
    for (std::size_t i = 0; i < interior.size(); ++i) {
      stencils[i] = {phis[i], phis[i + 2]};
    }
  } else {
    stencils = evaluate<Stencil>(
        interior.size(),
        [&](std::size_t i) {
          const double x = interior[i];
          const double h = steps[i];
          return Stencil{phi(x - h, cfg), phi(x + h, cfg)};
        },
        opts.threads);
  }

  ReportBuilder out("concavity");
  out.checked(xs.size());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const double h = grid.spacing == Spacing::linear ? (xs[i + 2] - xs[i]) / 2.0 : steps[i];
    const double second = (stencils[i].left - 2.0 * phis[i + 1] + stencils[i].right) / (h * h);
    out.margin(kConcavitySlack - second);
    if (!(second < kConcavitySlack)) {
      out.violation(interior[i], second, kConcavitySlack);
    }
  }
  return out.finish();
}

PropertyReport verify_positivity(const GridSpec& grid, const EvalOptions& opts) {
  const auto xs = grid.points();
  const auto& cfg = opts.kernel;
  const auto values =
      evaluate<double>(xs.size(), [&](std::size_t i) { return positivity_expr(xs[i], cfg); },
                       opts.threads);
  ReportBuilder out("positivity");
  out.checked(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.margin(values[i]);
    if (!(values[i] > 0.0)) {
      out.violation(xs[i], values[i], 0.0);
    }
  }
  return out.finish();
}

PropertyReport verify_limits(double x_small, double x_large, double tol_small, double tol_large,
                             const EvalOptions& opts) {
  if (!(x_small > 0.0) || !(x_large > 0.0) || !std::isfinite(x_small) || !std::isfinite(x_large)) {
    throw UsageError("limits: abscissae must be finite and > 0");
  }
  if (!(tol_small > 0.0) || !(tol_large > 0.0)) {
    throw UsageError("limits: tolerances must be > 0");
  }
  const auto& cfg = opts.kernel;
  const double near_zero = std::fabs(phi(x_small, cfg) + kEulerGamma);
  const double nearer_zero = std::fabs(phi(x_small / 2.0, cfg) + kEulerGamma);
  const double near_inf = std::fabs(phi(x_large, cfg));
  const double nearer_inf = std::fabs(phi(x_large * 2.0, cfg));

  ReportBuilder out("limits");
  out.checked(4);
  const auto expect_less = [&](double x, double lhs, double rhs, bool strict) {
    out.margin(rhs - lhs);
    if (strict ? !(lhs < rhs) : !(lhs <= rhs)) {
      out.violation(x, lhs, rhs);
    }
  };
  expect_less(x_small, near_zero, tol_small, false);
  expect_less(x_small / 2.0, nearer_zero, near_zero, true);
  expect_less(x_large, near_inf, tol_large, false);
  expect_less(x_large * 2.0, nearer_inf, near_inf, true);
  return out.finish();
}

PropertyReport verify_harmonic_bounds(std::uint64_t n_max) {
  if (n_max < 1) {
    throw UsageError("n must be >= 1");
  }
  ReportBuilder out("harmonic_bounds");
  out.checked(n_max);
  HarmonicSweep sweep(std::max(n_max, kDefaultHarmonicCap));
  double prev_gap = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const ExactRational& h = sweep.advance();
    const Interval enc = harmonic_enclosure(static_cast<std::int64_t>(n));
    const auto x = static_cast<double>(n);

    const double slack_lower =
        round_to_double(h.value() - ExactRational::from_double(enc.lo).value());
    if (n == 1) {
      // Sharp lower constant: equality at n = 1.
      if (!(std::fabs(slack_lower) <= ulp_above(enc.lo))) {
        out.violation(x, h.to_double(), enc.lo);
      }
    } else {
      out.margin(slack_lower);
      if (h.compare(enc.lo) <= 0) {
        out.violation(x, h.to_double(), enc.lo);
      }
    }

    const double gap = round_to_double(ExactRational::from_double(enc.hi).value() - h.value());
    out.margin(gap);
    if (h.compare(enc.hi) >= 0) {
      out.violation(x, h.to_double(), enc.hi);
    }
    if (n <= kHarmonicGapCheckLimit) {
      if (!(gap < prev_gap)) {
        out.violation(x, gap, prev_gap);
      }
      if (n == kHarmonicGapCheckLimit && !(gap <= kHarmonicGapThreshold)) {
        out.violation(x, gap, kHarmonicGapThreshold);
      }
    }
    prev_gap = gap;
  }
  return out.finish();
}

PropertyReport verify_recurrence(const GridSpec& grid, const EvalOptions& opts) {
  const auto xs = grid.points();
  const auto& cfg = opts.kernel;
  struct Residual {
    double ratio;  // worst residual / allowed
    double residual;
    double allowed;
  };
  const auto rows = evaluate<Residual>(
      xs.size(),
      [&](std::size_t i) {
        const double x = xs[i];
        const double x1 = x + 1.0;
        const double r = 1.0 / x;
        const double d0 = digamma(x, cfg);
        const double d1 = trigamma(x, cfg);
        const double d2 = tetragamma(x, cfg);
        const double res[3] = {std::fabs(digamma(x1, cfg) - d0 - r),
                               std::fabs(trigamma(x1, cfg) - d1 + r * r),
                               std::fabs(tetragamma(x1, cfg) - d2 - 2.0 * r * r * r)};
        const double allowed[3] = {kRecurrenceTolerance * std::max(1.0, std::fabs(d0)),
                                   kRecurrenceTolerance * std::max(1.0, std::fabs(d1)),
                                   kRecurrenceTolerance * std::max(1.0, std::fabs(d2))};
        Residual worst{-1.0, 0.0, 0.0};
        for (int k = 0; k < 3; ++k) {
          const double ratio = res[k] / allowed[k];
          if (ratio > worst.ratio || std::isnan(ratio)) {
            worst = {ratio, res[k], allowed[k]};
          }
        }
        return worst;
      },
      opts.threads);

  ReportBuilder out("recurrence");
  out.checked(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Normalised: 1 - residual / allowed.
    out.margin(1.0 - rows[i].ratio);
    if (!(rows[i].residual <= rows[i].allowed)) {
      out.violation(xs[i], rows[i].residual, rows[i].allowed);
    }
  }
  return out.finish();
}

VerifierConfig VerifierConfig::with_grid(const GridSpec& grid) {
  VerifierConfig cfg;
  cfg.monotonicity_grid = grid;
  cfg.concavity_grid = grid;
  cfg.positivity_grid = grid;
  cfg.recurrence_grid = grid;
  return cfg;
}

void VerifierConfig::validate() const {
  monotonicity_grid.validate();
  concavity_grid.validate();
  positivity_grid.validate();
  recurrence_grid.validate();
  if (!(x_small > 0.0) || !(x_large > 0.0) || !std::isfinite(x_small) || !std::isfinite(x_large)) {
    throw UsageError("limits: abscissae must be finite and > 0");
  }
  if (!(tol_small > 0.0) || !(tol_large > 0.0)) {
    throw UsageError("limits: tolerances must be > 0");
  }
  if (n_max < 1) {
    throw UsageError("n must be >= 1");
  }
  try {
    eval.kernel.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<PropertyReport> run_all(const VerifierConfig& config) {
  config.validate();
  std::vector<PropertyReport> reports;
  const auto guarded = [&](const char* name, auto&& check) {
    try {
      reports.push_back(check());
    } catch (const std::exception& e) {
      PropertyReport failed;
      failed.property_name = name;
      failed.error = e.what();
      reports.push_back(std::move(failed));
    }
  };
  const auto& ev = config.eval;
  guarded("monotonicity", [&] { return verify_monotonicity(config.monotonicity_grid, ev); });
  guarded("concavity", [&] { return verify_concavity(config.concavity_grid, ev); });
  guarded("positivity", [&] { return verify_positivity(config.positivity_grid, ev); });
  guarded("limits", [&] {
    return verify_limits(config.x_small, config.x_large, config.tol_small, config.tol_large, ev);
  });
  guarded("harmonic_bounds", [&] { return verify_harmonic_bounds(config.n_max); });
  guarded("recurrence", [&] { return verify_recurrence(config.recurrence_grid, ev); });
  return reports;
}

bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.passed; });
}

std::string format_report_line(const PropertyReport& report) {
  std::ostringstream os;
  os << "PROPERTY " << report.property_name << " points=" << report.points_checked
     << " result=" << (report.passed ? "PASS" : "FAIL")
     << " worst_margin=" << format_g17(report.worst_margin);
  return os.str();
}

std::string reports_to_text(const std::vector<PropertyReport>& reports) {
  std::string text;
  for (const auto& r : reports) {
    text += format_report_line(r);
    text += '\n';
  }
  return text;
}

std::string reports_to_csv(const std::vector<PropertyReport>& reports) {
  std::string csv = "property,points,result,worst_margin,violations,error\n";
  for (const auto& r : reports) {
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    csv += r.property_name + "," + std::to_string(r.points_checked) + "," +
           (r.passed ? "PASS" : "FAIL") + "," + format_g17(r.worst_margin) + "," +
           std::to_string(r.violations) + "," + error + "\n";
  }
  return csv;
}

}  // namespace psib
