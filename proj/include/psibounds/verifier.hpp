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

#ifndef PSIBOUNDS_VERIFIER_HPP
#define PSIBOUNDS_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <psibounds/polygamma.hpp>

namespace psib {

enum class Spacing { log, linear };

/// `count` points from `start` to `stop` inclusive.
struct GridSpec {
  double start = 1e-3;
  double stop = 1e3;
  std::size_t count = 100'000;
  Spacing spacing = Spacing::log;

  /// Throws UsageError unless 0 < start < stop (both finite) and count >= 2.
  void validate() const;
  std::vector<double> points() const;
};

struct Counterexample {
  double x;
  double lhs;
  double rhs;
};

/// Outcome of one checked property.
///
/// `worst_margin` is the minimum over the grid of the quantity that the
/// property asserts to be positive. `passed` holds iff no counterexample was
/// found and the check ran (`error` empty). At most kMaxCounterexamples are
/// kept; `violations` counts all of them.
struct PropertyReport {
  std::string property_name;
  std::size_t points_checked = 0;
  bool passed = false;
  double worst_margin = 0.0;
  std::vector<Counterexample> counterexamples;
  std::size_t violations = 0;
  std::string error;
};

inline constexpr std::size_t kMaxCounterexamples = 32;

// Slack allowed when comparing phi at consecutive grid points.
inline constexpr double kPairwiseSlack = 1e-13;
// Second differences of phi may exceed zero by at most this times step^2.
inline constexpr double kConcavitySlack = 1e-10;
// f'(x) = h(x+1) - h(x) with 0 < h < 1 must exceed this absolute floor.
inline constexpr double kDerivativeFloor = 8 * 2.220446049250313e-16;
// Relative tolerance of the recurrence residuals.
inline constexpr double kRecurrenceTolerance = 1e-12;

struct EvalOptions {
  KernelConfig kernel{};
  /// Worker threads for grid evaluation; results never depend on it.
  unsigned threads = 1;
};

PropertyReport verify_monotonicity(const GridSpec& grid, const EvalOptions& opts = {});
/// Throws UsageError for fewer than 3 points.
PropertyReport verify_concavity(const GridSpec& grid, const EvalOptions& opts = {});
PropertyReport verify_positivity(const GridSpec& grid, const EvalOptions& opts = {});
PropertyReport verify_limits(double x_small, double x_large, double tol_small,
                             double tol_large, const EvalOptions& opts = {});
PropertyReport verify_harmonic_bounds(std::uint64_t n_max);
PropertyReport verify_recurrence(const GridSpec& grid, const EvalOptions& opts = {});

struct VerifierConfig {
  GridSpec monotonicity_grid{};
  GridSpec concavity_grid{};
  GridSpec positivity_grid{};
  GridSpec recurrence_grid{};
  double x_small = 1e-3;
  double x_large = 1e4;
  double tol_small = 1e-2;
  double tol_large = 1e-4;
  std::uint64_t n_max = 10'000;
  EvalOptions eval{};

  /// Every grid shares the same settings.
  static VerifierConfig with_grid(const GridSpec& grid);

  /// Throws UsageError on any malformed setting. Grids are checked for the
  /// GridSpec invariant only; the concavity arity is reported per property.
  void validate() const;
};

/// All six properties in a fixed order: monotonicity, concavity,
/// positivity, limits, harmonic_bounds, recurrence. The configuration is
/// validated before anything is evaluated.
std::vector<PropertyReport> run_all(const VerifierConfig& config);

bool all_passed(const std::vector<PropertyReport>& reports);

/// "PROPERTY <name> points=<k> result=<PASS|FAIL> worst_margin=<g>"
std::string format_report_line(const PropertyReport& report);

/// One report line per property, newline-terminated.
std::string reports_to_text(const std::vector<PropertyReport>& reports);

/// Header "property,points,result,worst_margin,violations,error" and one
/// row per report.
std::string reports_to_csv(const std::vector<PropertyReport>& reports);

}  // namespace psib

#endif  // PSIBOUNDS_VERIFIER_HPP
