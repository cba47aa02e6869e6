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

#ifndef PSIBOUNDS_POLYGAMMA_HPP
#define PSIBOUNDS_POLYGAMMA_HPP

#include <psibounds/constants.hpp>
#include <psibounds/errors.hpp>

namespace psib {

/// A finite, strictly positive real argument. Construction throws
/// DomainError otherwise, so every kernel below can assume x > 0.
class PositiveAbscissa {
 public:
  PositiveAbscissa(double x);  // NOLINT(google-explicit-constructor)

  double value() const noexcept { return x_; }
  operator double() const noexcept { return x_; }  // NOLINT

 private:
  double x_;
};

/// Tuning of the recurrence / asymptotic-series evaluation.
///
/// Arguments below `shift_threshold` are moved up with the functional
/// recurrence before the asymptotic series is summed; `series_terms` is the
/// number of Bernoulli correction terms used (3..7).
struct KernelConfig {
  double shift_threshold = 12.0;
  int series_terms = 7;
  double gamma_const = kEulerGamma;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

inline constexpr int kMaxSeriesTerms = 7;

double digamma(PositiveAbscissa x, const KernelConfig& cfg = {});
double trigamma(PositiveAbscissa x, const KernelConfig& cfg = {});
double tetragamma(PositiveAbscissa x, const KernelConfig& cfg = {});

/// ln(e^{1/x} - 1) without overflow at small x or cancellation at large x.
/// Relative error stays within a few ulp for x in [1e-300, 1e300],
/// including near the zero at x = 1/ln 2.
double log_expm1_recip(PositiveAbscissa x);

/// ln(1 - e^{-u}) for u > 0.
double log1mexp(double u);

/// phi(x) = psi(x) + ln(e^{1/x} - 1).
///
/// Evaluated as psi(x + 1) + ln(1 - e^{-1/x}) below the shift threshold and
/// through its own large-argument expansion above it, which avoids the
/// cancellation of the two logarithmic terms. The result is rounded into
/// (-gamma, 0); away from the extreme ends of the double range no rounding
/// adjustment is ever needed (see phi_raw).
double phi(PositiveAbscissa x, const KernelConfig& cfg = {});

/// phi(x) without the range-preserving final rounding step.
double phi_raw(PositiveAbscissa x, const KernelConfig& cfg = {});

/// h(x) = e^{psi(x)} psi'(x). Underflows to zero once psi(x) < -745
/// (x below about 1.34e-3).
double h_func(PositiveAbscissa x, const KernelConfig& cfg = {});

/// f(x) = e^{phi(x)}, the product form of e^{psi(x+1)} - e^{psi(x)}.
/// Rounded into (e^{-gamma}, 1) like phi().
double f_func(PositiveAbscissa x, const KernelConfig& cfg = {});

/// exp(phi_raw(x)) with no range adjustment.
double f_func_raw(PositiveAbscissa x, const KernelConfig& cfg = {});

/// f'(x) = h(x + 1) - h(x). The difference of two values close to 1 has an
/// absolute error of a few 1e-16, so the sign is only meaningful while
/// f'(x) ~ 1/(12 x^3) stays well above that (x up to roughly 1e4).
double f_prime(PositiveAbscissa x, const KernelConfig& cfg = {});

/// psi'(x)^2 + psi''(x). Uses a dedicated expansion (leading term
/// 1/(12 x^4)) at and above the shift threshold.
double positivity_expr(PositiveAbscissa x, const KernelConfig& cfg = {});

}  // namespace psib

#endif  // PSIBOUNDS_POLYGAMMA_HPP
