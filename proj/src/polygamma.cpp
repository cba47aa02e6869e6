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

#include <psibounds/polygamma.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace psib {

namespace {

//
// Asymptotic coefficients, all derived from B_2 .. B_14:
//
//   psi(t)   ~ ln t - 1/(2t) - sum_k B_2k / (2k)        t^{-2k}
//   psi'(t)  ~ 1/t + 1/(2t^2) + sum_k B_2k              t^{-2k-1}
//   psi''(t) ~ -1/t^2 - 1/t^3 - sum_k (2k+1) B_2k       t^{-2k-2}
//
constexpr std::array<double, kMaxSeriesTerms> kDigammaCoef = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0};

constexpr std::array<double, kMaxSeriesTerms> kTrigammaCoef = {
    1.0 / 6.0,  -1.0 / 30.0,        1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,    7.0 / 6.0};

constexpr std::array<double, kMaxSeriesTerms> kTetragammaCoef = {
    1.0 / 2.0,  -1.0 / 6.0,         1.0 / 6.0, -3.0 / 10.0,
    5.0 / 6.0,  -691.0 / 210.0,     35.0 / 2.0};

// phi(t) ~ -sum_k (B_2k / 2k) (1 - 1/(2k)!) t^{-2k}, k = 1..8. The two
// logarithms of psi(t) and ln(e^{1/t} - 1) cancel exactly in this form.
constexpr std::array<double, 8> kPhiCoef = {
    -1.0 / 24.0,
    23.0 / 2880.0,
    -719.0 / 181440.0,
    40319.0 / 9676800.0,
    -3628799.0 / 479001600.0,
    330990104909.0 / 15692092416000.0,
    -87178291199.0 / 1046139494400.0,
    75677731024892383.0 / 170729965486080000.0};

// psi'(t)^2 + psi''(t) ~ sum_{j=4}^{17} c_j t^{-j}.
constexpr std::array<double, 14> kPositivityCoef = {
    1.0 / 12.0,          1.0 / 6.0,       23.0 / 180.0,
    -1.0 / 30.0,         -41.0 / 315.0,   1.0 / 42.0,
    509.0 / 2100.0,      -1.0 / 30.0,     -4813.0 / 6930.0,
    5.0 / 66.0,          17735149.0 / 6306300.0,
    -691.0 / 2730.0,     -229094.0 / 15015.0,
    7.0 / 6.0};

// Horner in s over coef[0..n).
template <std::size_t N>
double horner(const std::array<double, N>& coef, std::size_t n, double s) {
  double acc = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * s + coef[k];
  }
  return acc;
}

// Number of unit steps needed to lift x to at least the threshold.
int shift_count(double x, double threshold) {
  if (x >= threshold) {
    return 0;
  }
  return static_cast<int>(std::ceil(threshold - x));
}

std::size_t terms(const KernelConfig& cfg) {
  return static_cast<std::size_t>(cfg.series_terms);
}

double digamma_large(double t, std::size_t n) {
  const double s = 1.0 / t;
  const double s2 = s * s;
  return std::log(t) - 0.5 * s - s2 * horner(kDigammaCoef, n, s2);
}

double trigamma_large(double t, std::size_t n) {
  const double s = 1.0 / t;
  const double s2 = s * s;
  return s + s2 * (0.5 + s * horner(kTrigammaCoef, n, s2));
}

double tetragamma_large(double t, std::size_t n) {
  const double s = 1.0 / t;
  const double s2 = s * s;
  return -s2 * (1.0 + s + s2 * horner(kTetragammaCoef, n, s2));
}

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw OverflowError(std::string(what) + ": result is not representable");
  }
  return v;
}

}  // namespace

PositiveAbscissa::PositiveAbscissa(double x) : x_(x) {
  if (!std::isfinite(x)) {
    throw DomainError("domain: x must be finite");
  }
  if (!(x > 0.0)) {
    throw DomainError("domain: x must be > 0");
  }
}

void KernelConfig::validate() const {
  if (!(shift_threshold >= 6.0) || !std::isfinite(shift_threshold)) {
    throw std::invalid_argument("KernelConfig: shift_threshold must be >= 6");
  }
  if (series_terms < 3 || series_terms > kMaxSeriesTerms) {
    throw std::invalid_argument("KernelConfig: series_terms must be in [3, 7]");
  }
  if (std::fabs(gamma_const - kEulerGamma) > 4 * std::numeric_limits<double>::epsilon()) {
    throw std::invalid_argument("KernelConfig: gamma_const disagrees with Euler's constant");
  }
}

double digamma(PositiveAbscissa x, const KernelConfig& cfg) {
  cfg.validate();
  const double xv = x.value();
  const int n = shift_count(xv, cfg.shift_threshold);
  // psi(x) = psi(x + n) - sum_{k<n} 1/(x + k); smallest terms first.
  double shift = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    shift += 1.0 / (xv + k);
  }
  return require_finite(digamma_large(xv + n, terms(cfg)) - shift, "digamma");
}

double trigamma(PositiveAbscissa x, const KernelConfig& cfg) {
  cfg.validate();
  const double xv = x.value();
  const int n = shift_count(xv, cfg.shift_threshold);
  double acc = trigamma_large(xv + n, terms(cfg));
  for (int k = n - 1; k >= 0; --k) {
    const double r = 1.0 / (xv + k);
    acc += r * r;
  }
  return require_finite(acc, "trigamma");
}

double tetragamma(PositiveAbscissa x, const KernelConfig& cfg) {
  cfg.validate();
  const double xv = x.value();
  const int n = shift_count(xv, cfg.shift_threshold);
  double acc = tetragamma_large(xv + n, terms(cfg));
  for (int k = n - 1; k >= 0; --k) {
    const double r = 1.0 / (xv + k);
    acc -= 2.0 * r * r * r;
  }
  return require_finite(acc, "tetragamma");
}

double log1mexp(double u) {
  // Switch at ln 2 so neither branch loses precision.
  if (u > kLn2Hi) {
    return std::log1p(-std::exp(-u));
  }
  return std::log(-std::expm1(-u));
}

double log_expm1_recip(PositiveAbscissa x) {
  const double xv = x.value();
  const double u = 1.0 / xv;
  if (!std::isfinite(u)) {
    throw OverflowError("log_expm1_recip: 1/x overflows");
  }
  // 1/x = u + u_lo exactly up to a rounding of u_lo itself.
  const double u_lo = std::fma(-u, xv, 1.0) / xv;

  if (u >= 0.35 && u <= 1.1) {
    // Around the zero at u = ln 2: e^u - 1 = 1 + 2 expm1(u - ln 2). The
    // difference u - kLn2Hi is exact here (Sterbenz).
    const double w = (u - kLn2Hi) + (u_lo - kLn2Lo);
    return std::log1p(2.0 * std::expm1(w));
  }

  const double one_minus = -std::expm1(-u);  // 1 - e^{-u}
  const double tail = u > kLn2Hi ? std::log1p(-std::exp(-u)) : std::log(one_minus);
  // d/du ln(e^u - 1) = 1/(1 - e^{-u}); first-order correction for u_lo.
  return u + (tail + u_lo / one_minus);
}

double phi_raw(PositiveAbscissa x, const KernelConfig& cfg) {
  cfg.validate();
  const double xv = x.value();
  if (xv >= cfg.shift_threshold) {
    const double s = 1.0 / xv;
    const double s2 = s * s;
    return s2 * horner(kPhiCoef, kPhiCoef.size(), s2);
  }
  // psi(x) + 1/x = psi(x + 1), so phi(x) = psi(x + 1) + ln(1 - e^{-1/x}).
  return digamma(xv + 1.0, cfg) + log1mexp(1.0 / xv);
}

double phi(PositiveAbscissa x, const KernelConfig& cfg) {
  const double v = phi_raw(x, cfg);
  // The true value lies in (-gamma, 0). At the extremes of the double range
  // it is within one ulp of an endpoint; return the neighbouring interior
  // double, which is still a faithful rounding.
  if (v >= 0.0) {
    return -std::numeric_limits<double>::denorm_min();
  }
  if (v <= -cfg.gamma_const) {
    return std::nextafter(-cfg.gamma_const, 0.0);
  }
  return v;
}

double h_func(PositiveAbscissa x, const KernelConfig& cfg) {
  const double e = std::exp(digamma(x, cfg));
  if (e == 0.0) {
    return 0.0;
  }
  return require_finite(e * trigamma(x, cfg), "h_func");
}

double f_func_raw(PositiveAbscissa x, const KernelConfig& cfg) {
  return std::exp(phi_raw(x, cfg));
}

double f_func(PositiveAbscissa x, const KernelConfig& cfg) {
  const double v = std::exp(phi(x, cfg));
  if (v >= 1.0) {
    return std::nextafter(1.0, 0.0);
  }
  const double lower = std::exp(-cfg.gamma_const);
  if (v <= lower) {
    return std::nextafter(lower, 1.0);
  }
  return v;
}

double f_prime(PositiveAbscissa x, const KernelConfig& cfg) {
  return h_func(x.value() + 1.0, cfg) - h_func(x, cfg);
}

double positivity_expr(PositiveAbscissa x, const KernelConfig& cfg) {
  cfg.validate();
  const double xv = x.value();
  if (xv >= cfg.shift_threshold) {
    const double s = 1.0 / xv;
    const double s2 = s * s;
    return s2 * s2 * horner(kPositivityCoef, kPositivityCoef.size(), s);
  }
  const double d1 = trigamma(x, cfg);
  return require_finite(d1 * d1 + tetragamma(x, cfg), "positivity_expr");
}

}  // namespace psib
