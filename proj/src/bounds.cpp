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

#include <psibounds/bounds.hpp>

#include <cmath>
#include <stdexcept>

namespace psib {

Interval::Interval(double lo, double hi, bool lo_strict, bool hi_strict)
    : lo(lo), hi(hi), lo_strict(lo_strict), hi_strict(hi_strict) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw std::invalid_argument("Interval: need finite lo <= hi");
  }
}

bool Interval::contains(double v) const noexcept {
  const bool above = lo_strict ? v > lo : v >= lo;
  const bool below = hi_strict ? v < hi : v <= hi;
  return above && below;
}

bool Interval::contains(const ExactRational& v) const {
  const int c_lo = v.compare(lo);
  const int c_hi = v.compare(hi);
  const bool above = lo_strict ? c_lo > 0 : c_lo >= 0;
  const bool below = hi_strict ? c_hi < 0 : c_hi <= 0;
  return above && below;
}

Interval psi_enclosure(PositiveAbscissa x) {
  const double hi = -log_expm1_recip(x);
  return {hi - kEulerGamma, hi, true, true};
}

namespace {

double log_expm1_recip_at_two() {
  static const double value = log_expm1_recip(2.0);
  return value;
}

}  // namespace

Interval harmonic_enclosure(HarmonicIndex n) {
  const double l2 = log_expm1_recip_at_two();
  const double ln1 = log_expm1_recip(static_cast<double>(n.value()) + 1.0);
  // 1 + (L(2) - L(n+1)) rather than (1 + L(2)) - L(n+1): the bracket is
  // exactly zero at n = 1, so the attained endpoint is exactly 1. The upper
  // end gamma - L(n+1) is lo + width; hi - lo is then exact and stays within
  // half an ulp of the width constant.
  const double lo = 1.0 + (l2 - ln1);
  return {lo, lo + harmonic_enclosure_width(), false, true};
}

double harmonic_lower_constant() { return 1.0 + log_expm1_recip_at_two(); }

double harmonic_enclosure_width() {
  return (kEulerGamma - 1.0) - log_expm1_recip_at_two();
}

double digamma_from_harmonic(const ExactRational& harmonic) {
  return harmonic.to_double() - kEulerGamma;
}

double digamma_from_harmonic(HarmonicIndex n) {
  return digamma_from_harmonic(harmonic_exact(n));
}

}  // namespace psib
