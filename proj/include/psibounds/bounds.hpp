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

#ifndef PSIBOUNDS_BOUNDS_HPP
#define PSIBOUNDS_BOUNDS_HPP

#include <psibounds/constants.hpp>
#include <psibounds/harmonic_index.hpp>
#include <psibounds/oracle.hpp>
#include <psibounds/polygamma.hpp>

namespace psib {

/// Real enclosure with per-endpoint strictness: a strict endpoint is never
/// attained by the enclosed quantity, a non-strict one may be.
struct Interval {
  double lo;
  double hi;
  bool lo_strict;
  bool hi_strict;

  Interval(double lo, double hi, bool lo_strict, bool hi_strict);

  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept;
  /// Exact comparison against the double endpoints.
  bool contains(const ExactRational& v) const;
};

/// Lower constant of the older, non-sharp form of the psi double
/// inequality (any a <= -ln 2 works there). Recorded for reference only.
inline constexpr double kNonSharpPsiLowerConstant = -kLn2Hi;

/// (-gamma - L(x), -L(x)), L(x) = ln(e^{1/x} - 1); both ends strict.
/// The constants -gamma and 0 are the best possible.
Interval psi_enclosure(PositiveAbscissa x);

/// [1 + ln(sqrt(e) - 1) - L(n+1), gamma - L(n+1)). The lower end is attained
/// at n = 1 only; both constants are the best possible.
Interval harmonic_enclosure(HarmonicIndex n);

/// 1 + ln(sqrt(e) - 1) = 1 + L(2).
double harmonic_lower_constant();

/// gamma - 1 - ln(sqrt(e) - 1), the width of every harmonic enclosure.
double harmonic_enclosure_width();

/// H_n - gamma with H_n exact and rounded once; reference value of psi(n+1).
double digamma_from_harmonic(HarmonicIndex n);
double digamma_from_harmonic(const ExactRational& harmonic);

}  // namespace psib

#endif  // PSIBOUNDS_BOUNDS_HPP
