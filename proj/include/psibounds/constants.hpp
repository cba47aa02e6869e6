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

#ifndef PSIBOUNDS_CONSTANTS_HPP
#define PSIBOUNDS_CONSTANTS_HPP

namespace psib {

// Euler-Mascheroni constant, 0.57721566490153286060651...
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ln 2 as an unevaluated sum hi + lo.
inline constexpr double kLn2Hi = 6.93147180559945286227e-01;
inline constexpr double kLn2Lo = 2.3190468138462996e-17;

}  // namespace psib

#endif  // PSIBOUNDS_CONSTANTS_HPP
