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

#ifndef PSIBOUNDS_FORMAT_HPP
#define PSIBOUNDS_FORMAT_HPP

#include <string>

namespace psib {

// Locale-independent renderings with 17 significant digits, enough to
// round-trip any double.

/// printf("%.17g") style: "1", "2.0833333333333335", "4.1666666586805556e-10".
std::string format_g17(double v);

/// Scientific with 17 significant digits and an unpadded exponent:
/// "-5.7721566490153287e-1".
std::string format_sci17(double v);

/// Like format_g17 but keeps trailing zeros: "1.0000000000000000".
std::string format_fixed17(double v);

}  // namespace psib

#endif  // PSIBOUNDS_FORMAT_HPP
