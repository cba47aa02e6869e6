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

#include <psibounds/format.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace psib {

namespace {

constexpr int kDigits = 17;

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
  return {buf.data(), res.ptr};
}

}  // namespace

std::string format_g17(double v) {
  return to_chars_string(v, std::chars_format::general, kDigits);
}

std::string format_sci17(double v) {
  if (!std::isfinite(v)) {
    return to_chars_string(v, std::chars_format::general, kDigits);
  }
  std::string s = to_chars_string(v, std::chars_format::scientific, kDigits - 1);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  return mantissa + "e" + std::to_string(exponent);
}

std::string format_fixed17(double v) {
  std::string s = format_g17(v);
  if (!std::isfinite(v)) {
    return s;
  }
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  const std::string exponent = e == std::string::npos ? "" : s.substr(e);
  int significant = 0;
  bool leading = true;
  for (char c : mantissa) {
    if (c < '0' || c > '9') {
      continue;
    }
    if (leading && c == '0') {
      continue;
    }
    leading = false;
    ++significant;
  }
  if (v == 0.0) {
    significant = 1;
  }
  if (mantissa.find('.') == std::string::npos) {
    mantissa += '.';
  }
  mantissa.append(static_cast<std::size_t>(std::max(0, kDigits - significant)), '0');
  return mantissa + exponent;
}

}  // namespace psib
