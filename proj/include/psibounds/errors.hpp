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

#ifndef PSIBOUNDS_ERRORS_HPP
#define PSIBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psib {

/// Argument outside the domain of a function (x <= 0, non-finite, n < 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A request that would exceed a configured work or size cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed configuration (grid, verifier settings, command-line input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace psib

#endif  // PSIBOUNDS_ERRORS_HPP
