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

#ifndef PSIBOUNDS_HARMONIC_INDEX_HPP
#define PSIBOUNDS_HARMONIC_INDEX_HPP

#include <cstdint>

#include <psibounds/errors.hpp>

namespace psib {

/// Index n >= 1 of a harmonic number H_n.
class HarmonicIndex {
 public:
  HarmonicIndex(std::int64_t n) : n_(static_cast<std::uint64_t>(n)) {  // NOLINT
    if (n < 1) {
      throw DomainError("n must be >= 1");
    }
  }

  std::uint64_t value() const noexcept { return n_; }

 private:
  std::uint64_t n_;
};

}  // namespace psib

#endif  // PSIBOUNDS_HARMONIC_INDEX_HPP
