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

#ifndef PSIBOUNDS_ORACLE_HPP
#define PSIBOUNDS_ORACLE_HPP

//
// Slow, independent references used to check the double-precision kernels:
// exact rational harmonic numbers and a fixed-point extended-precision
// evaluation of psi, psi', psi'' and ln(e^{1/x} - 1). Nothing in here
// shares code with polygamma.cpp.
//

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <psibounds/harmonic_index.hpp>
#include <psibounds/polygamma.hpp>

namespace psib {

/// p/q in lowest terms with q > 0.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(mpz_class num, mpz_class den);
  explicit ExactRational(mpq_class q);

  /// Exact: every finite double is a dyadic rational.
  static ExactRational from_double(double v);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const noexcept { return q_; }

  /// Round to nearest, ties to even (normal range).
  double to_double() const;
  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  int compare(double v) const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }

 private:
  // GMP arithmetic results are already in lowest terms; skipping the extra
  // gcd keeps a harmonic sweep linear in the size of H_n.
  struct Canonical {};
  ExactRational(mpq_class q, Canonical) : q_(std::move(q)) {}

  mpq_class q_;
};

/// Correctly rounded (nearest-even) conversion of a rational to double.
double round_to_double(const mpq_class& q);

inline constexpr std::uint64_t kDefaultHarmonicCap = 1'000'000;

/// H_n = sum_{k=1}^n 1/k exactly. Throws ResourceError above `cap`.
ExactRational harmonic_exact(HarmonicIndex n, std::uint64_t cap = kDefaultHarmonicCap);

/// Incremental H_1, H_2, ... using H_n = H_{n-1} + 1/n. Owned by one caller;
/// not meant to be shared between threads.
class HarmonicSweep {
 public:
  explicit HarmonicSweep(std::uint64_t cap = kDefaultHarmonicCap) : cap_(cap) {}

  /// Moves to the next index and returns H_n.
  const ExactRational& advance();

  std::uint64_t index() const noexcept { return n_; }
  const ExactRational& value() const noexcept { return h_; }

 private:
  std::uint64_t cap_;
  std::uint64_t n_ = 0;
  ExactRational h_;
};

/// Signed fixed-point number raw / 10^scale over an arbitrary-precision
/// integer. Arithmetic rounds to nearest at the operands' common scale.
class BigFixed {
 public:
  BigFixed() = default;
  BigFixed(mpz_class raw, int scale) : raw_(std::move(raw)), scale_(scale) {}

  static BigFixed from_rational(const mpq_class& q, int scale);
  static BigFixed from_int(long v, int scale);
  /// Parses a plain decimal literal such as "-0.5772...".
  static BigFixed from_decimal(const std::string& text, int scale);

  const mpz_class& raw() const noexcept { return raw_; }
  int scale() const noexcept { return scale_; }

  mpq_class to_rational() const;
  double to_double() const;
  /// Decimal rendering with `decimals` digits after the point (truncated).
  std::string to_string(int decimals) const;
  int sign() const { return sgn(raw_); }

  BigFixed operator-() const { return {-raw_, scale_}; }
  friend BigFixed operator+(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator-(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator*(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator/(const BigFixed& a, const BigFixed& b);

 private:
  mpz_class raw_;
  int scale_ = 0;
};

/// Extended-precision result together with a bound on its absolute error.
struct Reference {
  BigFixed value;
  double abs_error_bound = 0.0;

  double to_double() const { return value.to_double(); }
};

inline constexpr int kMaxReferenceDigits = 50;

/// Euler's constant at `scale` decimals (scale <= 80).
BigFixed euler_gamma_fixed(int scale);
BigFixed ln2_fixed(int scale);
/// Natural log of a positive rational.
BigFixed fixed_ln(const mpq_class& r, int scale);
BigFixed fixed_exp(const BigFixed& y);

/// B_0 .. B_{n}, exact (B_1 = -1/2).
std::vector<mpq_class> bernoulli_numbers(int n);

/// psi(x) from psi(x) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+x)), truncated at
/// K and closed with an Euler-Maclaurin tail. Absolute error < 10^-digits.
/// digits must lie in [1, 50]; ResourceError if K would exceed its cap.
Reference digamma_reference(PositiveAbscissa x, int digits);

/// psi^(order)(x) for order in {0, 1, 2} by the same series method.
Reference polygamma_reference(int order, PositiveAbscissa x, int digits);

/// ln(e^{1/x} - 1) to absolute error < 10^-digits.
Reference log_expm1_recip_reference(PositiveAbscissa x, int digits);

}  // namespace psib

#endif  // PSIBOUNDS_ORACLE_HPP
