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

#include <psibounds/oracle.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace psib {

namespace {

// Euler's constant to 85 decimals.
constexpr const char* kGammaDigits =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369";
constexpr int kGammaLiteralDecimals = 85;

// Extra decimals carried through every reference computation.
constexpr int kGuardDigits = 12;

// Euler-Maclaurin correction terms used by the series tail.
constexpr int kTailTerms = 20;
constexpr long kMaxTruncation = 1L << 20;

mpz_class pow10(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// round(n / d) for d > 0, halves away from zero.
mpz_class div_round(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) {
    q += 1;
  }
  return q;
}

void require_same_scale(const BigFixed& a, const BigFixed& b) {
  if (a.scale() != b.scale()) {
    throw std::invalid_argument("BigFixed: scale mismatch");
  }
}

int working_scale(int digits) {
  if (digits < 1 || digits > kMaxReferenceDigits) {
    throw UsageError("reference digits must be in [1, 50]");
  }
  return digits + kGuardDigits;
}

// 2 atanh(z) = ln((1+z)/(1-z)) for |z| <= 1/3.
BigFixed two_atanh(const mpq_class& z, int scale) {
  const BigFixed zf = BigFixed::from_rational(z, scale);
  const BigFixed z2 = zf * zf;
  BigFixed power = zf;
  BigFixed sum = zf;
  for (long k = 3; power.raw() != 0; k += 2) {
    power = power * z2;
    sum = sum + BigFixed(div_round(power.raw(), mpz_class(k)), scale);
  }
  return BigFixed(sum.raw() * 2, scale);
}

std::vector<mpq_class> compute_bernoulli(int n) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += binom * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b;
}

const std::vector<mpq_class>& bernoulli_table() {
  static const std::vector<mpq_class> table = compute_bernoulli(2 * kTailTerms + 4);
  return table;
}

mpq_class pow_neg(const mpq_class& base, int e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Bound on the Euler-Maclaurin remainder: twice the first omitted term,
// |B_{2J+2}| / (2J+2)! * (m+2J+1)!/m! * a^{-(m+2J+2)} summed over the
// shifts `a` that appear (the pieces are completely monotone).
double tail_remainder(int order, const std::vector<double>& shifts) {
  const int j = kTailTerms + 1;
  mpq_class ratio(factorial(order + 2 * j - 1), factorial(2 * j) * factorial(order));
  ratio.canonicalize();
  const mpq_class coef = abs(bernoulli_table()[static_cast<std::size_t>(2 * j)]) * ratio;
  const double c = coef.get_d();
  double sum = 0.0;
  for (double a : shifts) {
    sum += c * std::pow(a, -(order + 2 * j));
  }
  return 2.0 * sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExactRational

ExactRational::ExactRational(mpz_class num, mpz_class den) : q_(num, den) {
  if (den == 0) {
    throw std::invalid_argument("ExactRational: zero denominator");
  }
  q_.canonicalize();
}

ExactRational::ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

ExactRational ExactRational::from_double(double v) {
  if (!std::isfinite(v)) {
    throw DomainError("ExactRational: non-finite value");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return ExactRational(std::move(q), ExactRational::Canonical{});
}

double round_to_double(const mpq_class& q) {
  const int s = sgn(q);
  if (s == 0) {
    return 0.0;
  }
  const mpz_class a = abs(q.get_num());
  const mpz_class& b = q.get_den();
  // Scale so the integer quotient carries 54 or 55 bits.
  const long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  const long shift = 54 - e;
  mpz_class num = a;
  mpz_class den = b;
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class quot;
  mpz_class rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  const long extra = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2)) - 53;
  mpz_class mant = quot >> static_cast<mp_bitcnt_t>(extra);
  const mpz_class dropped = quot - (mant << static_cast<mp_bitcnt_t>(extra));
  const mpz_class half = mpz_class(1) << static_cast<mp_bitcnt_t>(extra - 1);
  const bool sticky = rem != 0;
  if (dropped > half || (dropped == half && (sticky || mpz_odd_p(mant.get_mpz_t())))) {
    mant += 1;
  }
  const double m = mant.get_d();  // at most 2^53, exact
  return s * std::ldexp(m, static_cast<int>(extra - shift));
}

double ExactRational::to_double() const { return round_to_double(q_); }

std::string ExactRational::to_string() const {
  if (q_.get_den() == 1) {
    return q_.get_num().get_str();
  }
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

int ExactRational::compare(double v) const {
  const ExactRational other = from_double(v);
  return cmp(q_, other.q_);
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.q_ + b.q_), ExactRational::Canonical{});
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.q_ - b.q_), ExactRational::Canonical{});
}

// ---------------------------------------------------------------------------
// Harmonic numbers

const ExactRational& HarmonicSweep::advance() {
  if (n_ >= cap_) {
    throw ResourceError("harmonic sweep exceeds cap of " + std::to_string(cap_));
  }
  ++n_;
  h_ = h_ + ExactRational(mpz_class(1), mpz_class(static_cast<unsigned long>(n_)));
  return h_;
}

ExactRational harmonic_exact(HarmonicIndex n, std::uint64_t cap) {
  if (n.value() > cap) {
    throw ResourceError("harmonic_exact: n exceeds cap of " + std::to_string(cap));
  }
  HarmonicSweep sweep(cap);
  while (sweep.index() < n.value()) {
    sweep.advance();
  }
  return sweep.value();
}

// ---------------------------------------------------------------------------
// BigFixed

BigFixed BigFixed::from_rational(const mpq_class& q, int scale) {
  const mpz_class num = q.get_num() * pow10(scale);
  mpz_class raw = div_round(abs(num), q.get_den());
  if (sgn(num) < 0) {
    raw = -raw;
  }
  return {raw, scale};
}

BigFixed BigFixed::from_int(long v, int scale) { return {mpz_class(v) * pow10(scale), scale}; }

BigFixed BigFixed::from_decimal(const std::string& text, int scale) {
  mpq_class q;
  const bool negative = !text.empty() && text.front() == '-';
  const std::string body = negative ? text.substr(1) : text;
  const auto dot = body.find('.');
  const std::string int_part = body.substr(0, dot);
  const std::string frac_part = dot == std::string::npos ? "" : body.substr(dot + 1);
  const mpz_class whole((int_part.empty() ? "0" : int_part) + frac_part, 10);
  q = mpq_class(whole, pow10(static_cast<int>(frac_part.size())));
  q.canonicalize();
  if (negative) {
    q = -q;
  }
  return from_rational(q, scale);
}

mpq_class BigFixed::to_rational() const {
  mpq_class q(raw_, pow10(scale_));
  q.canonicalize();
  return q;
}

double BigFixed::to_double() const { return round_to_double(to_rational()); }

std::string BigFixed::to_string(int decimals) const {
  mpz_class a = abs(raw_);
  if (decimals < scale_) {
    a /= pow10(scale_ - decimals);
  } else {
    a *= pow10(decimals - scale_);
  }
  std::string digits = a.get_str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  const std::size_t split = digits.size() - static_cast<std::size_t>(decimals);
  std::string out = (sgn(raw_) < 0 ? "-" : "") + digits.substr(0, split);
  if (decimals > 0) {
    out += "." + digits.substr(split);
  }
  return out;
}

BigFixed operator+(const BigFixed& a, const BigFixed& b) {
  require_same_scale(a, b);
  return {a.raw_ + b.raw_, a.scale_};
}

BigFixed operator-(const BigFixed& a, const BigFixed& b) {
  require_same_scale(a, b);
  return {a.raw_ - b.raw_, a.scale_};
}

BigFixed operator*(const BigFixed& a, const BigFixed& b) {
  require_same_scale(a, b);
  const mpz_class prod = a.raw_ * b.raw_;
  mpz_class raw = div_round(abs(prod), pow10(a.scale_));
  if (sgn(prod) < 0) {
    raw = -raw;
  }
  return {raw, a.scale_};
}

BigFixed operator/(const BigFixed& a, const BigFixed& b) {
  require_same_scale(a, b);
  if (b.raw_ == 0) {
    throw std::domain_error("BigFixed: division by zero");
  }
  const mpz_class num = a.raw_ * pow10(a.scale_);
  mpz_class raw = div_round(abs(num), abs(b.raw_));
  if (sgn(num) * sgn(b.raw_) < 0) {
    raw = -raw;
  }
  return {raw, a.scale_};
}

// ---------------------------------------------------------------------------
// Elementary functions

BigFixed euler_gamma_fixed(int scale) {
  if (scale > kGammaLiteralDecimals - 5) {
    throw ResourceError("euler_gamma_fixed: requested scale exceeds stored digits");
  }
  return BigFixed::from_decimal(kGammaDigits, scale);
}

BigFixed ln2_fixed(int scale) {
  const int inner = scale + 5;
  const BigFixed v = two_atanh(mpq_class(1, 3), inner);
  return BigFixed(div_round(v.raw(), pow10(5)), scale);
}

BigFixed fixed_ln(const mpq_class& r, int scale) {
  if (sgn(r) <= 0) {
    throw DomainError("fixed_ln: argument must be > 0");
  }
  // r = m * 2^e with m in [0.75, 1.5).
  long e = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
  mpq_class m = r;
  if (e >= 0) {
    m /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(e));
  } else {
    m *= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(-e));
  }
  while (m >= mpq_class(3, 2)) {
    m /= 2;
    ++e;
  }
  while (m < mpq_class(3, 4)) {
    m *= 2;
    --e;
  }
  const int extra = 5 + static_cast<int>(std::log10(static_cast<double>(std::labs(e)) + 1.0));
  const int inner = scale + extra;
  const mpq_class z = (m - 1) / (m + 1);
  BigFixed v = two_atanh(z, inner);
  if (e != 0) {
    v = v + BigFixed(ln2_fixed(inner).raw() * e, inner);
  }
  mpz_class raw = div_round(abs(v.raw()), pow10(extra));
  if (v.sign() < 0) {
    raw = -raw;
  }
  return {raw, scale};
}

BigFixed fixed_exp(const BigFixed& y) {
  const int scale = y.scale();
  constexpr int kHalvings = 12;
  const int inner = scale + 10;
  const BigFixed yi(y.raw() * pow10(10), inner);
  const BigFixed ln2 = ln2_fixed(inner);
  // y = k ln2 + r with |r| <= ln2 / 2.
  const mpz_class k = div_round(abs(yi.raw()), ln2.raw()) * sgn(yi.raw());
  const BigFixed r = yi - BigFixed(ln2.raw() * k, inner);
  // exp(r / 2^12) by Taylor, then square back up.
  const BigFixed small(div_round(r.raw(), mpz_class(1) << kHalvings), inner);
  BigFixed term = BigFixed::from_int(1, inner);
  BigFixed sum = term;
  for (long n = 1; term.raw() != 0; ++n) {
    term = term * small;
    term = BigFixed(div_round(term.raw(), mpz_class(n)), inner);
    sum = sum + term;
  }
  for (int i = 0; i < kHalvings; ++i) {
    sum = sum * sum;
  }
  mpz_class raw = sum.raw();
  if (k >= 0) {
    raw <<= static_cast<mp_bitcnt_t>(k.get_ui());
  } else {
    const mpz_class kk = -k;
    raw = div_round(raw, mpz_class(1) << static_cast<mp_bitcnt_t>(kk.get_ui()));
  }
  return {div_round(raw, pow10(10)), scale};
}

std::vector<mpq_class> bernoulli_numbers(int n) {
  if (n <= static_cast<int>(bernoulli_table().size()) - 1) {
    return {bernoulli_table().begin(), bernoulli_table().begin() + n + 1};
  }
  return compute_bernoulli(n);
}

// ---------------------------------------------------------------------------
// Series references

Reference polygamma_reference(int order, PositiveAbscissa x, int digits) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("polygamma_reference: order must be 0, 1 or 2");
  }
  const int scale = working_scale(digits);
  const mpq_class xq = ExactRational::from_double(x.value()).value();
  const double target = std::pow(10.0, -(digits + 3));

  long K = 64;
  const auto remainder = [&](long k) {
    std::vector<double> shifts{static_cast<double>(k) + x.value()};
    if (order == 0) {
      shifts.push_back(static_cast<double>(k) + 1.0);
    }
    return tail_remainder(order, shifts);
  };
  while (remainder(K) > target) {
    K *= 2;
    if (K > kMaxTruncation) {
      throw ResourceError("polygamma_reference: truncation index exceeds cap");
    }
  }

  const auto& bern = bernoulli_table();
  BigFixed sum = BigFixed::from_int(0, scale);
  const mpq_class kx = mpq_class(K) + xq;

  if (order == 0) {
    for (long k = 0; k < K; ++k) {
      const mpq_class term = mpq_class(1, k + 1) - 1 / (mpq_class(k) + xq);
      sum = sum + BigFixed::from_rational(term, scale);
    }
    const mpq_class k1 = mpq_class(K + 1);
    mpq_class tail = (1 / k1 - 1 / kx) / 2;
    for (int j = 1; j <= kTailTerms; ++j) {
      const mpq_class& b = bern[static_cast<std::size_t>(2 * j)];
      tail += b / (2 * j) * (pow_neg(k1, 2 * j) - pow_neg(kx, 2 * j));
    }
    const BigFixed log_part = fixed_ln(kx / k1, scale);
    const BigFixed value = sum + BigFixed::from_rational(tail, scale) + log_part -
                           euler_gamma_fixed(scale);
    return {value, remainder(K) + std::pow(10.0, -(digits + kGuardDigits - 4))};
  }

  const int p = order + 1;
  for (long k = 0; k < K; ++k) {
    sum = sum + BigFixed::from_rational(pow_neg(mpq_class(k) + xq, p), scale);
  }
  mpq_class tail = pow_neg(kx, order) / order + pow_neg(kx, p) / 2;
  const mpz_class mfact = factorial(order);
  for (int j = 1; j <= kTailTerms; ++j) {
    const mpq_class& b = bern[static_cast<std::size_t>(2 * j)];
    mpq_class ratio(factorial(order + 2 * j - 1), factorial(2 * j) * mfact);
    ratio.canonicalize();
    tail += b * ratio * pow_neg(kx, order + 2 * j);
  }
  BigFixed value = sum + BigFixed::from_rational(tail, scale);
  // psi^(m)(x) = (-1)^{m+1} m! sum 1/(k+x)^{m+1}
  value = BigFixed(value.raw() * mfact * (order % 2 == 1 ? 1 : -1), scale);
  const double bound = remainder(K) * mfact.get_d() + std::pow(10.0, -(digits + kGuardDigits - 4));
  return {value, bound};
}

Reference digamma_reference(PositiveAbscissa x, int digits) {
  return polygamma_reference(0, x, digits);
}

Reference log_expm1_recip_reference(PositiveAbscissa x, int digits) {
  const int scale = working_scale(digits);
  const mpq_class u = 1 / ExactRational::from_double(x.value()).value();
  const double slack = std::pow(10.0, -(digits + kGuardDigits - 4));

  if (u <= 1) {
    // ln(e^u - 1) = ln u + ln(sum_{k>=0} u^k / (k+1)!)
    const BigFixed uf = BigFixed::from_rational(u, scale);
    BigFixed term = BigFixed::from_int(1, scale);
    BigFixed series = term;
    for (long k = 1; term.raw() != 0; ++k) {
      term = term * uf;
      term = BigFixed(div_round(term.raw(), mpz_class(k + 1)), scale);
      series = series + term;
    }
    return {fixed_ln(u, scale) + fixed_ln(series.to_rational(), scale), slack};
  }
  const BigFixed uf = BigFixed::from_rational(u, scale);
  if (u > 400) {
    // e^{-u} < 1e-173, far below 10^-scale.
    return {uf, slack};
  }
  const BigFixed one = BigFixed::from_int(1, scale);
  const BigFixed decay = fixed_exp(-uf);
  return {uf + fixed_ln((one - decay).to_rational(), scale), slack};
}

}  // namespace psib
