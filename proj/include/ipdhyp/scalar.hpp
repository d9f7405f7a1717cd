/**
 * @file scalar.hpp
 * @brief Complex arithmetic at a configurable decimal precision, plus the
 *        Pochhammer, gamma and Stirling-number machinery built on it.
 *
 * All real scalars are MPFR numbers whose precision is taken from a
 * process-wide context. The user-facing precision is `Precision::digits()`;
 * arithmetic runs at `Precision::working_digits()`, which adds a fixed number
 * of guard digits.
 */
#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "ipdhyp/error.hpp"

namespace ipd {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

class Precision {
 public:
  static constexpr int kDefaultDigits = 40;
  static constexpr int kMinDigits = 16;
  static constexpr int kGuardDigits = 8;
  static constexpr const char* kEnvVar = "IPDHYP_DIGITS";

  static int digits() noexcept;
  static int working_digits() noexcept { return digits() + kGuardDigits; }

  /// Throws InvalidArgument below kMinDigits. Applies to the calling thread
  /// immediately; other threads pick it up via apply_to_this_thread().
  static void set_digits(int digits);
  static void apply_to_this_thread();

  /// Reads IPDHYP_DIGITS if set. Returns false when the variable is malformed.
  static bool load_from_environment();

  /// 10^-(digits() - slack).
  static Real tolerance(int slack);
};

class ScopedPrecision {
 public:
  explicit ScopedPrecision(int digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  int saved_;
};

Real parse_real(std::string_view text);
Real pow10(int exponent);
Real pi();
std::string format_real(const Real& value, int significant_digits);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  template <std::integral I>
  Complex(I value) : re(static_cast<long long>(value)), im(0) {}
  Complex(Real real_part) : re(std::move(real_part)), im(0) {}
  Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}
  explicit Complex(double real_part, double imag_part = 0.0) : re(real_part), im(imag_part) {}

  /// Accepts "1.5", "-2i", "0.3-0.25i", "1e-3+2e2i", "i".
  static Complex parse(std::string_view text);
  /// Exact decimal construction, e.g. Complex::from_strings("0.3", "-0.1").
  static Complex from_strings(std::string_view re, std::string_view im = "0");

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, long long b);
Complex operator+(long long a, const Complex& b);
Complex operator-(const Complex& a, long long b);
Complex operator-(long long a, const Complex& b);
Complex operator*(const Complex& a, long long b);
Complex operator*(long long a, const Complex& b);
Complex operator/(const Complex& a, long long b);
Complex operator/(long long a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& base, const Complex& exponent);
Complex pow(const Complex& base, int exponent);

bool is_zero(const Complex& z);
bool is_real(const Complex& z);
/// Exact test: imaginary part zero and real part an integer <= 0.
bool is_nonpositive_integer(const Complex& z);
/// Distance from z to the set {0, -1, -2, ...}.
Real distance_to_nonpositive_integers(const Complex& z);
/// |z| <= 10^-(digits() - slack) * scale.
bool near_zero(const Complex& z, const Real& scale = Real(1), int slack = 6);

/// "re+imi" at the requested number of significant digits (default: digits()).
std::string to_string(const Complex& z, int significant_digits = 0);

/// Positive integer vector (m_1, ..., m_r) with its total cached.
class IntVector {
 public:
  IntVector() = default;
  IntVector(std::initializer_list<int> entries);
  explicit IntVector(std::vector<int> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int total() const noexcept { return total_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

class ParamVector {
 public:
  ParamVector() = default;
  ParamVector(std::initializer_list<Complex> entries) : entries_(entries) {}
  explicit ParamVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  void push_back(Complex z) { entries_.push_back(std::move(z)); }
  void append(const ParamVector& other);

  ParamVector shifted(const Complex& delta) const;
  ParamVector negated() const;
  /// Element-wise f_i + m_i.
  ParamVector plus(const IntVector& m) const;

 private:
  std::vector<Complex> entries_;
};

void require_same_length(const ParamVector& f, const IntVector& m);

/// Rising factorial (a)_n; exactly 1 for n = 0.
Complex pochhammer(const Complex& a, int n);
/// Falling factorial x(x-1)...(x-k+1).
Complex falling(const Complex& x, int k);
/// (f_1)_{m_1} ... (f_r)_{m_r}.
Complex pochhammer_vec(const ParamVector& f, const IntVector& m);
/// Same product for counts that may include zeros.
Complex pochhammer_vec(const ParamVector& f, std::span<const int> counts);

Real factorial(int n);
Real binomial(int n, int k);

/// Principal branch of log Gamma (sum of principal logs under the shift).
Complex log_gamma(const Complex& z);
Complex gamma(const Complex& z);
/// 1/Gamma(z), zero at the poles.
Complex reciprocal_gamma(const Complex& z);

/// Stirling numbers of the second kind, exact.
BigInt stirling2(int j, int k);
Real stirling2_real(int j, int k);

/// Coefficients (ascending) of prod_i (f_i + shift + sign*x)_{m_i}.
/// sigma_j: shift = 0, sign = +1.  alpha_j of (f - b - t)_m: shift = -b, sign = -1.
std::vector<Complex> genfunc_coeffs(const ParamVector& f, const IntVector& m,
                                    const Complex& shift, int sign);

}  // namespace ipd
