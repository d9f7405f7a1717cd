#include "ipdhyp/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <ios>
#include <mutex>

#include <boost/multiprecision/gmp.hpp>

namespace ipd {

namespace {

std::atomic<int> g_digits{Precision::kDefaultDigits};

void set_thread_working_precision() {
  Real::default_precision(static_cast<unsigned>(Precision::working_digits()));
}

const bool g_initialised = (set_thread_working_precision(), true);

}  // namespace

// ---------------------------------------------------------------------------
// Precision context

int Precision::digits() noexcept { return g_digits.load(std::memory_order_relaxed); }

void Precision::set_digits(int digits) {
  if (digits < kMinDigits) {
    throw Error(ErrorKind::InvalidArgument,
                "precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  g_digits.store(digits, std::memory_order_relaxed);
  set_thread_working_precision();
}

void Precision::apply_to_this_thread() { set_thread_working_precision(); }

bool Precision::load_from_environment() {
  const char* value = std::getenv(kEnvVar);
  if (value == nullptr || *value == '\0') return true;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < kMinDigits || parsed > 10000) return false;
  set_digits(static_cast<int>(parsed));
  return true;
}

Real Precision::tolerance(int slack) { return pow10(-(digits() - slack)); }

ScopedPrecision::ScopedPrecision(int digits) : saved_(Precision::digits()) {
  Precision::set_digits(digits);
}

ScopedPrecision::~ScopedPrecision() { Precision::set_digits(saved_); }

// ---------------------------------------------------------------------------
// Real helpers

Real parse_real(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error(ErrorKind::ParseError, "empty number");
  s = s.substr(first, last - first + 1);
  // mpfr accepts things like "inf" and "nan"; reject anything that is not a plain decimal.
  bool digit_seen = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digit_seen = true;
    } else if (ch == '+' || ch == '-') {
      if (i != 0 && s[i - 1] != 'e' && s[i - 1] != 'E') {
        throw Error(ErrorKind::ParseError, "malformed number '" + s + "'");
      }
    } else if (ch != '.' && ch != 'e' && ch != 'E') {
      throw Error(ErrorKind::ParseError, "malformed number '" + s + "'");
    }
  }
  if (!digit_seen) throw Error(ErrorKind::ParseError, "malformed number '" + s + "'");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "malformed number '" + s + "'");
  }
}

Real pow10(int exponent) {
  Real ten(10);
  return boost::multiprecision::pow(ten, exponent);
}

Real pi() {
  Real value;
  mpfr_const_pi(value.backend().data(), MPFR_RNDN);
  return value;
}

std::string format_real(const Real& value, int significant_digits) {
  if (value == 0) return "0";
  return value.str(significant_digits, std::ios_base::scientific);
}

// ---------------------------------------------------------------------------
// Complex

Complex Complex::from_strings(std::string_view re, std::string_view im) {
  return Complex(parse_real(re), parse_real(im));
}

Complex Complex::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return Complex(parse_real(s));

  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  if (imag_part.front() == '+') imag_part.erase(0, 1);
  return Complex(parse_real(real_part), parse_real(imag_part));
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.re == 0 && o.im == 0) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
  if (o.im == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  // Smith's algorithm keeps the intermediate magnitudes bounded.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    const Real ratio = o.im / o.re;
    const Real denom = o.re + o.im * ratio;
    Real r = (re + im * ratio) / denom;
    im = (im - re * ratio) / denom;
    re = std::move(r);
  } else {
    const Real ratio = o.re / o.im;
    const Real denom = o.re * ratio + o.im;
    Real r = (re * ratio + im) / denom;
    im = (im * ratio - re) / denom;
    re = std::move(r);
  }
  return *this;
}

Complex operator-(const Complex& z) { return Complex(-z.re, -z.im); }
Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator/(const Complex& a, const Complex& b) {
  Complex r = a;
  r /= b;
  return r;
}
Complex operator+(const Complex& a, long long b) { return Complex(a.re + b, a.im); }
Complex operator+(long long a, const Complex& b) { return Complex(b.re + a, b.im); }
Complex operator-(const Complex& a, long long b) { return Complex(a.re - b, a.im); }
Complex operator-(long long a, const Complex& b) { return Complex(Real(a) - b.re, -b.im); }
Complex operator*(const Complex& a, long long b) { return Complex(a.re * b, a.im * b); }
Complex operator*(long long a, const Complex& b) { return Complex(b.re * a, b.im * a); }
Complex operator/(const Complex& a, long long b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "complex division by integer zero");
  return Complex(a.re / b, a.im / b);
}
Complex operator/(long long a, const Complex& b) { return Complex(a) / b; }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(b.re * a, b.im * a); }
Complex operator/(const Complex& a, const Real& b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "complex division by real zero");
  return Complex(a.re / b, a.im / b);
}
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex log(const Complex& z) {
  if (is_zero(z)) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return Complex(boost::multiprecision::log(abs(z)), arg(z));
}

Complex exp(const Complex& z) {
  const Real modulus = boost::multiprecision::exp(z.re);
  if (z.im == 0) return Complex(modulus);
  return Complex(modulus * boost::multiprecision::cos(z.im), modulus * boost::multiprecision::sin(z.im));
}

Complex pow(const Complex& base, const Complex& exponent) {
  if (is_zero(exponent)) return Complex(1);
  if (is_zero(base)) {
    if (exponent.re > 0) return Complex(0);
    throw Error(ErrorKind::DivisionByZero, "zero raised to a non-positive power");
  }
  return exp(exponent * log(base));
}

Complex pow(const Complex& base, int exponent) {
  if (exponent < 0) return Complex(1) / pow(base, -exponent);
  Complex result(1);
  Complex square = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= square;
    e >>= 1U;
    if (e != 0) square *= square;
  }
  return result;
}

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }
bool is_real(const Complex& z) { return z.im == 0; }

bool is_nonpositive_integer(const Complex& z) {
  return z.im == 0 && z.re <= 0 && boost::multiprecision::floor(z.re) == z.re;
}

Real distance_to_nonpositive_integers(const Complex& z) {
  Real nearest = z.re > 0 ? Real(0) : boost::multiprecision::round(z.re);
  return boost::multiprecision::hypot(z.re - nearest, z.im);
}

bool near_zero(const Complex& z, const Real& scale, int slack) {
  return abs(z) <= Precision::tolerance(slack) * scale;
}

std::string to_string(const Complex& z, int significant_digits) {
  const int digits = significant_digits > 0 ? significant_digits : Precision::digits();
  std::string out = format_real(z.re, digits);
  std::string imag = format_real(z.im, digits);
  if (imag.front() != '-') out += '+';
  out += imag;
  out += 'i';
  return out;
}

// ---------------------------------------------------------------------------
// Vectors

IntVector::IntVector(std::initializer_list<int> entries) : IntVector(std::vector<int>(entries)) {}

IntVector::IntVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "IntVector entries must be positive");
    total_ += e;
  }
}

void ParamVector::append(const ParamVector& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

ParamVector ParamVector::shifted(const Complex& delta) const {
  ParamVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& z : entries_) out.entries_.push_back(z + delta);
  return out;
}

ParamVector ParamVector::negated() const {
  ParamVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& z : entries_) out.entries_.push_back(-z);
  return out;
}

ParamVector ParamVector::plus(const IntVector& m) const {
  if (m.size() != entries_.size()) {
    throw Error(ErrorKind::LengthMismatch, "parameter and integer vectors differ in length");
  }
  ParamVector out;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_.push_back(entries_[i] + m[i]);
  return out;
}

void require_same_length(const ParamVector& f, const IntVector& m) {
  if (f.size() != m.size()) {
    throw Error(ErrorKind::LengthMismatch, "f has " + std::to_string(f.size()) +
                                               " entries but m has " + std::to_string(m.size()));
  }
}

// ---------------------------------------------------------------------------
// Pochhammer and friends

Complex pochhammer(const Complex& a, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "pochhammer order must be non-negative");
  Complex result(1);
  for (int j = 0; j < n; ++j) result *= a + j;
  return result;
}

Complex falling(const Complex& x, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "falling factorial order must be non-negative");
  Complex result(1);
  for (int j = 0; j < k; ++j) result *= x - j;
  return result;
}

Complex pochhammer_vec(const ParamVector& f, std::span<const int> counts) {
  if (f.size() != counts.size()) {
    throw Error(ErrorKind::LengthMismatch, "pochhammer_vec: f and m differ in length");
  }
  Complex result(1);
  for (std::size_t i = 0; i < f.size(); ++i) result *= pochhammer(f[i], counts[i]);
  return result;
}

Complex pochhammer_vec(const ParamVector& f, const IntVector& m) {
  return pochhammer_vec(f, std::span<const int>(m.entries()));
}

Real factorial(int n) {
  Real result(1);
  for (int j = 2; j <= n; ++j) result *= j;
  return result;
}

Real binomial(int n, int k) {
  if (k < 0 || k > n) return Real(0);
  Real result(1);
  for (int j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gamma function

namespace {

using Rational = boost::multiprecision::mpq_rational;

class BernoulliTable {
 public:
  // B_{2k} at the current working precision.
  Real even(int k) {
    std::lock_guard lock(mutex_);
    const int index = 2 * k;
    extend_exact(index);
    const int digits = Precision::working_digits();
    if (cached_digits_ != digits) {
      cached_real_.clear();
      cached_digits_ = digits;
    }
    while (static_cast<int>(cached_real_.size()) <= k) {
      const Rational& b = exact_[2 * cached_real_.size()];
      Real num(boost::multiprecision::numerator(b).str());
      Real den(boost::multiprecision::denominator(b).str());
      cached_real_.push_back(num / den);
    }
    return cached_real_[static_cast<std::size_t>(k)];
  }

 private:
  void extend_exact(int upto) {
    if (exact_.empty()) exact_.push_back(Rational(1));
    while (static_cast<int>(exact_.size()) <= upto) {
      const int n = static_cast<int>(exact_.size());
      if (n > 1 && n % 2 == 1) {
        exact_.push_back(Rational(0));
        continue;
      }
      // sum_{k=0}^{n} C(n+1, k) B_k = 0
      Rational sum(0);
      boost::multiprecision::mpz_int c(1);
      for (int k = 0; k < n; ++k) {
        sum += Rational(c) * exact_[static_cast<std::size_t>(k)];
        c = c * (n + 1 - k) / (k + 1);
      }
      exact_.push_back(-sum / Rational(n + 1));
    }
  }

  std::mutex mutex_;
  std::vector<Rational> exact_;
  std::vector<Real> cached_real_;
  int cached_digits_ = 0;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

struct ShiftedArgument {
  Complex w;      // z + shift, in the region where the Stirling series is accurate
  int shift = 0;
};

ShiftedArgument shift_for_stirling(const Complex& z) {
  const Real radius(0.4 * Precision::working_digits() + 6);
  ShiftedArgument s{z, 0};
  if (z.re >= Real(0.5) && abs(z) >= radius) return s;
  if (z.re < radius) {
    s.shift = static_cast<int>(boost::multiprecision::ceil(radius - z.re).convert_to<long>());
  }
  s.w = z + s.shift;
  return s;
}

// log Gamma(w) for Re(w) large, by the Stirling series.
Complex stirling_log_gamma(const Complex& w) {
  static const Real half("0.5");
  Complex result = (w - Complex(half)) * log(w) - w + Complex(boost::multiprecision::log(2 * pi()) / 2);
  const Real threshold = pow10(-(Precision::working_digits() + 2));
  const Complex inv_w = Complex(1) / w;
  const Complex inv_w2 = inv_w * inv_w;
  Complex power = inv_w;
  for (int k = 1; k < 400; ++k) {
    Complex term = power * (bernoulli_table().even(k) / Real(2 * k * (2 * k - 1)));
    result += term;
    if (abs(term) < threshold * (1 + abs(result))) return result;
    power *= inv_w2;
  }
  throw Error(ErrorKind::NonConvergence, "Stirling series for log Gamma did not converge");
}

}  // namespace

Complex log_gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorKind::PoleAtNonpositiveInteger, "log_gamma at " + to_string(z, 10));
  }
  const ShiftedArgument s = shift_for_stirling(z);
  Complex result = stirling_log_gamma(s.w);
  for (int j = 0; j < s.shift; ++j) result -= log(z + j);
  return result;
}

Complex gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::GammaPole, "gamma at " + to_string(z, 10));
  const ShiftedArgument s = shift_for_stirling(z);
  Complex result = exp(stirling_log_gamma(s.w));
  if (s.shift > 0) result /= pochhammer(z, s.shift);
  return result;
}

Complex reciprocal_gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) return Complex(0);
  return Complex(1) / gamma(z);
}

// ---------------------------------------------------------------------------
// Stirling numbers of the second kind

namespace {

class Stirling2Table {
 public:
  BigInt get(int j, int k) {
    if (j < 0 || k < 0 || k > j) return j == 0 && k == 0 ? BigInt(1) : BigInt(0);
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= j) {
      const int n = static_cast<int>(rows_.size());
      std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
      if (n == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_.back();
        row[0] = 0;
        for (int kk = 1; kk <= n; ++kk) {
          BigInt above = kk < n ? prev[static_cast<std::size_t>(kk)] : BigInt(0);
          row[static_cast<std::size_t>(kk)] = kk * above + prev[static_cast<std::size_t>(kk) - 1];
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

Stirling2Table& stirling2_table() {
  static Stirling2Table table;
  return table;
}

}  // namespace

BigInt stirling2(int j, int k) { return stirling2_table().get(j, k); }

Real stirling2_real(int j, int k) { return Real(stirling2(j, k).str()); }

std::vector<Complex> genfunc_coeffs(const ParamVector& f, const IntVector& m, const Complex& shift,
                                    int sign) {
  require_same_length(f, m);
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  std::vector<Complex> coeffs{Complex(1)};
  coeffs.reserve(static_cast<std::size_t>(m.total()) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int j = 0; j < m[i]; ++j) {
      // multiply by (c + sign*x)
      const Complex c = f[i] + shift + j;
      coeffs.push_back(Complex(0));
      for (std::size_t d = coeffs.size() - 1; d > 0; --d) {
        coeffs[d] = coeffs[d] * c + coeffs[d - 1] * static_cast<long long>(sign);
      }
      coeffs[0] *= c;
    }
  }
  return coeffs;
}

}  // namespace ipd
