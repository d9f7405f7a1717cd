#include "ipdhyp/poly.hpp"

#include <algorithm>
#include <random>

namespace ipd {

CPoly::CPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CPoly CPoly::constant(const Complex& value) { return CPoly(std::vector<Complex>{value}); }

CPoly CPoly::monomial(int degree, const Complex& value) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c.back() = value;
  return CPoly(std::move(c));
}

void CPoly::trim() {
  Real largest(0);
  for (const auto& c : coeffs_) largest = std::max(largest, abs(c));
  if (largest == 0) {
    coeffs_.clear();
    return;
  }
  const Real cutoff = largest * Precision::tolerance(6);
  while (!coeffs_.empty() && abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
}

Complex CPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Complex(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Complex CPoly::leading() const { return coeffs_.empty() ? Complex(0) : coeffs_.back(); }

Complex CPoly::operator()(const Complex& t) const {
  Complex acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

CPoly CPoly::derivative() const {
  if (coeffs_.size() <= 1) return CPoly();
  std::vector<Complex> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long long>(i));
  return CPoly(std::move(d));
}

CPoly& CPoly::operator+=(const CPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator*=(const Complex& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  CPoly r = a;
  r += b;
  return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) {
  CPoly r = a;
  r -= b;
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return CPoly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Complex> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return CPoly(std::move(out));
}

CPoly operator*(const CPoly& a, const Complex& s) {
  CPoly r = a;
  r *= s;
  return r;
}

CPoly operator*(const Complex& s, const CPoly& a) { return a * s; }

CPoly rising_poly(const Complex& c, int n, int sign) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "rising_poly order must be non-negative");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  std::vector<Complex> coeffs{Complex(1)};
  for (int j = 0; j < n; ++j) {
    const Complex shift = c + j;
    coeffs.push_back(Complex(0));
    for (std::size_t d = coeffs.size() - 1; d > 0; --d) {
      coeffs[d] = coeffs[d] * shift + coeffs[d - 1] * static_cast<long long>(sign);
    }
    coeffs[0] *= shift;
  }
  return CPoly(std::move(coeffs));
}

CPoly from_roots(const ParamVector& roots) {
  std::vector<Complex> coeffs{Complex(1)};
  for (const auto& r : roots) {
    coeffs.push_back(Complex(0));
    for (std::size_t d = coeffs.size() - 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - coeffs[d] * r;
    coeffs[0] = -(coeffs[0] * r);
  }
  return CPoly(std::move(coeffs));
}

CPoly interpolate(const std::vector<Complex>& nodes, const std::vector<Complex>& values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw Error(ErrorKind::LengthMismatch, "interpolate needs matching, non-empty node and value lists");
  }
  const std::size_t n = nodes.size();
  std::vector<Complex> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  }
  // Horner on the Newton form.
  CPoly result = CPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * CPoly(std::vector<Complex>{-nodes[i], Complex(1)}) + CPoly::constant(dd[i]);
  }
  return result;
}

bool RootSet::any_flagged() const {
  return std::any_of(near_nonpositive_integer.begin(), near_nonpositive_integer.end(),
                     [](bool b) { return b; });
}

namespace {

Real horner_scale(const std::vector<Complex>& coeffs, const Real& modulus) {
  Real acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * modulus + abs(*it);
  return acc;
}

Real uniform01(std::mt19937_64& rng) {
  return Real(static_cast<long long>(rng() >> 11)) / Real(static_cast<long long>(1ULL << 53));
}

}  // namespace

RootSet find_roots(const CPoly& poly, const RootOptions& options) {
  if (poly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot extract roots of the zero polynomial");
  RootSet out;
  out.residual = 0;
  const int n = poly.degree();
  if (n == 0) return out;

  const auto& a = poly.coeffs();
  const Complex lead = poly.leading();
  std::vector<Complex> z(static_cast<std::size_t>(n));

  if (n == 1) {
    z[0] = -(a[0] / lead);
  } else {
    // Start on a circle whose radius is the geometric mean of the root moduli
    // (or a Fujiwara-type bound when the constant term vanishes).
    Real radius(0);
    if (!is_zero(a[0])) {
      radius = boost::multiprecision::pow(abs(a[0] / lead), Real(1) / n);
    } else {
      for (int k = 0; k < n; ++k) {
        const Real bound = boost::multiprecision::pow(abs(a[static_cast<std::size_t>(k)] / lead),
                                                      Real(1) / (n - k));
        radius = std::max(radius, bound);
      }
    }
    if (radius == 0) radius = 1;
    std::mt19937_64 rng(options.seed);
    const Real two_pi = 2 * pi();
    const Real phase = two_pi * uniform01(rng);
    for (int j = 0; j < n; ++j) {
      const Real theta = phase + two_pi * j / n;
      const Real r = radius * (Real("0.9") + Real("0.2") * uniform01(rng));
      z[static_cast<std::size_t>(j)] =
          Complex(r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta));
    }

    const CPoly dp = poly.derivative();
    const Real eps = pow10(-Precision::working_digits());
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    bool all_done = false;
    for (int iter = 0; iter < options.max_iterations && !all_done; ++iter) {
      all_done = true;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (done[i]) continue;
        const Complex pv = poly(z[i]);
        const Real scale = horner_scale(a, abs(z[i]));
        if (abs(pv) <= 16 * eps * scale) {
          done[i] = true;
          continue;
        }
        all_done = false;
        const Complex dv = dp(z[i]);
        Complex sum(0);
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (j != i && !(z[i] == z[j])) sum += Complex(1) / (z[i] - z[j]);
        }
        Complex step;
        if (is_zero(dv)) {
          step = Complex(-1000 * eps * (1 + abs(z[i])), Real(0));
        } else {
          const Complex newton = pv / dv;
          const Complex denom = Complex(1) - newton * sum;
          step = is_zero(denom) ? newton : newton / denom;
        }
        z[i] -= step;
        if (abs(step) <= eps * abs(z[i])) done[i] = true;
      }
    }
  }

  Real worst(0);
  for (const auto& r : z) {
    const Real scale = horner_scale(a, abs(r));
    worst = std::max(worst, abs(poly(r)) / scale);
  }
  if (worst > Precision::tolerance(10)) {
    throw Error(ErrorKind::NonConvergence,
                "root finder residual " + format_real(worst, 6) + " after " +
                    std::to_string(options.max_iterations) + " iterations");
  }
  std::sort(z.begin(), z.end(), [](const Complex& u, const Complex& v) {
    if (u.re != v.re) return u.re < v.re;
    return u.im < v.im;
  });
  out.residual = worst;
  const Real flag_tol = Precision::tolerance(10);
  for (auto& r : z) {
    out.near_nonpositive_integer.push_back(distance_to_nonpositive_integers(r) <=
                                           flag_tol * (1 + abs(r)));
    out.roots.push_back(std::move(r));
  }
  return out;
}

}  // namespace ipd
