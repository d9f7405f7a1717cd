#pragma once

#include <cstdint>
#include <vector>

#include "ipdhyp/scalar.hpp"

namespace ipd {

/// Dense polynomial with ascending coefficients. Trailing coefficients below
/// 10^-(P-6) of the largest magnitude are trimmed on construction; a polynomial
/// whose coefficients all vanish is the flagged zero polynomial.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<Complex> coeffs);

  static CPoly constant(const Complex& value);
  /// value * t^degree.
  static CPoly monomial(int degree, const Complex& value = Complex(1));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; 0 for the zero polynomial (check is_zero()).
  int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i, zero beyond the degree.
  Complex coeff(int i) const;
  Complex leading() const;

  Complex operator()(const Complex& t) const;
  CPoly derivative() const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Complex& s);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

CPoly operator+(const CPoly& a, const CPoly& b);
CPoly operator-(const CPoly& a, const CPoly& b);
CPoly operator*(const CPoly& a, const CPoly& b);
CPoly operator*(const CPoly& a, const Complex& s);
CPoly operator*(const Complex& s, const CPoly& a);

/// Coefficients of (c + sign*t)_n as a polynomial in t.
CPoly rising_poly(const Complex& c, int n, int sign = 1);

/// Monic polynomial prod (t - r_i).
CPoly from_roots(const ParamVector& roots);

/// Newton interpolation through (nodes[i], values[i]).
CPoly interpolate(const std::vector<Complex>& nodes, const std::vector<Complex>& values);

struct RootSet {
  ParamVector roots;
  /// max_i |p(r_i)| / sum_k |a_k| |r_i|^k.
  Real residual;
  /// Index-aligned with roots: true when the root sits on 0, -1, -2, ...
  /// to within tolerance.
  std::vector<bool> near_nonpositive_integer;

  bool any_flagged() const;
};

struct RootOptions {
  std::uint64_t seed = 0x5eed1234abcdULL;
  int max_iterations = 200;
};

/// Aberth-Ehrlich iteration from a seeded random circle. Roots are returned
/// sorted by real part, then imaginary part.
RootSet find_roots(const CPoly& poly, const RootOptions& options = {});

}  // namespace ipd
