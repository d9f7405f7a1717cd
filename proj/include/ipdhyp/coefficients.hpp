#pragma once

#include <optional>

#include "ipdhyp/poly.hpp"
#include "ipdhyp/scalar.hpp"

namespace ipd {

/// Parameters of r+2F_{r+1}(a, b, f+m; c, f | x).
struct IpdSpec {
  std::optional<Complex> a;
  Complex b;
  Complex c;
  ParamVector f;
  IntVector m;

  /// Throws LengthMismatch / InvalidArgument when the shape is wrong.
  void validate() const;
  int total_m() const noexcept { return m.total(); }
  ParamVector f_plus_m() const { return f.plus(m); }
  const Complex& require_a() const;
};

/// Arguments (a; b) of the Nørlund coefficient g_n(a; b), len(b) = len(a) + 1.
struct NorlundArgs {
  ParamVector a;
  ParamVector b;

  std::size_t p() const noexcept { return b.size(); }
  void validate() const;
};

enum class Route {
  stirling,
  hypergeometric,
  finite_difference,
  norlund,
};

enum class NorlundRoute {
  recurrence,
  explicit_sum,
  closed_form,
};

/// C_{k,r}(f, m).
Complex coeff_C(int k, const ParamVector& f, const IntVector& m, Route route = Route::hypergeometric);

/// D_k(f, m, b); the finite-difference route is Δ^k (f-b-t)_m at t = 0 over k!.
Complex coeff_D(int k, const ParamVector& f, const IntVector& m, const Complex& b,
                Route route = Route::hypergeometric);

/// Y_l(b, f, m), 0 <= l <= m-1.
Complex coeff_Y(int l, const Complex& b, const ParamVector& f, const IntVector& m,
                Route route = Route::hypergeometric);

/// W_{m-1}(n) = b((f+n)_m - (f-b)_m) / ((b+n)(f)_m). Returns the flagged zero
/// polynomial when b = 0.
CPoly w_poly(const Complex& b, const ParamVector& f, const IntVector& m);

Complex norlund_g(int n, const NorlundArgs& args, NorlundRoute route = NorlundRoute::recurrence);

/// Finite sum of a terminating hypergeometric series at x = 1, by term ratios.
/// Throws ZeroDenominator if a bottom parameter is hit before termination.
Complex terminating_sum(const ParamVector& num, const ParamVector& den);

}  // namespace ipd
