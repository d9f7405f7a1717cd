#pragma once

#include <string>

#include "ipdhyp/scalar.hpp"

namespace ipd {

/// pFq(num; den | x) with p = num.size(), q = den.size().
struct HypFunction {
  ParamVector num;
  ParamVector den;

  std::size_t p() const noexcept { return num.size(); }
  std::size_t q() const noexcept { return den.size(); }
  std::string describe(int digits = 12) const;
};

struct EvalResult {
  Complex value;
  long terms_used = 0;
  /// Estimated truncation error; at most tol * max(1, |value|) on success.
  Real tail_bound;
};

struct EvalOptions {
  /// Zero selects 10^-(P+2).
  Real tol = Real(0);
  long max_terms = 1000000;
};

/// Direct series evaluation. Terminating series are summed exactly; |x| < 1
/// uses a geometric tail estimate; |x| = 1 (p = q+1, Re(sum den - sum num) > 0)
/// is accelerated with the Levin u-transform at raised precision.
EvalResult eval_pfq(const HypFunction& fun, const Complex& x, const EvalOptions& options = {});

/// (1-x)^mu on the principal branch.
Complex eval_prefactor(const Complex& x, const Complex& mu);

/// x/(x-1).
Complex mobius_arg(const Complex& x);

}  // namespace ipd
