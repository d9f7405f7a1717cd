#include "ipdhyp/hyp_eval.hpp"

#include <algorithm>
#include <optional>

namespace ipd {

std::string HypFunction::describe(int digits) const {
  std::string s = std::to_string(p()) + "F" + std::to_string(q()) + "(";
  for (std::size_t i = 0; i < num.size(); ++i) s += (i ? ", " : "") + to_string(num[i], digits);
  s += "; ";
  for (std::size_t i = 0; i < den.size(); ++i) s += (i ? ", " : "") + to_string(den[i], digits);
  return s + ")";
}

namespace {

class ThreadPrecisionGuard {
 public:
  explicit ThreadPrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~ThreadPrecisionGuard() { Real::default_precision(saved_); }
  ThreadPrecisionGuard(const ThreadPrecisionGuard&) = delete;
  ThreadPrecisionGuard& operator=(const ThreadPrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real at_precision(const Real& v, unsigned digits) { return Real(v, digits); }

Complex at_precision(const Complex& z, unsigned digits) {
  return Complex(at_precision(z.re, digits), at_precision(z.im, digits));
}

ParamVector at_precision(const ParamVector& v, unsigned digits) {
  ParamVector out;
  for (const auto& z : v) out.push_back(at_precision(z, digits));
  return out;
}

// Index n such that the n-th term is the last nonzero one, when some
// numerator parameter is an exact nonpositive integer.
std::optional<long> terminal_index(const ParamVector& num) {
  std::optional<long> best;
  for (const auto& a : num) {
    if (!is_nonpositive_integer(a)) continue;
    const long n = (-a.re).convert_to<long>();
    if (!best || n < *best) best = n;
  }
  return best;
}

Complex ratio_factor(const HypFunction& fun, const Complex& x, long n) {
  Complex num(1);
  Complex den(n + 1);
  for (const auto& a : fun.num) num *= a + n;
  for (const auto& b : fun.den) den *= b + n;
  return num * x / den;
}

EvalResult sum_terminating(const HypFunction& fun, const Complex& x, long last) {
  for (const auto& b : fun.den) {
    if (is_nonpositive_integer(b) && (-b.re).convert_to<long>() < last) {
      throw Error(ErrorKind::DenominatorPole,
                  "bottom parameter " + to_string(b, 10) + " is reached before the series terminates");
    }
  }
  Complex sum(0);
  Complex term(1);
  for (long n = 0; n <= last; ++n) {
    sum += term;
    if (n < last) term *= ratio_factor(fun, x, n);
  }
  return EvalResult{sum, last + 1, Real(0)};
}

EvalResult sum_geometric(const HypFunction& fun, const Complex& x, const Real& tol, long max_terms) {
  Real largest_param(0);
  for (const auto& a : fun.num) largest_param = std::max(largest_param, abs(a));
  for (const auto& b : fun.den) largest_param = std::max(largest_param, abs(b));
  const long transient = 2 * boost::multiprecision::ceil(largest_param).convert_to<long>() + 4;
  const bool balanced = fun.p() == fun.q() + 1;
  const Real modulus = abs(x);

  Complex sum(0);
  Complex term(1);
  for (long n = 0; n < max_terms; ++n) {
    sum += term;
    const Complex factor = ratio_factor(fun, x, n);
    const Complex next = term * factor;
    if (is_zero(next)) return EvalResult{sum, n + 1, Real(0)};
    Real rho = abs(factor);
    if (balanced) rho = std::max(rho, modulus);
    if (n >= transient && rho < 1) {
      const Real tail = abs(next) / (1 - rho);
      if (tail <= tol * std::max(Real(1), abs(sum))) return EvalResult{sum + next, n + 2, tail};
    }
    term = next;
  }
  throw Error(ErrorKind::SlowConvergence,
              fun.describe() + " needs more than " + std::to_string(max_terms) + " terms");
}

// Levin u-transform of the partial sums S_n with remainder estimates (n+1) a_n,
// n = 0..K. Estimates for growing K are compared until two successive ones agree.
EvalResult sum_levin(const HypFunction& fun_in, const Complex& x_in, const Real& tol) {
  const unsigned digits = static_cast<unsigned>(2 * Precision::working_digits() + 10);
  const Real tol_out = tol;
  ThreadPrecisionGuard guard(digits);
  HypFunction fun{at_precision(fun_in.num, digits), at_precision(fun_in.den, digits)};
  const Complex x = at_precision(x_in, digits);

  constexpr int kStep = 4;
  constexpr int kMaxOrder = 200;
  std::vector<Complex> terms{Complex(1)};
  std::vector<Complex> partial{Complex(1)};
  auto extend = [&](int upto) {
    while (static_cast<int>(terms.size()) <= upto) {
      const long n = static_cast<long>(terms.size()) - 1;
      terms.push_back(terms.back() * ratio_factor(fun, x, n));
      partial.push_back(partial.back() + terms.back());
    }
  };

  std::optional<Complex> previous;
  Real previous_diff(-1);
  for (int order = 8; order <= kMaxOrder; order += kStep) {
    extend(order);
    Complex numerator(0);
    Complex denominator(0);
    for (int j = 0; j <= order; ++j) {
      if (is_zero(terms[static_cast<std::size_t>(j)])) {
        const unsigned wd = static_cast<unsigned>(Precision::working_digits());
        return EvalResult{at_precision(partial[static_cast<std::size_t>(j)], wd), j + 1, Real(0)};
      }
      Real weight = binomial(order, j) *
                    boost::multiprecision::pow(Real(j + 1) / Real(order + 1), order - 1);
      if (j % 2 == 1) weight = -weight;
      const Complex w = Complex(weight) / (terms[static_cast<std::size_t>(j)] * (j + 1));
      numerator += w * partial[static_cast<std::size_t>(j)];
      denominator += w;
    }
    const Complex estimate = numerator / denominator;
    if (previous) {
      const Real diff = abs(estimate - *previous);
      const Real bound = tol_out * std::max(Real(1), abs(estimate));
      if (diff <= bound && previous_diff >= 0 && previous_diff <= 1000 * bound) {
        const unsigned wd = static_cast<unsigned>(Precision::working_digits());
        return EvalResult{at_precision(estimate, wd), order + 1, Real(diff, wd)};
      }
      previous_diff = diff;
    }
    previous = estimate;
  }
  throw Error(ErrorKind::SlowConvergence,
              fun_in.describe() + " at |x| = 1: Levin transform did not settle");
}

}  // namespace

EvalResult eval_pfq(const HypFunction& fun, const Complex& x, const EvalOptions& options) {
  const Real tol = options.tol > 0 ? options.tol : Precision::tolerance(-2);
  if (is_zero(x)) return EvalResult{Complex(1), 1, Real(0)};

  if (const auto last = terminal_index(fun.num)) return sum_terminating(fun, x, *last);

  for (const auto& b : fun.den) {
    if (is_nonpositive_integer(b)) {
      throw Error(ErrorKind::DenominatorPole, "bottom parameter " + to_string(b, 10) + " in " + fun.describe());
    }
  }
  if (fun.p() <= fun.q()) return sum_geometric(fun, x, tol, options.max_terms);
  if (fun.p() > fun.q() + 1) {
    throw Error(ErrorKind::DivergentSeries, fun.describe() + " diverges for x != 0");
  }

  const Real distance_to_circle = abs(norm(x) - 1);
  const Real circle_tol = pow10(-(Precision::working_digits() - 4));
  if (distance_to_circle > circle_tol && norm(x) < 1) {
    return sum_geometric(fun, x, tol, options.max_terms);
  }
  if (distance_to_circle > circle_tol) {
    throw Error(ErrorKind::DivergentSeries, fun.describe() + " diverges for |x| > 1");
  }
  Complex excess(0);
  for (const auto& b : fun.den) excess += b;
  for (const auto& a : fun.num) excess -= a;
  if (excess.re <= 0) {
    throw Error(ErrorKind::DivergentSeries,
                fun.describe() + " on |x| = 1 needs Re(sum den - sum num) > 0");
  }
  return sum_levin(fun, x, tol);
}

Complex eval_prefactor(const Complex& x, const Complex& mu) {
  if (is_real(x) && x.re >= 1) {
    throw Error(ErrorKind::OnBranchCut, "(1-x)^mu at x = " + to_string(x, 10));
  }
  if (is_zero(mu)) return Complex(1);
  return exp(mu * log(Complex(1) - x));
}

Complex mobius_arg(const Complex& x) {
  if (x == Complex(1)) throw Error(ErrorKind::PoleAtOne, "x/(x-1) at x = 1");
  return x / (x - 1);
}

}  // namespace ipd
