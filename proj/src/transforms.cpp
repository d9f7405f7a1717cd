#include "ipdhyp/transforms.hpp"

#include <algorithm>

namespace ipd {

Complex HypTerm::evaluate(const Complex& x, const EvalOptions& options) const {
  Complex value = coeff;
  if (x_power > 0) value *= pow(x, x_power);
  if (!is_zero(prefactor_exponent)) value *= eval_prefactor(x, prefactor_exponent);
  if (fun) {
    const Complex arg = arg_map == ArgMap::mobius ? mobius_arg(x) : x;
    value *= eval_pfq(*fun, arg, options).value;
  }
  return value;
}

Complex HypExpression::evaluate(const Complex& x, const EvalOptions& options) const {
  Complex sum(0);
  for (const auto& t : terms) sum += t.evaluate(x, options);
  return sum;
}

Real Transformation::residual(const Complex& x, const EvalOptions& options) const {
  const Complex left = eval_pfq(lhs, x, options).value;
  const Complex right = rhs.evaluate(x, options);
  return abs(left - right) / std::max(Real(1), abs(left));
}

HypFunction ipd_function(const IpdSpec& spec) {
  spec.validate();
  HypFunction fun;
  fun.num = ParamVector{spec.require_a(), spec.b};
  fun.num.append(spec.f_plus_m());
  fun.den = ParamVector{spec.c};
  fun.den.append(spec.f);
  return fun;
}

namespace {

Complex sign_power(int k) { return k % 2 == 0 ? Complex(1) : Complex(-1); }

void note_root_warnings(Transformation& t) {
  const Real tol = Precision::tolerance(10);
  for (const auto& term : t.rhs.terms) {
    if (!term.fun) continue;
    for (const auto& b : term.fun->den) {
      if (distance_to_nonpositive_integers(b) <= tol * (1 + abs(b))) {
        t.warnings.push_back("RootWarning: bottom parameter " + to_string(b, 12) +
                             " sits on a nonpositive integer");
      }
    }
  }
}

HypFunction hyp(ParamVector num, ParamVector den) { return HypFunction{std::move(num), std::move(den)}; }

// (head, roots + 1; den_head, roots)
HypFunction root_shifted(ParamVector head, const ParamVector& roots, ParamVector den_head) {
  for (const auto& r : roots) head.push_back(r + 1);
  for (const auto& r : roots) den_head.push_back(r);
  return hyp(std::move(head), std::move(den_head));
}

HypTerm main_term(const Complex& coeff, const Complex& exponent, ArgMap map, HypFunction fun) {
  HypTerm t;
  t.coeff = coeff;
  t.prefactor_exponent = exponent;
  t.arg_map = map;
  t.fun = std::move(fun);
  return t;
}

// sum_l weights[l] (a)_l x^l (1-x)^{-a-l}
void add_algebraic_terms(HypExpression& expr, const Complex& a, const std::vector<Complex>& weights) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    HypTerm t;
    const int li = static_cast<int>(l);
    t.coeff = weights[l] * pochhammer(a, li);
    t.x_power = li;
    t.prefactor_exponent = -a - li;
    expr.add(std::move(t));
  }
}

std::vector<Complex> y_list(const Complex& b, const ParamVector& f, const IntVector& m) {
  std::vector<Complex> y;
  for (int l = 0; l < m.total(); ++l) y.push_back(coeff_Y(l, b, f, m));
  return y;
}

HypTerm single_main_term(const Complex& a, const Complex& b, const Complex& weight, SingleVariant variant) {
  switch (variant) {
    case SingleVariant::eq19:
      return main_term(weight, -a, ArgMap::mobius, hyp({Complex(1), a}, {b + 1}));
    case SingleVariant::eq20:
      return main_term(weight, 1 - a, ArgMap::identity, hyp({Complex(1), b + 1 - a}, {b + 1}));
    case SingleVariant::eq26:
      return main_term(weight, Complex(0), ArgMap::identity, hyp({a, b}, {b + 1}));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown single-degenerate variant");
}

void check_ipd_shape(const ParamVector& f, const IntVector& m) {
  require_same_length(f, m);
  if (m.empty()) throw Error(ErrorKind::InvalidArgument, "at least one (f_i, m_i) pair is required");
}

}  // namespace

Transformation apply_mp1(const IpdSpec& spec, Mp1Route route) {
  Transformation t;
  t.lhs = ipd_function(spec);
  const Complex& a = spec.require_a();
  const int total = spec.total_m();
  const CPoly poly = route == Mp1Route::paperQ ? build_Q(spec.b, spec.c, spec.f, spec.m)
                                               : build_P(spec.b, spec.c, spec.f, spec.m);
  const RootSet zeta = find_roots(poly);
  t.rhs.add(main_term(Complex(1), -a, ArgMap::mobius,
                      root_shifted({a, spec.c - spec.b - total}, zeta.roots, {spec.c})));
  note_root_warnings(t);
  return t;
}

Transformation apply_mp2(const IpdSpec& spec, Mp2Route route) {
  Transformation t;
  t.lhs = ipd_function(spec);
  const Complex& a = spec.require_a();
  const Complex& b = spec.b;
  const Complex& c = spec.c;
  const int total = spec.total_m();
  for (int j = 0; j < total; ++j) {
    if (near_zero(1 + a + b - c + j, Real(1), 4)) {
      throw Error(ErrorKind::DegenerateCase, "(1+a+b-c)_m vanishes");
    }
  }
  const CPoly poly = route == Mp2Route::paperQhat ? build_Qhat(a, b, c, spec.f, spec.m)
                                                  : build_Phat(a, b, c, spec.f, spec.m);
  const RootSet eta = find_roots(poly);
  t.rhs.add(main_term(Complex(1), c - a - b - total, ArgMap::identity,
                      root_shifted({c - a - total, c - b - total}, eta.roots, {c})));
  note_root_warnings(t);
  return t;
}

Transformation expand_to_gauss(const IpdSpec& spec) {
  Transformation t;
  t.lhs = ipd_function(spec);
  const Complex& a = spec.require_a();
  const Complex fm = pochhammer_vec(spec.f, spec.m);
  if (is_zero(fm)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");
  for (int k = 0; k <= spec.total_m(); ++k) {
    const Complex coeff = sign_power(k) * coeff_D(k, spec.f, spec.m, spec.b) * pochhammer(spec.b, k) / fm;
    t.rhs.add(main_term(coeff, Complex(0), ArgMap::identity, hyp({a, spec.b + k}, {spec.c})));
  }
  note_root_warnings(t);
  return t;
}

Transformation apply_degenerate_single(const Complex& a, const Complex& b, const ParamVector& f,
                                       const IntVector& m, SingleVariant variant) {
  check_ipd_shape(f, m);
  Transformation t;
  t.lhs = ipd_function(IpdSpec{a, b, b + 1, f, m});
  const Complex fm = pochhammer_vec(f, m);
  if (is_zero(fm)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");
  t.rhs.add(single_main_term(a, b, pochhammer_vec(f.shifted(-b), m) / fm, variant));
  add_algebraic_terms(t.rhs, a, y_list(b, f, m));
  return t;
}

Transformation apply_degenerate_p(const Complex& a, const Complex& b, int p, const ParamVector& f,
                                  const IntVector& m, DegenerateVariant variant) {
  check_ipd_shape(f, m);
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "apply_degenerate_p needs p >= 1");
  Transformation t;
  t.lhs = ipd_function(IpdSpec{a, b, b + p, f, m});
  const Complex fm = pochhammer_vec(f, m);
  if (is_zero(fm)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");

  if (variant == DegenerateVariant::eq29) {
    const CPoly poly = build_T(b, p, f, m, TVariant::T);
    const RootSet lambda = find_roots(poly);
    const ParamVector neg = lambda.roots.negated();
    t.rhs.add(main_term(poly.coeff(0) / (gamma(b) * fm), -a, ArgMap::mobius,
                        root_shifted({a, Complex(1)}, neg, {b + p})));
  } else {
    const CPoly poly = build_T(b, p, f, m, TVariant::Tstar, a);
    const RootSet lambda = find_roots(poly);
    const ParamVector neg = lambda.roots.negated();
    t.rhs.add(main_term(gamma(b - a + 1) * poly.coeff(0) / (gamma(b) * fm), 1 - a, ArgMap::identity,
                        root_shifted({Complex(1), b + 1 - a}, neg, {b + p})));
  }

  std::vector<Complex> weights(static_cast<std::size_t>(m.total()), Complex(0));
  const Complex bp = pochhammer(b, p);
  for (int q = 1; q <= p; ++q) {
    const Complex beta = b + q - 1;
    const Complex w = sign_power(q - 1) * bp / (beta * factorial(q - 1) * factorial(p - q));
    const auto y = y_list(beta, f, m);
    for (std::size_t l = 0; l < y.size(); ++l) weights[l] += w * y[l];
  }
  add_algebraic_terms(t.rhs, a, weights);
  note_root_warnings(t);
  return t;
}

Transformation apply_degenerate_vector(const Complex& a, const ParamVector& b, const IntVector& p,
                                       const ParamVector& f, const IntVector& m, VectorVariant variant) {
  check_ipd_shape(f, m);
  if (b.size() != p.size() || b.empty()) {
    throw Error(ErrorKind::LengthMismatch, "b and p vectors must be non-empty and of equal length");
  }
  ParamVector beta;
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (int i = 0; i < p[j]; ++i) beta.push_back(b[j] + i);
  }
  const Real tol = Precision::tolerance(4);
  for (std::size_t u = 0; u < beta.size(); ++u) {
    for (std::size_t v = u + 1; v < beta.size(); ++v) {
      if (abs(beta[u] - beta[v]) <= tol * (1 + abs(beta[u]))) {
        throw Error(ErrorKind::DistinctnessViolation,
                    "beta components " + std::to_string(u) + " and " + std::to_string(v) + " coincide");
      }
    }
  }

  Transformation t;
  t.lhs.num = ParamVector{a};
  t.lhs.num.append(b);
  t.lhs.num.append(f.plus(m));
  t.lhs.den = b.plus(p);
  t.lhs.den.append(f);

  const Complex fm = pochhammer_vec(f, m);
  if (is_zero(fm)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");
  const Complex bp = pochhammer_vec(b, p);
  const SingleVariant single = variant == VectorVariant::eq27 ? SingleVariant::eq19 : SingleVariant::eq20;
  std::vector<Complex> weights(static_cast<std::size_t>(m.total()), Complex(0));
  for (std::size_t q = 0; q < beta.size(); ++q) {
    Complex bq(1);
    for (std::size_t v = 0; v < beta.size(); ++v) {
      if (v != q) bq *= beta[v] - beta[q];
    }
    const Complex w = bp / (beta[q] * bq);
    t.rhs.add(single_main_term(a, beta[q], w * pochhammer_vec(f.shifted(-beta[q]), m) / fm, single));
    const auto y = y_list(beta[q], f, m);
    for (std::size_t l = 0; l < y.size(); ++l) weights[l] += w * y[l];
  }
  add_algebraic_terms(t.rhs, a, weights);
  return t;
}

Transformation apply_two_free(const Complex& a, const Complex& d, const Complex& e, const Complex& b,
                              const ParamVector& f, const IntVector& m, TwoFreeVariant variant) {
  check_ipd_shape(f, m);
  if (is_zero(b)) throw Error(ErrorKind::TrivialSplit, "b = 0 leaves only the 3F2 term");
  const int total = m.total();
  Transformation t;
  t.lhs.num = ParamVector{a, d, b};
  t.lhs.num.append(f.plus(m));
  t.lhs.den = ParamVector{e, b + 1};
  t.lhs.den.append(f);

  const Complex fm = pochhammer_vec(f, m);
  if (is_zero(fm)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");
  const Complex fbm = pochhammer_vec(f.shifted(-b), m);
  t.rhs.add(main_term(fbm / fm, Complex(0), ArgMap::identity, hyp({a, d, b}, {e, b + 1})));

  const Complex split = (fm - fbm) / fm;
  const Complex ed = e - d - total + 1;
  if (variant == TwoFreeVariant::first) {
    const RootSet lambda = find_roots(build_L(a, d, e, b, f, m, LVariant::L));
    t.rhs.add(main_term(split, -a, ArgMap::mobius, root_shifted({a, ed}, lambda.roots, {e})));
  } else {
    for (int j = 0; j < total - 1; ++j) {
      if (near_zero(1 + a + d - e + j, Real(1), 4)) {
        throw Error(ErrorKind::DegenerateCase, "(1+a+d-e)_{m-1} vanishes");
      }
    }
    const RootSet lambda = find_roots(build_L(a, d, e, b, f, m, LVariant::Lhat));
    t.rhs.add(main_term(split, e - a - d - total + 1, ArgMap::identity,
                        root_shifted({e - a - total + 1, ed}, lambda.roots, {e})));
  }
  note_root_warnings(t);
  return t;
}

namespace {

bool near_integer(const Complex& z) {
  const Real tol = Precision::tolerance(4);
  return abs(z.im) <= tol && abs(z.re - boost::multiprecision::round(z.re)) <= tol * (1 + abs(z.re));
}

}  // namespace

Complex meijer_norlund_ipd(const Real& t, const Complex& b, const Complex& c, const ParamVector& f,
                           const IntVector& m, MeijerRoute route) {
  check_ipd_shape(f, m);
  if (!(t > 0 && t < 1)) throw Error(ErrorKind::InvalidArgument, "t must lie in (0, 1)");
  const Complex tc(t);
  const Complex t_pow_b = exp(b * log(tc));
  if (route == MeijerRoute::closed) {
    const int total = m.total();
    const Complex ratio = tc / (tc - 1);
    Complex sum(0);
    for (int k = 0; k <= total; ++k) {
      sum += coeff_D(k, f, m, b) * pochhammer(c - b - k, k) * pow(ratio, k);
    }
    return t_pow_b * exp((c - b - 1) * log(Complex(1) - tc)) * reciprocal_gamma(c - b) * sum;
  }

  for (std::size_t i = 0; i < f.size(); ++i) {
    if (near_integer(f[i] - c)) {
      throw Error(ErrorKind::IntegerDifference, "f_" + std::to_string(i + 1) + " - c is an integer");
    }
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (near_integer(f[i] - f[j])) {
        throw Error(ErrorKind::IntegerDifference,
                    "f_" + std::to_string(i + 1) + " - f_" + std::to_string(j + 1) + " is an integer");
      }
    }
  }
  HypFunction fun;
  fun.num.push_back(1 - c + b);
  for (const auto& fi : f) fun.num.push_back(1 - fi + b);
  for (std::size_t i = 0; i < f.size(); ++i) fun.den.push_back(1 - f[i] - m[i] + b);
  return t_pow_b * pochhammer_vec(f.shifted(-b), m) * reciprocal_gamma(c - b) * eval_pfq(fun, tc).value;
}

namespace closed_form {

Complex minton(int k, const Complex& b, const ParamVector& f, const IntVector& m) {
  if (k < m.total()) throw Error(ErrorKind::InvalidArgument, "Minton's formula needs k >= m");
  return factorial(k) / pochhammer(b + 1, k) * pochhammer_vec(f.shifted(-b), m) / pochhammer_vec(f, m);
}

Complex karlsson(const Complex& a, const Complex& b, const ParamVector& f, const IntVector& m) {
  if ((1 - a - m.total()).re <= 0) throw Error(ErrorKind::InvalidArgument, "Karlsson's formula needs Re(1-a-m) > 0");
  return gamma(b + 1) * gamma(1 - a) / gamma(b + 1 - a) * pochhammer_vec(f.shifted(-b), m) /
         pochhammer_vec(f, m);
}

Complex lemma3_sum(int i, int k, int m, const Complex& alpha) {
  Complex sum(0);
  for (int j = i; j <= k; ++j) {
    sum += pochhammer(Complex(-k), j) * pochhammer(alpha - m + j, m - i) * pochhammer(Complex(-j), i) /
           factorial(j);
  }
  return sum;
}

Complex lemma3_closed(int i, int k, int m, const Complex& alpha) {
  return sign_power(i) * pochhammer(Complex(-k), i) * pochhammer(Complex(-m), k) * pochhammer(alpha - m, m) /
         (pochhammer(Complex(-m), i) * pochhammer(alpha - m, k));
}

Complex lemma4_sum(int k, const Complex& b, const ParamVector& f, const IntVector& m) {
  const int total = m.total();
  Complex sum(0);
  for (int i = 0; i <= k; ++i) {
    ParamVector num{Complex(-i)};
    num.append(f.plus(m));
    sum += pochhammer(Complex(-k), i) * pochhammer(b, i) / (pochhammer(Complex(-total), i) * factorial(i)) *
           terminating_sum(num, f);
  }
  return sum;
}

Complex lemma4_closed(int k, const Complex& b, const ParamVector& f, const IntVector& m) {
  const int total = m.total();
  ParamVector num{Complex(-k), b};
  num.append(f.plus(m));
  ParamVector den{b + total - k + 1};
  den.append(f);
  return pochhammer(-b - total, k) / pochhammer(Complex(-total), k) * terminating_sum(num, den);
}

Complex cor3_lambda_star(const Complex& a, const Complex& b, const ParamVector& f, const IntVector& m) {
  require_same_length(f, m);
  Complex upper(1);
  Complex lower(1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    upper *= f[i] - b - 1 + m[i];
    lower *= f[i] - b - 1;
  }
  const Complex ba = b - a + 1;
  return ba * ((b + 1) * upper - b * lower) / (ba * upper - b * lower);
}

Complex cor4_lambda(const Complex& b, const Complex& d, const Complex& e, const Complex& f) {
  const Complex s = 2 * f - b + 1;
  return s * (e - d - 1) / (s - d);
}

Complex cor4_lambda_star(const Complex& a, const Complex& b, const Complex& d, const Complex& e,
                         const Complex& f) {
  const Complex s = 2 * f - b + 1;
  return s * (e - a - 1) * (e - d - 1) / (a * d + s * (e - a - d - 1));
}

Complex cor5_lambda(const Complex& b, const Complex& d, const Complex& e, const Complex& f1,
                    const Complex& f2) {
  const Complex s = f1 + f2 - b;
  return s * (e - d - 1) / (s - d);
}

Complex cor5_lambda_star(const Complex& a, const Complex& b, const Complex& d, const Complex& e,
                         const Complex& f1, const Complex& f2) {
  const Complex s = f1 + f2 - b;
  return s * (e - a - 1) * (e - d - 1) / (a * d + s * (e - a - d - 1));
}

}  // namespace closed_form

}  // namespace ipd
