#include "ipdhyp/coefficients.hpp"

#include <functional>

namespace ipd {

void IpdSpec::validate() const {
  require_same_length(f, m);
  if (m.empty()) throw Error(ErrorKind::InvalidArgument, "IpdSpec needs at least one (f_i, m_i) pair");
}

const Complex& IpdSpec::require_a() const {
  if (!a) throw Error(ErrorKind::InvalidArgument, "this operation needs the parameter a");
  return *a;
}

void NorlundArgs::validate() const {
  if (b.size() != a.size() + 1) {
    throw Error(ErrorKind::LengthMismatch, "Norlund arguments need len(b) = len(a) + 1, got " +
                                               std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()));
  }
}

Complex terminating_sum(const ParamVector& num, const ParamVector& den) {
  long last = -1;
  for (const auto& a : num) {
    if (!is_nonpositive_integer(a)) continue;
    const long n = (-a.re).convert_to<long>();
    if (last < 0 || n < last) last = n;
  }
  if (last < 0) throw Error(ErrorKind::InvalidArgument, "series does not terminate");
  Complex sum(0);
  Complex term(1);
  for (long n = 0; n <= last; ++n) {
    sum += term;
    if (n == last) break;
    Complex numer(1);
    Complex denom(n + 1);
    for (const auto& a : num) numer *= a + n;
    for (const auto& b : den) denom *= b + n;
    if (is_zero(denom)) {
      throw Error(ErrorKind::ZeroDenominator, "bottom parameter reached before the series terminates");
    }
    term *= numer / denom;
  }
  return sum;
}

namespace {

Complex checked_fm(const ParamVector& f, const IntVector& m) {
  require_same_length(f, m);
  const Complex fm = pochhammer_vec(f, m);
  if (near_zero(fm, Real(1), -8)) throw Error(ErrorKind::ZeroDenominator, "(f)_m vanishes");
  return fm;
}

void check_index(int k, int upper, const char* what) {
  if (k < 0 || k > upper) {
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(k) +
                                                " outside 0.." + std::to_string(upper));
  }
}

Complex sign_power(int k) { return k % 2 == 0 ? Complex(1) : Complex(-1); }

ParamVector concat(std::initializer_list<Complex> head, const ParamVector& tail) {
  ParamVector out(head);
  out.append(tail);
  return out;
}

Complex product_at(const ParamVector& f, const IntVector& m, const Complex& shift) {
  Complex r(1);
  for (std::size_t i = 0; i < f.size(); ++i) r *= pochhammer(f[i] + shift, m[i]);
  return r;
}

Complex stirling_contract(const std::vector<Complex>& coeffs, int k) {
  Complex sum(0);
  for (int j = k; j < static_cast<int>(coeffs.size()); ++j) {
    sum += coeffs[static_cast<std::size_t>(j)] * stirling2_real(j, k);
  }
  return sum;
}

}  // namespace

Complex coeff_C(int k, const ParamVector& f, const IntVector& m, Route route) {
  const Complex fm = checked_fm(f, m);
  check_index(k, m.total(), "C");
  switch (route) {
    case Route::stirling:
      return stirling_contract(genfunc_coeffs(f, m, Complex(0), 1), k) / fm;
    case Route::hypergeometric:
      return sign_power(k) / factorial(k) * terminating_sum(concat({Complex(-k)}, f.plus(m)), f);
    default:
      throw Error(ErrorKind::InvalidArgument, "coeff_C supports the stirling and hypergeometric routes");
  }
}

Complex coeff_D(int k, const ParamVector& f, const IntVector& m, const Complex& b, Route route) {
  require_same_length(f, m);
  check_index(k, m.total(), "D");
  switch (route) {
    case Route::stirling:
      return stirling_contract(genfunc_coeffs(f, m, -b, -1), k);
    case Route::hypergeometric: {
      const ParamVector g = f.negated().shifted(b + 1);
      ParamVector bottom;
      for (std::size_t i = 0; i < g.size(); ++i) bottom.push_back(g[i] - m[i]);
      try {
        return sign_power(k) * product_at(f, m, -b) / factorial(k) *
               terminating_sum(concat({Complex(-k)}, g), bottom);
      } catch (const Error& e) {
        // (f-b)_m vanishes together with the bottom parameter; the polynomial
        // route has no such singularity.
        if (e.kind() != ErrorKind::ZeroDenominator) throw;
        return coeff_D(k, f, m, b, Route::stirling);
      }
    }
    case Route::finite_difference: {
      Complex sum(0);
      for (int j = 0; j <= k; ++j) {
        const Complex value = product_at(f, m, -b - j);
        sum += sign_power(k - j) * binomial(k, j) * value;
      }
      return sum / factorial(k);
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "coeff_D supports stirling, hypergeometric and finite_difference");
  }
}

CPoly w_poly(const Complex& b, const ParamVector& f, const IntVector& m) {
  const Complex fm = checked_fm(f, m);
  const int total = m.total();
  if (total < 1) throw Error(ErrorKind::InvalidArgument, "w_poly needs m >= 1");
  if (is_zero(b)) return CPoly();
  std::vector<Complex> numer = genfunc_coeffs(f, m, Complex(0), 1);
  numer[0] -= product_at(f, m, -b);
  // Synthetic division by (n + b); the remainder vanishes identically.
  std::vector<Complex> quotient(static_cast<std::size_t>(total));
  Complex carry = numer[static_cast<std::size_t>(total)];
  for (int i = total - 1; i >= 0; --i) {
    quotient[static_cast<std::size_t>(i)] = carry;
    carry = numer[static_cast<std::size_t>(i)] - b * carry;
  }
  const Complex scale = b / fm;
  for (auto& q : quotient) q *= scale;
  return CPoly(std::move(quotient));
}

Complex coeff_Y(int l, const Complex& b, const ParamVector& f, const IntVector& m, Route route) {
  const Complex fm = checked_fm(f, m);
  const int total = m.total();
  check_index(l, total - 1, "Y");
  switch (route) {
    case Route::stirling: {
      const CPoly w = w_poly(b, f, m);
      return stirling_contract(w.coeffs(), l);
    }
    case Route::hypergeometric: {
      const Complex series =
          terminating_sum(concat({Complex(-l), b}, f.plus(m)), concat({b + 1}, f));
      return sign_power(l) / factorial(l) * series -
             sign_power(l) * product_at(f, m, -b) / (pochhammer(b + 1, l) * fm);
    }
    case Route::norlund: {
      NorlundArgs args;
      args.a = f.negated();
      for (std::size_t i = 0; i < f.size(); ++i) args.b.push_back(-f[i] - m[i]);
      args.b.push_back(Complex(l));
      Complex sum(0);
      for (int i = 0; i <= total - l - 1; ++i) {
        sum += sign_power(i) * norlund_g(total - 1 - l - i, args) * pochhammer(Complex(1) - b, i);
      }
      return sign_power(total - l - 1) * b / fm * sum;
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "coeff_Y supports stirling, hypergeometric and norlund");
  }
}

namespace {

std::vector<Complex> norlund_recurrence(int n, const NorlundArgs& args) {
  std::vector<Complex> g(static_cast<std::size_t>(n) + 1, Complex(0));
  g[0] = Complex(1);
  Complex nu = args.b[0];
  for (std::size_t level = 1; level < args.p(); ++level) {
    const Complex& alpha = args.a[level - 1];
    const Complex& beta = args.b[level];
    std::vector<Complex> next(g.size(), Complex(0));
    for (int k = 0; k <= n; ++k) {
      Complex sum(0);
      for (int s = 0; s <= k; ++s) {
        const int d = k - s;
        sum += pochhammer(beta - alpha, d) / factorial(d) * pochhammer(nu - alpha + s, d) *
               g[static_cast<std::size_t>(s)];
      }
      next[static_cast<std::size_t>(k)] = sum;
    }
    g = std::move(next);
    nu += beta - alpha;
  }
  return g;
}

Complex norlund_explicit(int n, const NorlundArgs& args) {
  const std::size_t p = args.p();
  if (p == 1) return n == 0 ? Complex(1) : Complex(0);
  std::vector<Complex> psi(p);
  for (std::size_t mm = 1; mm < p; ++mm) psi[mm] = psi[mm - 1] + args.b[mm - 1] - args.a[mm - 1];

  // factor(mm, from, to) for the link j_{mm-1} = from -> j_mm = to.
  auto factor = [&](std::size_t mm, int from, int to) {
    const int d = to - from;
    return pochhammer(psi[mm] + from, d) / factorial(d) * pochhammer(args.b[mm] - args.a[mm - 1], d);
  };
  std::function<Complex(std::size_t, int)> chain = [&](std::size_t mm, int from) -> Complex {
    if (mm == p - 1) return factor(mm, from, n);
    Complex sum(0);
    for (int j = from; j <= n; ++j) sum += factor(mm, from, j) * chain(mm + 1, j);
    return sum;
  };
  return chain(1, 0);
}

Complex norlund_closed(int n, const NorlundArgs& args) {
  const auto& a = args.a;
  const auto& b = args.b;
  switch (args.p()) {
    case 2:
      return pochhammer(b[0] - a[0], n) * pochhammer(b[1] - a[0], n) / factorial(n);
    case 3: {
      const Complex nu = b[0] + b[1] + b[2] - a[0] - a[1];
      return pochhammer(nu - b[1], n) * pochhammer(nu - b[2], n) / factorial(n) *
             terminating_sum({Complex(-n), b[0] - a[0], b[0] - a[1]}, {nu - b[1], nu - b[2]});
    }
    case 4: {
      const Complex nu4 = b[0] + b[1] + b[2] + b[3] - a[0] - a[1] - a[2];
      const Complex nu2 = b[0] + b[1] - a[0];
      Complex sum(0);
      for (int k = 0; k <= n; ++k) {
        const Complex outer = pochhammer(Complex(-n), k) * pochhammer(nu2 - a[1], k) *
                              pochhammer(nu2 - a[2], k) /
                              (pochhammer(nu4 - b[2], k) * pochhammer(nu4 - b[3], k) * factorial(k));
        sum += outer * terminating_sum({Complex(-k), b[0] - a[0], b[1] - a[0]}, {nu2 - a[1], nu2 - a[2]});
      }
      return pochhammer(nu4 - b[2], n) * pochhammer(nu4 - b[3], n) / factorial(n) * sum;
    }
    default:
      throw Error(ErrorKind::UnsupportedP,
                  "closed-form Norlund coefficients exist for p = 2, 3, 4 only (p = " +
                      std::to_string(args.p()) + ")");
  }
}

}  // namespace

Complex norlund_g(int n, const NorlundArgs& args, NorlundRoute route) {
  args.validate();
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "Norlund index must be non-negative");
  switch (route) {
    case NorlundRoute::recurrence:
      return norlund_recurrence(n, args)[static_cast<std::size_t>(n)];
    case NorlundRoute::explicit_sum:
      return norlund_explicit(n, args);
    case NorlundRoute::closed_form:
      return norlund_closed(n, args);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown Norlund route");
}

}  // namespace ipd
