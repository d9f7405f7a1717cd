#include "ipdhyp/charpoly.hpp"

namespace ipd {

namespace {

bool pochhammer_vanishes(const Complex& z, int n) {
  const Real tol = Precision::tolerance(4);
  for (int j = 0; j < n; ++j) {
    if (abs(z + j) <= tol * std::max(Real(1), abs(z))) return true;
  }
  return false;
}

void require_nondegenerate(const Complex& z, int n, const char* what) {
  if (pochhammer_vanishes(z, n)) {
    throw Error(ErrorKind::DegenerateCase, std::string(what) + " vanishes; use the degenerate transformations");
  }
}

Complex sign_power(int k) { return k % 2 == 0 ? Complex(1) : Complex(-1); }

// Irrational-looking complex offset keeps the eq7 sample points away from the
// poles of its rational form.
const Complex& eq7_offset() {
  static const Complex offset = Complex::from_strings("0.2371", "0.4137");
  return offset;
}

Complex q_eq7_value(const Complex& t, const Complex& b, const Complex& c, const ParamVector& f,
                    const IntVector& m) {
  const int total = m.total();
  Complex sum(0);
  for (int k = 0; k <= total; ++k) {
    ParamVector num{Complex(-k)};
    num.append(f.plus(m));
    const Complex series = terminating_sum(num, f);
    sum += series * pochhammer(t, k) * pochhammer(b, k) / (pochhammer(1 + t + b - c, k) * factorial(k));
  }
  return pochhammer(c - b - t - total, total) / pochhammer(c - b - total, total) * sum;
}

}  // namespace

CPoly build_Q(const Complex& b, const Complex& c, const ParamVector& f, const IntVector& m, QRoute route) {
  require_same_length(f, m);
  const int total = m.total();
  const Complex base = c - b - total;
  require_nondegenerate(base, total, "(c-b-m)_m");

  if (route == QRoute::eq7) {
    std::vector<Complex> nodes;
    std::vector<Complex> values;
    for (int j = 0; j <= total; ++j) {
      nodes.push_back(eq7_offset() + j);
      values.push_back(q_eq7_value(nodes.back(), b, c, f, m));
    }
    return interpolate(nodes, values);
  }

  CPoly sum;
  for (int k = 0; k <= total; ++k) {
    const Complex weight = pochhammer(b, k) * coeff_C(k, f, m, Route::stirling);
    sum += rising_poly(Complex(0), k) * rising_poly(base, total - k, -1) * weight;
  }
  return sum * (Complex(1) / pochhammer(base, total));
}

CPoly build_P(const Complex& b, const Complex& c, const ParamVector& f, const IntVector& m) {
  require_same_length(f, m);
  const int total = m.total();
  const Complex base = c - b - total;
  require_nondegenerate(base, total, "(c-b-m)_m");
  CPoly sum;
  for (int k = 0; k <= total; ++k) {
    const Complex weight = pochhammer(b, k) * pochhammer(1 - c + b, k) * coeff_D(k, f, m, b);
    sum += rising_poly(base, total - k, -1) * weight;
  }
  return sum * (Complex(1) / pochhammer(base, total));
}

CPoly build_Qhat(const Complex& a, const Complex& b, const Complex& c, const ParamVector& f,
                 const IntVector& m) {
  require_same_length(f, m);
  const int total = m.total();
  const Complex ca = c - a - total;
  const Complex cb = c - b - total;
  require_nondegenerate(ca, total, "(c-a-m)_m");
  require_nondegenerate(cb, total, "(c-b-m)_m");
  const Complex cab = c - a - b - total;

  CPoly sum;
  for (int k = 0; k <= total; ++k) {
    const Complex outer = sign_power(k) * coeff_C(k, f, m) * pochhammer(a, k) * pochhammer(b, k) /
                          (pochhammer(ca, k) * pochhammer(cb, k));
    for (int n = 0; n <= total - k; ++n) {
      const Complex inner = pochhammer(Complex(k - total), n) * pochhammer(cab, n) /
                            (pochhammer(ca + k, n) * pochhammer(cb + k, n) * factorial(n));
      sum += rising_poly(Complex(0), k + n) * (outer * inner);
    }
  }
  return sum;
}

CPoly build_Phat(const Complex& a, const Complex& b, const Complex& c, const ParamVector& f,
                 const IntVector& m) {
  require_same_length(f, m);
  const int total = m.total();
  const Complex ca = c - a - total;
  const Complex cb = c - b - total;
  require_nondegenerate(ca, total, "(c-a-m)_m");
  require_nondegenerate(cb, total, "(c-b-m)_m");

  CPoly sum;
  for (int k = 0; k <= total; ++k) {
    ParamVector num{Complex(-k), b};
    num.append(f.plus(m));
    ParamVector den{b + total - k + 1};
    den.append(f);
    const Complex weight = sign_power(k) * pochhammer(a, k) * pochhammer(-b - total, k) /
                           (pochhammer(ca, total) * pochhammer(cb, k) * factorial(k)) *
                           terminating_sum(num, den);
    sum += rising_poly(Complex(0), k) * rising_poly(ca, total - k, -1) * weight;
  }
  return sum;
}

CPoly build_T(const Complex& b, int p, const ParamVector& f, const IntVector& m, TVariant variant,
              const Complex& a) {
  require_same_length(f, m);
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "build_T needs p >= 1");
  CPoly sum;
  for (int q = 1; q <= p; ++q) {
    Complex weight = sign_power(q - 1) * pochhammer_vec(f.shifted(-b - q + 1), m) * gamma(b + q - 1) /
                     (factorial(q - 1) * factorial(p - q));
    CPoly term = rising_poly(b + q, p - q);
    if (variant == TVariant::Tstar) {
      const Complex g = b + q - a;
      if (is_nonpositive_integer(g)) throw Error(ErrorKind::GammaPole, "Gamma(b+q-a) at " + to_string(g, 10));
      weight /= gamma(g);
      term = term * rising_poly(b + 1 - a, q - 1);
    }
    sum += term * weight;
  }
  if (sum.is_zero()) throw Error(ErrorKind::DegenerateCase, "T polynomial vanishes identically");
  return sum;
}

CPoly build_L(const Complex& a, const Complex& d, const Complex& e, const Complex& b,
              const ParamVector& f, const IntVector& m, LVariant variant) {
  require_same_length(f, m);
  const int total = m.total();
  if (total < 1) throw Error(ErrorKind::InvalidArgument, "build_L needs m >= 1");
  if (is_zero(b)) throw Error(ErrorKind::TrivialSplit, "b = 0 makes W, and hence L, vanish");
  const Complex ed = e - d - total + 1;
  require_nondegenerate(ed, total - 1, "(e-d-m+1)_{m-1}");

  std::vector<Complex> y;
  for (int k = 0; k < total; ++k) y.push_back(coeff_Y(k, b, f, m));

  CPoly sum;
  if (variant == LVariant::L) {
    for (int k = 0; k < total; ++k) {
      sum += rising_poly(Complex(0), k) * rising_poly(ed, total - 1 - k, -1) *
             (pochhammer(d, k) * y[static_cast<std::size_t>(k)]);
    }
    return sum;
  }

  const Complex ea = e - a - total + 1;
  require_nondegenerate(ea, total - 1, "(e-a-m+1)_{m-1}");
  const Complex ead = e - a - d - total + 1;
  for (int k = 0; k < total; ++k) {
    const Complex outer = sign_power(k) * y[static_cast<std::size_t>(k)] * pochhammer(a, k) *
                          pochhammer(d, k) / (pochhammer(ea, k) * pochhammer(ed, k));
    for (int n = 0; n <= total - 1 - k; ++n) {
      const Complex inner = pochhammer(Complex(k + 1 - total), n) * pochhammer(ead, n) /
                            (pochhammer(ea + k, n) * pochhammer(ed + k, n) * factorial(n));
      sum += rising_poly(Complex(0), k + n) * (outer * inner);
    }
  }
  return sum;
}

}  // namespace ipd
