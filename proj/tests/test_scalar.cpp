#include <functional>

#include "support.hpp"

using namespace ipd;
using ipdtest::C;

namespace {

// Count set partitions of {0..n-1} into exactly k non-empty blocks by brute force.
long partitions(int n, int k) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  long count = 0;
  std::function<void(int, int)> place = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      place(i + 1, std::max(used, b + 1));
    }
  };
  place(0, 0);
  return count;
}

Complex sin_pi(const Complex& z) {
  const Complex iz = Complex(Real(0), pi()) * z;
  return (exp(iz) - exp(-iz)) / Complex(Real(0), Real(2));
}

}  // namespace

TEST_CASE("precision context") {
  CHECK(Precision::digits() == 40);
  CHECK(Precision::working_digits() == 48);
  CHECK_THROWS_AS(Precision::set_digits(15), Error);
  {
    ScopedPrecision scoped(60);
    CHECK(Precision::digits() == 60);
    CHECK(Real(1).precision() >= 60);
  }
  CHECK(Precision::digits() == 40);
  CHECK(Precision::tolerance(12) == pow10(-28));
}

TEST_CASE("complex parsing and formatting") {
  CHECK(C("0.3-0.25i") == Complex::from_strings("0.3", "-0.25"));
  CHECK(C("i") == Complex(Real(0), Real(1)));
  CHECK(C("-2i") == Complex(Real(0), Real(-2)));
  CHECK(C("1e-3+2e2i") == Complex::from_strings("0.001", "200"));
  CHECK(C("1.5") == Complex::from_strings("1.5"));
  CHECK_THROWS_AS(C("abc"), Error);
  CHECK_THROWS_AS(C("1+2"), Error);
  CHECK_THROWS_AS(parse_real("0x10"), Error);
  const Complex z = C("0.123456789-7.5i");
  CHECK(C(to_string(z).c_str()) == z);
}

TEST_CASE("complex arithmetic") {
  const Complex a = C("1.5+2i");
  const Complex b = C("-0.5+0.25i");
  CHECK_CLOSE((a / b) * b, a);
  CHECK_CLOSE(a * b, C("-1.25-0.625i"));
  CHECK_CLOSE(exp(log(a)), a);
  CHECK_CLOSE(pow(a, 3), a * a * a);
  CHECK_CLOSE(pow(C("4"), C("0.5")), C("2"));
  CHECK_THROWS_AS(a / Complex(0), Error);
  try {
    (void)(a / Complex(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK(is_nonpositive_integer(C("-3")));
  CHECK_FALSE(is_nonpositive_integer(C("-3+1e-30i")));
  CHECK_FALSE(is_nonpositive_integer(C("2")));
  CHECK(distance_to_nonpositive_integers(C("-2.25")) == Real("0.25"));
  CHECK(distance_to_nonpositive_integers(C("3")) == Real(3));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(C("0.7-2i"), 0) == Complex(1));
  CHECK(pochhammer(C("2"), 3) == Complex(24));
  CHECK_CLOSE(pochhammer(C("0.5"), 2), C("0.75"));
  CHECK_CLOSE(pochhammer(C("-3"), 5), Complex(0));
  CHECK_CLOSE(falling(C("5"), 3), C("60"));
  const std::vector<int> zero_count{0};
  CHECK(pochhammer_vec(ParamVector{C("0.3+i")}, std::span<const int>(zero_count)) == Complex(1));
  CHECK_CLOSE(pochhammer_vec(ParamVector{C("1"), C("2")}, IntVector{1, 1}), C("2"));
  CHECK(pochhammer_vec(ParamVector{C("0"), C("3")}, IntVector{2, 1}) == Complex(0));
  CHECK_THROWS_AS(pochhammer_vec(ParamVector{C("1")}, IntVector{1, 1}), Error);
  CHECK(factorial(6) == Real(720));
  CHECK(binomial(7, 3) == Real(35));
}

TEST_CASE("log gamma and gamma") {
  CHECK_CLOSE(log_gamma(C("1")), Complex(0));
  CHECK_CLOSE(log_gamma(C("5")), log(C("24")));
  CHECK_CLOSE(log_gamma(C("0.5")), Complex(log(pi()) / 2));
  // mpmath 1.3 at 50 digits.
  CHECK_CLOSE(gamma(C("0.3+2i")), C("0.057465337569588035291083021679324386228932456965837-"
                                      "0.07498491258264613768098849738609505676204792257735i"));
  CHECK_CLOSE(exp(log_gamma(C("-2.5+0.5i"))), gamma(C("-2.5+0.5i")));

  for (const char* s : {"0.3+0.4i", "-1.7+0.2i", "2.25-3i", "0.01"}) {
    const Complex z = C(s);
    CHECK_CLOSE(gamma(z + 1), z * gamma(z));
    CHECK_CLOSE(gamma(z) * gamma(1 - z) * sin_pi(z), Complex(pi()));
    // Legendre duplication.
    CHECK_CLOSE(gamma(z) * gamma(z + C("0.5")),
                pow(C("2"), 1 - 2 * z) * Complex(sqrt(pi())) * gamma(2 * z));
  }
  CHECK(reciprocal_gamma(C("-4")) == Complex(0));
  CHECK_THROWS_AS(gamma(C("-2")), Error);
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1);
  for (int j = 1; j <= 8; ++j) CHECK(stirling2(j, 1) == 1);
  CHECK(stirling2(4, 2) == 7);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(stirling2(n, k) == partitions(n, k));
  }
  CHECK(stirling2(3, 5) == 0);
  CHECK(stirling2_real(10, 4) == Real(34105));
}

TEST_CASE("generating-function coefficients") {
  const Complex f1 = C("1.25-0.5i");
  auto s1 = genfunc_coeffs(ParamVector{f1}, IntVector{1}, Complex(0), 1);
  REQUIRE(s1.size() == 2);
  CHECK_CLOSE(s1[0], f1);
  CHECK_CLOSE(s1[1], Complex(1));

  auto s2 = genfunc_coeffs(ParamVector{f1}, IntVector{2}, Complex(0), 1);
  REQUIRE(s2.size() == 3);
  CHECK_CLOSE(s2[0], f1 * (f1 + 1));
  CHECK_CLOSE(s2[1], 2 * f1 + 1);
  CHECK_CLOSE(s2[2], Complex(1));

  const ParamVector f{C("0.3+i"), C("-1.2")};
  const IntVector m{2, 1};
  const auto sigma = genfunc_coeffs(f, m, Complex(0), 1);
  const auto alpha = genfunc_coeffs(f, m, Complex(0), -1);
  REQUIRE(sigma.size() == alpha.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    CHECK_CLOSE(alpha[j], (j % 2 == 0 ? sigma[j] : -sigma[j]));
  }

  const Complex b = C("0.4-0.1i");
  const Complex t = C("0.77+0.3i");
  const auto shifted = genfunc_coeffs(f, m, -b, -1);
  Complex value(0);
  for (std::size_t j = shifted.size(); j-- > 0;) value = value * t + shifted[j];
  CHECK_CLOSE(value, pochhammer_vec(f.shifted(-b - t), m));
}
