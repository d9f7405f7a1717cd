#include <functional>

#include "ipdhyp/coefficients.hpp"
#include "support.hpp"

using namespace ipd;
using ipdtest::C;

namespace {

// Delta^k g(0) / k! with unit step.
Complex forward_difference(const std::function<Complex(int)>& g, int k) {
  Complex sum(0);
  for (int j = 0; j <= k; ++j) sum += ((k - j) % 2 == 0 ? Complex(1) : Complex(-1)) * binomial(k, j) * g(j);
  return sum / factorial(k);
}

ParamVector kF() { return ParamVector{C("0.7+0.3i"), C("-1.35"), C("2.1-0.8i")}; }
IntVector kM() { return IntVector{2, 1, 1}; }

}  // namespace

TEST_CASE("C coefficients") {
  const Complex f1 = C("1.8-0.6i");
  CHECK_CLOSE(coeff_C(0, kF(), kM()), Complex(1));
  CHECK_CLOSE(coeff_C(kM().total(), kF(), kM()), Complex(1) / pochhammer_vec(kF(), kM()));
  CHECK_CLOSE(coeff_C(1, ParamVector{f1}, IntVector{1}), Complex(1) / f1);
  for (int k = 0; k <= kM().total(); ++k) {
    CHECK_CLOSE(coeff_C(k, kF(), kM(), Route::stirling), coeff_C(k, kF(), kM(), Route::hypergeometric));
  }
  CHECK_THROWS_AS(coeff_C(5, kF(), kM()), Error);
  CHECK_THROWS_AS(coeff_C(-1, kF(), kM()), Error);
  CHECK_THROWS_AS(coeff_C(0, ParamVector{C("-1")}, IntVector{2}), Error);
}

TEST_CASE("D coefficients") {
  const Complex b = C("0.45-0.2i");
  CHECK_CLOSE(coeff_D(0, kF(), kM(), b), pochhammer_vec(kF().shifted(-b), kM()));
  CHECK_CLOSE(coeff_D(1, ParamVector{C("2.5+i")}, IntVector{1}, b), C("-1"));
  for (int k = 0; k <= kM().total(); ++k) {
    const Complex hyp = coeff_D(k, kF(), kM(), b);
    CHECK_CLOSE(coeff_D(k, kF(), kM(), b, Route::stirling), hyp);
    CHECK_CLOSE(coeff_D(k, kF(), kM(), b, Route::finite_difference), hyp);
    const Complex at_zero = forward_difference([&](int t) { return pochhammer_vec(kF().shifted(Complex(-t)), kM()); }, k);
    CHECK_CLOSE(coeff_D(k, kF(), kM(), Complex(0)), at_zero);
  }
  // (f - b)_m = 0: the hypergeometric form is singular, the value is not.
  const ParamVector f{C("0.45-0.2i")};
  for (int k = 0; k <= 2; ++k) {
    CHECK_CLOSE(coeff_D(k, f, IntVector{2}, b), coeff_D(k, f, IntVector{2}, b, Route::finite_difference));
  }
}

TEST_CASE("W polynomial") {
  const Complex b = C("0.3+0.9i");
  const Complex fm = pochhammer_vec(kF(), kM());
  const CPoly w = w_poly(b, kF(), kM());
  CHECK(w.degree() == kM().total() - 1);
  CHECK_CLOSE(w(Complex(0)), (fm - pochhammer_vec(kF().shifted(-b), kM())) / fm);
  for (int n = 0; n <= 5; ++n) {
    const Complex direct = b * (pochhammer_vec(kF().shifted(Complex(n)), kM()) - pochhammer_vec(kF().shifted(-b), kM())) /
                           ((b + n) * fm);
    CHECK_CLOSE(w(Complex(n)), direct);
  }
  const Complex f1 = C("1.25");
  const CPoly w1 = w_poly(b, ParamVector{f1}, IntVector{1});
  CHECK(w1.degree() == 0);
  CHECK_CLOSE(w1.coeff(0), b / f1);
  CHECK(w_poly(Complex(0), kF(), kM()).is_zero());
}

TEST_CASE("Y coefficients") {
  const Complex b = C("-0.35+0.4i");
  const Complex f1 = C("1.6+0.2i");
  CHECK_CLOSE(coeff_Y(0, b, ParamVector{f1}, IntVector{1}), b / f1);
  const CPoly w = w_poly(b, kF(), kM());
  for (int l = 0; l < kM().total(); ++l) {
    const Complex hyp = coeff_Y(l, b, kF(), kM());
    CHECK_CLOSE(coeff_Y(l, b, kF(), kM(), Route::stirling), hyp);
    CHECK_CLOSE(coeff_Y(l, b, kF(), kM(), Route::norlund), hyp);
  }
  for (int n = 0; n < kM().total(); ++n) {
    Complex sum(0);
    for (int l = 0; l < kM().total(); ++l) sum += coeff_Y(l, b, kF(), kM()) * falling(Complex(n), l);
    CHECK_CLOSE(sum, w(Complex(n)));
  }
  CHECK_THROWS_AS(coeff_Y(kM().total(), b, kF(), kM()), Error);
}

TEST_CASE("Norlund coefficients") {
  const NorlundArgs two{{C("0.3-0.1i")}, {C("1.2"), C("-0.7+0.5i")}};
  const NorlundArgs four{{C("0.2+0.4i"), C("-1.1"), C("0.6")}, {C("1.3-0.2i"), C("0.45"), C("2.2+i"), C("-0.8")}};
  CHECK(norlund_g(0, four) == Complex(1));
  for (int n = 0; n <= 6; ++n) {
    CHECK_CLOSE(norlund_g(n, two),
                pochhammer(two.b[0] - two.a[0], n) * pochhammer(two.b[1] - two.a[0], n) / factorial(n));
  }

  const auto& a = four.a;
  const auto& b = four.b;
  std::vector<Complex> psi{Complex(0)};
  for (std::size_t m = 1; m < b.size(); ++m) psi.push_back(psi.back() + b[m - 1] - a[m - 1]);
  Complex g1(0);
  for (std::size_t m = 1; m < b.size(); ++m) g1 += (b[m] - a[m - 1]) * psi[m];
  CHECK_CLOSE(norlund_g(1, four), g1);
  Complex g2(0);
  for (std::size_t m = 1; m < b.size(); ++m) g2 += pochhammer(b[m] - a[m - 1], 2) * pochhammer(psi[m], 2) / 2;
  for (std::size_t k = 2; k < b.size(); ++k) {
    Complex inner(0);
    for (std::size_t m = 1; m < k; ++m) inner += (b[m] - a[m - 1]) * psi[m];
    g2 += (b[k] - a[k - 1]) * (psi[k] + 1) * inner;
  }
  CHECK_CLOSE(norlund_g(2, four), g2);

  for (int n = 0; n <= 8; ++n) {
    const Complex rec = norlund_g(n, four);
    CHECK_CLOSE(norlund_g(n, four, NorlundRoute::explicit_sum), rec, 10);
    CHECK_CLOSE(norlund_g(n, four, NorlundRoute::closed_form), rec, 10);
  }
  const NorlundArgs five{{C("1"), C("2"), C("3"), C("4")}, {C("1"), C("2"), C("3"), C("4"), C("5")}};
  CHECK_THROWS_AS(norlund_g(1, five, NorlundRoute::closed_form), Error);
  CHECK_THROWS_AS(norlund_g(1, NorlundArgs{{C("1")}, {C("1")}}), Error);
}

TEST_CASE("terminating sums") {
  CHECK_CLOSE(terminating_sum({C("-2"), C("0.5"), C("3")}, {C("1.5"), C("2")}), C("0.4"));
  CHECK_THROWS_AS(terminating_sum({C("0.5")}, {C("1.5")}), Error);
  CHECK_THROWS_AS(terminating_sum({C("-3")}, {C("-1")}), Error);
}
