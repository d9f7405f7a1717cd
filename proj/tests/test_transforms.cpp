#include <functional>

#include "ipdhyp/transforms.hpp"
#include "support.hpp"

using namespace ipd;
using ipdtest::C;

namespace {

IpdSpec base_spec() { return IpdSpec{C("0.7"), C("0.4"), C("2.3"), ParamVector{C("1.5")}, IntVector{2}}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::vector<Complex> sample_points() { return {C("0.3"), C("-0.25+0.2i"), C("0.1-0.4i"), C("-0.45")}; }

}  // namespace

TEST_CASE("first Miller-Paris transformation") {
  const IpdSpec s = base_spec();
  for (auto route : {Mp1Route::paperQ, Mp1Route::newP}) {
    const Transformation t = apply_mp1(s, route);
    CHECK(t.residual(Complex(0)) == Real(0));
    CHECK_CLOSE(t.rhs.evaluate(Complex(0)), Complex(1));
    CHECK(t.residual(C("0.3")) < pow10(-25));
    for (const auto& x : sample_points()) CHECK(t.residual(x) <= Precision::tolerance(12));
  }

  const Complex f1 = C("1.5-0.4i");
  const IpdSpec one{C("0.7"), C("0.4+0.1i"), C("2.3"), ParamVector{f1}, IntVector{1}};
  const Transformation t = apply_mp1(one);
  const Complex zeta = f1 * (one.c - one.b - 1) / (f1 - one.b);
  REQUIRE(t.rhs.terms.size() == 1);
  const HypFunction& fun = *t.rhs.terms[0].fun;
  CHECK_CLOSE(fun.num[fun.num.size() - 1], zeta + 1);
  CHECK_CLOSE(fun.den[fun.den.size() - 1], zeta);
}

TEST_CASE("second Miller-Paris transformation") {
  const IpdSpec s = base_spec();
  const Transformation q = apply_mp2(s, Mp2Route::paperQhat);
  const Transformation p = apply_mp2(s, Mp2Route::newPhat);
  CHECK(q.residual(Complex(0)) == Real(0));
  const HypFunction& fq = *q.rhs.terms[0].fun;
  const HypFunction& fp = *p.rhs.terms[0].fun;
  REQUIRE(fq.num.size() == fp.num.size());
  for (std::size_t i = 0; i < fq.num.size(); ++i) CHECK_CLOSE(fq.num[i], fp.num[i]);
  for (std::size_t i = 0; i < fq.den.size(); ++i) CHECK_CLOSE(fq.den[i], fp.den[i]);
  for (const auto& x : sample_points()) {
    CHECK(q.residual(x) <= Precision::tolerance(12));
    CHECK(p.residual(x) <= Precision::tolerance(12));
  }
  IpdSpec bad = s;
  bad.c = Complex(1) + *s.a + s.b;
  CHECK(kind_of([&] { apply_mp2(bad); }) == ErrorKind::DegenerateCase);
}

TEST_CASE("Gauss-function expansion") {
  const IpdSpec one{C("0.7"), C("0.4"), C("2.3"), ParamVector{C("1.5")}, IntVector{1}};
  const Transformation t = expand_to_gauss(one);
  CHECK(t.rhs.terms.size() == 2);
  Complex sum(0);
  for (const auto& term : t.rhs.terms) sum += term.coeff;
  CHECK_CLOSE(sum, Complex(1));
  const Transformation t2 = expand_to_gauss(base_spec());
  CHECK(t2.residual(C("0.3+0.2i")) <= Precision::tolerance(12));
  CHECK(t2.residual(C("0.3-0.2i")) <= Precision::tolerance(12));
}

TEST_CASE("single degenerate transformation") {
  const Complex a = C("0.3");
  const Complex b = C("0.4");
  const ParamVector f{C("1.5")};
  const IntVector m{2};
  for (auto v : {SingleVariant::eq19, SingleVariant::eq20, SingleVariant::eq26}) {
    const Transformation t = apply_degenerate_single(a, b, f, m, v);
    CHECK(t.residual(Complex(0)) == Real(0));
    CHECK(t.residual(C("0.25")) <= Precision::tolerance(12));
  }
}

TEST_CASE("single degenerate transformation tends to Karlsson's sum") {
  // Re(1 - a - m) > 0: the algebraic terms vanish like (1-x)^{-a-l} and the
  // Gauss term tends to its value at x = 1.
  const Complex a = C("-1.2+0.3i");
  const Complex b = C("0.4-0.2i");
  const ParamVector f{C("1.5+0.5i")};
  const IntVector m{1};
  const Transformation t = apply_degenerate_single(a, b, f, m, SingleVariant::eq26);
  const Complex karlsson = closed_form::karlsson(a, b, f, m);
  Complex gauss_at_one(0);
  for (const auto& term : t.rhs.terms) {
    if (term.fun) {
      gauss_at_one = term.coeff * eval_pfq(*term.fun, Complex(1)).value;
    } else {
      const Complex near = term.evaluate(Complex(1) - Complex(pow10(-6)));
      CHECK(abs(near) < pow10(-5));
    }
  }
  CHECK_CLOSE(gauss_at_one, karlsson);
  const HypFunction lhs = t.lhs;
  CHECK_CLOSE(eval_pfq(lhs, Complex(1)).value, karlsson);
}

TEST_CASE("degenerate transformation with c = b + p") {
  const Complex a = C("0.3+0.1i");
  const Complex b = C("0.4-0.2i");
  const ParamVector f{C("1.5"), C("-0.7+0.3i")};
  const IntVector m{2, 1};
  for (int p = 1; p <= 4; ++p) {
    for (auto v : {DegenerateVariant::eq29, DegenerateVariant::eq31}) {
      const Transformation t = apply_degenerate_p(a, b, p, f, m, v);
      CHECK(t.residual(Complex(0)) <= Precision::tolerance(12));
      for (const auto& x : sample_points()) CHECK(t.residual(x) <= Precision::tolerance(12));
    }
  }
  const Transformation p1 = apply_degenerate_p(a, b, 1, f, m, DegenerateVariant::eq29);
  const Transformation single = apply_degenerate_single(a, b, f, m, SingleVariant::eq19);
  for (const auto& x : sample_points()) CHECK_CLOSE(p1.rhs.evaluate(x), single.rhs.evaluate(x));

  const Transformation t2 = apply_degenerate_p(a, b, 2, f, m, DegenerateVariant::eq31);
  const HypFunction& fun = *t2.rhs.terms[0].fun;
  CHECK_CLOSE(fun.den[fun.den.size() - 1], closed_form::cor3_lambda_star(a, b, f, m));

  const Transformation t3 = apply_degenerate_p(C("0.6"), C("0.35"), 3, ParamVector{C("1.2")}, IntVector{1},
                                               DegenerateVariant::eq29);
  CHECK(t3.residual(C("0.2")) <= Precision::tolerance(12));
}

TEST_CASE("vector extension") {
  const Complex a = C("0.3");
  const ParamVector f{C("1.5")};
  const IntVector m{2};
  for (auto v : {VectorVariant::eq27, VectorVariant::eq28}) {
    const Transformation t = apply_degenerate_vector(a, ParamVector{C("0.4"), C("1.3+0.5i")}, IntVector{2, 1}, f, m, v);
    CHECK(t.residual(Complex(0)) <= Precision::tolerance(12));
    for (const auto& x : sample_points()) CHECK(t.residual(x) <= Precision::tolerance(12));
  }
  const Complex b = C("0.45-0.1i");
  for (int p = 1; p <= 3; ++p) {
    const Transformation vec = apply_degenerate_vector(a, ParamVector{b}, IntVector{p}, f, m, VectorVariant::eq27);
    const Transformation deg = apply_degenerate_p(a, b, p, f, m, DegenerateVariant::eq29);
    for (const auto& x : sample_points()) CHECK_CLOSE(vec.rhs.evaluate(x), deg.rhs.evaluate(x));
  }
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      Complex bq(1);
      for (int v = 1; v <= p; ++v) {
        if (v != q) bq *= Complex(v - q);
      }
      CHECK_CLOSE(bq, ((q - 1) % 2 == 0 ? Complex(1) : Complex(-1)) * factorial(q - 1) * factorial(p - q));
    }
  }
  CHECK(kind_of([&] {
          apply_degenerate_vector(a, ParamVector{C("0.4"), C("1.4")}, IntVector{2, 1}, f, m, VectorVariant::eq27);
        }) == ErrorKind::DistinctnessViolation);
}

TEST_CASE("two-free-parameter transformation") {
  const Complex a = C("0.3");
  const Complex d = C("0.6");
  const Complex e = C("2.1");
  const Complex b = C("0.45");
  const ParamVector f{C("1.4")};
  const IntVector m{2};
  const Transformation first = apply_two_free(a, d, e, b, f, m, TwoFreeVariant::first);
  const Transformation second = apply_two_free(a, d, e, b, f, m, TwoFreeVariant::second);
  CHECK(first.residual(C("0.2+0.1i")) <= Precision::tolerance(12));
  CHECK(second.residual(C("0.2+0.1i")) <= Precision::tolerance(12));
  const HypFunction& g1 = *first.rhs.terms[1].fun;
  const HypFunction& g2 = *second.rhs.terms[1].fun;
  CHECK_CLOSE(g1.den[g1.den.size() - 1], closed_form::cor4_lambda(b, d, e, f[0]));
  CHECK_CLOSE(g2.den[g2.den.size() - 1], closed_form::cor4_lambda_star(a, b, d, e, f[0]));

  const ParamVector f2{C("1.4"), C("0.8+0.2i")};
  const Transformation five = apply_two_free(a, d, e, b, f2, IntVector{1, 1}, TwoFreeVariant::first);
  const HypFunction& g5 = *five.rhs.terms[1].fun;
  CHECK_CLOSE(g5.den[g5.den.size() - 1], closed_form::cor5_lambda(b, d, e, f2[0], f2[1]));
  for (const auto& x : sample_points()) CHECK(five.residual(x) <= Precision::tolerance(12));
  CHECK(kind_of([&] { apply_two_free(a, d, e, Complex(0), f, m, TwoFreeVariant::first); }) == ErrorKind::TrivialSplit);
}

TEST_CASE("Meijer-Norlund function") {
  const Complex b = C("0.3");
  const Complex c = C("1.7");
  const ParamVector f{C("1.2")};
  const IntVector m{1};
  const Real t("0.4");
  CHECK_CLOSE(meijer_norlund_ipd(t, b, c, f, m, MeijerRoute::closed), meijer_norlund_ipd(t, b, c, f, m, MeijerRoute::series));
  const ParamVector f2{C("0.7+0.4i"), C("2.15")};
  const IntVector m2{2, 1};
  const Complex b2 = C("-0.4+0.3i");
  const Complex c2 = C("1.3-0.6i");
  for (const char* s : {"0.05", "0.5", "0.95"}) {
    const Real tt(s);
    CHECK_CLOSE(meijer_norlund_ipd(tt, b2, c2, f2, m2, MeijerRoute::closed),
                meijer_norlund_ipd(tt, b2, c2, f2, m2, MeijerRoute::series));
  }
  const Real small("1e-4");
  const Complex leading = exp(b * log(Complex(small))) * pochhammer_vec(f.shifted(-b), m) * reciprocal_gamma(c - b);
  CHECK(abs(meijer_norlund_ipd(small, b, c, f, m, MeijerRoute::closed) / leading - 1) < Real("1e-2"));
  CHECK(kind_of([&] { meijer_norlund_ipd(t, b, C("2.2"), f, m, MeijerRoute::series); }) == ErrorKind::IntegerDifference);
  CHECK(kind_of([&] { meijer_norlund_ipd(Real(1), b, c, f, m, MeijerRoute::closed); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("summation formulas and finite sums") {
  CHECK_CLOSE(closed_form::minton(2, C("0.5"), ParamVector{C("2")}, IntVector{1}), C("0.4"));
  CHECK_THROWS_AS(closed_form::minton(1, C("0.5"), ParamVector{C("2")}, IntVector{2}), Error);
  const Complex alpha = C("0.37-1.1i");
  for (int mm = 0; mm <= 6; ++mm) {
    for (int k = 0; k <= mm; ++k) {
      for (int i = 0; i <= k; ++i) {
        CHECK_CLOSE(closed_form::lemma3_sum(i, k, mm, alpha), closed_form::lemma3_closed(i, k, mm, alpha));
      }
    }
  }
  const ParamVector f{C("0.6+0.2i"), C("1.9")};
  const IntVector m{2, 2};
  for (int k = 0; k <= m.total(); ++k) {
    CHECK_CLOSE(closed_form::lemma4_sum(k, C("0.3-0.5i"), f, m), closed_form::lemma4_closed(k, C("0.3-0.5i"), f, m));
  }
}
