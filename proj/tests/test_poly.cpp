#include <algorithm>

#include "ipdhyp/poly.hpp"
#include "support.hpp"

using namespace ipd;
using ipdtest::C;

TEST_CASE("polynomial arithmetic") {
  const CPoly p(std::vector<Complex>{C("1"), C("-2"), C("3")});
  const CPoly q(std::vector<Complex>{C("0.5i"), C("1")});
  CHECK(p.degree() == 2);
  CHECK_CLOSE(p(C("2")), C("9"));
  CHECK_CLOSE((p * q)(C("0.3-i")), p(C("0.3-i")) * q(C("0.3-i")));
  CHECK_CLOSE((p + q)(C("1.5")), p(C("1.5")) + q(C("1.5")));
  CHECK_CLOSE(p.derivative()(C("1")), C("4"));
  CHECK((p - p).is_zero());
  CHECK(CPoly(std::vector<Complex>{C("1"), C("0"), C("1e-60")}).degree() == 0);
  CHECK(CPoly::monomial(3, C("2")).coeff(3) == C("2"));
  CHECK(CPoly::monomial(3, C("2")).coeff(7) == Complex(0));
}

TEST_CASE("rising polynomial and interpolation") {
  const Complex c = C("0.25+0.5i");
  const CPoly up = rising_poly(c, 3);
  const CPoly down = rising_poly(c, 3, -1);
  for (const char* s : {"0", "1.3", "-0.2+2i"}) {
    const Complex t = C(s);
    CHECK_CLOSE(up(t), pochhammer(c + t, 3));
    CHECK_CLOSE(down(t), pochhammer(c - t, 3));
  }
  CHECK(rising_poly(c, 0).degree() == 0);

  const CPoly target(std::vector<Complex>{C("1-i"), C("0.5"), C("-2"), C("0.125i")});
  std::vector<Complex> nodes;
  std::vector<Complex> values;
  for (int j = 0; j < 4; ++j) {
    nodes.push_back(C("0.2371+0.4137i") + j);
    values.push_back(target(nodes.back()));
  }
  const CPoly rebuilt = interpolate(nodes, values);
  for (int i = 0; i <= 3; ++i) CHECK_CLOSE(rebuilt.coeff(i), target.coeff(i));
}

TEST_CASE("roots: small cases") {
  const RootSet r = find_roots(CPoly(std::vector<Complex>{C("-1"), C("0"), C("1")}));
  REQUIRE(r.roots.size() == 2);
  CHECK_CLOSE(r.roots[0], C("-1"));
  CHECK_CLOSE(r.roots[1], C("1"));

  // (t-2)^2 (t+1) = t^3 - 3t^2 + 4
  const RootSet d = find_roots(CPoly(std::vector<Complex>{C("4"), C("0"), C("-3"), C("1")}));
  REQUIRE(d.roots.size() == 3);
  CHECK(d.residual <= Precision::tolerance(10));
  CHECK_CLOSE(d.roots[0], C("-1"));
  // A double root is only determined to about half the working digits.
  CHECK(abs(d.roots[1] - C("2")) <= Precision::tolerance(24));
  CHECK(abs(d.roots[2] - C("2")) <= Precision::tolerance(24));

  CHECK(find_roots(CPoly::constant(C("3"))).roots.empty());
  CHECK_THROWS_AS(find_roots(CPoly()), Error);
}

TEST_CASE("roots: recovery from a synthetic product") {
  const ParamVector roots{C("0.3+1.1i"), C("-2.5"), C("1e-3-0.7i"), C("4+4i"), C("-0.6+0.2i"), C("1.75")};
  const CPoly poly = from_roots(roots) * C("0.5-2i");
  const RootSet found = find_roots(poly);
  REQUIRE(found.roots.size() == roots.size());
  CHECK(found.residual <= Precision::tolerance(10));
  for (const auto& r : roots) {
    const auto hit = std::find_if(found.roots.begin(), found.roots.end(),
                                  [&](const Complex& z) { return ipdtest::close(z, r, 10); });
    CHECK(hit != found.roots.end());
  }
  const RootSet again = find_roots(poly);
  for (std::size_t i = 0; i < roots.size(); ++i) CHECK(again.roots[i] == found.roots[i]);
}

TEST_CASE("roots near nonpositive integers are flagged") {
  const RootSet r = find_roots(from_roots(ParamVector{C("-3"), C("0.5")}));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.near_nonpositive_integer[0]);
  CHECK_FALSE(r.near_nonpositive_integer[1]);
  CHECK(r.any_flagged());
}
