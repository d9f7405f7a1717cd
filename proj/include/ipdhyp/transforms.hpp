#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipdhyp/charpoly.hpp"
#include "ipdhyp/coefficients.hpp"
#include "ipdhyp/hyp_eval.hpp"

namespace ipd {

enum class ArgMap { identity, mobius };

/// coeff * x^x_power * (1-x)^prefactor_exponent * fun(arg_map(x)).
/// A term without `fun` is purely algebraic.
struct HypTerm {
  Complex coeff;
  int x_power = 0;
  Complex prefactor_exponent;
  ArgMap arg_map = ArgMap::identity;
  std::optional<HypFunction> fun;

  Complex evaluate(const Complex& x, const EvalOptions& options = {}) const;
};

struct HypExpression {
  std::vector<HypTerm> terms;

  Complex evaluate(const Complex& x, const EvalOptions& options = {}) const;
  void add(HypTerm term) { terms.push_back(std::move(term)); }
};

/// lhs(x) = rhs(x), plus non-fatal notes (root-derived bottom parameters that
/// sit on a nonpositive integer are reported as "RootWarning: ...").
struct Transformation {
  HypFunction lhs;
  HypExpression rhs;
  std::vector<std::string> warnings;

  /// |lhs(x) - rhs(x)| / max(1, |lhs(x)|).
  Real residual(const Complex& x, const EvalOptions& options = {}) const;
};

/// r+2F_{r+1}(a, b, f+m; c, f).
HypFunction ipd_function(const IpdSpec& spec);

enum class Mp1Route { paperQ, newP };
enum class Mp2Route { paperQhat, newPhat };
enum class SingleVariant { eq19, eq20, eq26 };
enum class DegenerateVariant { eq29, eq31 };
enum class VectorVariant { eq27, eq28 };
enum class TwoFreeVariant { first, second };
enum class MeijerRoute { closed, series };

Transformation apply_mp1(const IpdSpec& spec, Mp1Route route = Mp1Route::newP);
Transformation apply_mp2(const IpdSpec& spec, Mp2Route route = Mp2Route::newPhat);

/// Gauss-function expansion with D_k coefficients.
Transformation expand_to_gauss(const IpdSpec& spec);

/// c = b+1. eq26 is the intermediate identity with every argument equal to x.
Transformation apply_degenerate_single(const Complex& a, const Complex& b, const ParamVector& f,
                                       const IntVector& m, SingleVariant variant);

/// c = b+p, p >= 1.
Transformation apply_degenerate_p(const Complex& a, const Complex& b, int p, const ParamVector& f,
                                  const IntVector& m, DegenerateVariant variant);

/// r+l+2F(a, b_vec, f+m; b_vec+p_vec, f) by partial fractions over the
/// concatenated beta list b_j, b_j+1, ..., b_j+p_j-1.
Transformation apply_degenerate_vector(const Complex& a, const ParamVector& b, const IntVector& p,
                                       const ParamVector& f, const IntVector& m, VectorVariant variant);

/// r+3F_{r+2}(a, d, b, f+m; e, b+1, f).
Transformation apply_two_free(const Complex& a, const Complex& d, const Complex& e, const Complex& b,
                              const ParamVector& f, const IntVector& m, TwoFreeVariant variant);

/// The IPD Meijer-Nørlund function G^{r+1,0}_{r+1,r+1} at 0 < t < 1.
Complex meijer_norlund_ipd(const Real& t, const Complex& b, const Complex& c, const ParamVector& f,
                           const IntVector& m, MeijerRoute route);

/// Closed-form right-hand sides and corollary roots used by the verification
/// suite and the tests.
namespace closed_form {

/// k!/(b+1)_k (f-b)_m/(f)_m, k >= m.
Complex minton(int k, const Complex& b, const ParamVector& f, const IntVector& m);
/// Gamma(b+1)Gamma(1-a)/Gamma(b+1-a) (f-b)_m/(f)_m, Re(1-a-m) > 0.
Complex karlsson(const Complex& a, const Complex& b, const ParamVector& f, const IntVector& m);

Complex lemma3_sum(int i, int k, int m, const Complex& alpha);
Complex lemma3_closed(int i, int k, int m, const Complex& alpha);
Complex lemma4_sum(int k, const Complex& b, const ParamVector& f, const IntVector& m);
Complex lemma4_closed(int k, const Complex& b, const ParamVector& f, const IntVector& m);

/// lambda* of the p = 2 specialization; the T* root equals -lambda*.
Complex cor3_lambda_star(const Complex& a, const Complex& b, const ParamVector& f, const IntVector& m);
/// r = 1, m = (2).
Complex cor4_lambda(const Complex& b, const Complex& d, const Complex& e, const Complex& f);
Complex cor4_lambda_star(const Complex& a, const Complex& b, const Complex& d, const Complex& e,
                         const Complex& f);
/// r = 2, m = (1, 1).
Complex cor5_lambda(const Complex& b, const Complex& d, const Complex& e, const Complex& f1,
                    const Complex& f2);
Complex cor5_lambda_star(const Complex& a, const Complex& b, const Complex& d, const Complex& e,
                         const Complex& f1, const Complex& f2);

}  // namespace closed_form

}  // namespace ipd
