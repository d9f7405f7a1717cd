#pragma once

#include "ipdhyp/coefficients.hpp"
#include "ipdhyp/poly.hpp"

namespace ipd {

enum class QRoute { eq5, eq7 };
enum class TVariant { T, Tstar };
enum class LVariant { L, Lhat };

/// Q_m(t) of the first Miller-Paris transformation, normalized so Q(0) = 1.
/// eq5 is the C_{k,r} sum; eq7 is the rearranged hypergeometric form, sampled
/// at m+1 points and interpolated.
CPoly build_Q(const Complex& b, const Complex& c, const ParamVector& f, const IntVector& m,
              QRoute route = QRoute::eq5);

/// P_m(t) with the D_k coefficients; P_m = (f)_m Q_m.
CPoly build_P(const Complex& b, const Complex& c, const ParamVector& f, const IntVector& m);

CPoly build_Qhat(const Complex& a, const Complex& b, const Complex& c, const ParamVector& f,
                 const IntVector& m);
CPoly build_Phat(const Complex& a, const Complex& b, const Complex& c, const ParamVector& f,
                 const IntVector& m);

/// T_{p-1}(z) or T*_{p-1}(z) for c = b+p. `a` is used by Tstar only.
CPoly build_T(const Complex& b, int p, const ParamVector& f, const IntVector& m, TVariant variant,
              const Complex& a = Complex(0));

/// L_{m-1}(t) or L̂_{m-1}(t) of the two-free-parameter transformation.
CPoly build_L(const Complex& a, const Complex& d, const Complex& e, const Complex& b,
              const ParamVector& f, const IntVector& m, LVariant variant);

}  // namespace ipd
