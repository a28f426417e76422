// Complex error-function family: Faddeeva w, erf/erfc of complex argument,
// real erfi and the Dawson integral. These carry every closed-form path in
// the harvesting code, so the accuracy contract is tight: relative error
// <= 1e-12 over the domains the library actually uses (|z| <= 30 for w).
#pragma once

#include "types.hpp"

namespace udwh::specfun {

// w(z) = exp(-z^2) erfc(-iz). Exact on the upper half plane; the lower half
// plane goes through the reflection w(z) = 2 exp(-z^2) - w(-z) and can
// overflow where w itself exceeds double range.
Complex faddeeva_w(Complex z);

Complex erf(Complex z);
Complex erfc(Complex z);

// erfi(x) = -i erf(ix), real for real x. Unscaled; overflows past |x| ~ 26,
// hence the guard. Closed-form code must use dawson() instead.
double erfi(double x);

// Dawson integral F(x) = (sqrt(pi)/2) exp(-x^2) erfi(x); the overflow-safe
// carrier of every exp(-u^2) erfi(u) product.
double dawson(double x);

}  // namespace udwh::specfun
