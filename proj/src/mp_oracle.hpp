// Arbitrary-precision reference evaluator for the error-function family.
// Completely independent of specfun: everything here reduces to one MPFR
// Maclaurin series for erf plus exact reflections, with working precision
// sized to absorb the series cancellation. Used only to pin reference
// values and by the self-test suite; not part of the public surface.
#pragma once

#include "types.hpp"

namespace udwh::mporacle {

// All values carry >= 30 correct significant digits before the final
// rounding to double.
Complex erf_ref(Complex z);
Complex erfc_ref(Complex z);
Complex faddeeva_w_ref(Complex z);
double erfi_ref(double x);
double dawson_ref(double x);

// |a - b| / |b| with the convention that b == 0 demands a == 0.
double rel_err(Complex approx, Complex ref);

}  // namespace udwh::mporacle
