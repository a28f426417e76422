// Adaptive quadrature engines. Three entry points: finite-interval 1D,
// semi-infinite oscillatory 1D (segment sums with iterated averaging), and
// 2D integration over a box with optional time ordering. All engines are
// deterministic for fixed inputs: fixed node family (Gauss 7 / Kronrod 15),
// worst-error-first subdivision with stable tie-breaking, fixed reduction
// order. Evaluation counts are part of the result and reproducible.
#pragma once

#include <functional>
#include <span>

#include "types.hpp"

namespace udwh::quad {

using Integrand1D = std::function<Complex(double)>;
using Integrand2D = std::function<Complex(double, double)>;

QuadratureResult integrate_1d(const Integrand1D& f, double a, double b, const Tolerance& tol);

// Same engine, seeded with initial cuts (sorted, strictly inside (a,b));
// used to keep known kinks and near-singular bands on cell boundaries.
QuadratureResult integrate_1d_pieces(const Integrand1D& f, double a, double b,
                                     std::span<const double> interior_cuts,
                                     const Tolerance& tol);

// Integrates f over [0, inf) for integrands that decay (at least
// conditionally) at infinity. osc_wavelength sets the finest oscillation
// scale; segments of half that length are summed and the partial-sum
// sequence is accelerated by iterated averaging, which carries the
// conditionally convergent tails the Gaussian factors do not kill.
QuadratureResult integrate_semi_infinite_oscillatory(const Integrand1D& f,
                                                     double osc_wavelength,
                                                     const Tolerance& tol);

struct Box {
  double x_lo, x_hi, y_lo, y_hi;
};

// 2D integral of f(x, y) over the box; when ordered is set the domain is
// restricted to y < x (the time-ordered triangle), handled by integrating
// in the sheared variable s = x - y so the ordering kink is a cell edge
// rather than an interior diagonal. inner_cuts lists inner-variable values
// (s for ordered domains, y otherwise) to pre-split at, e.g. light-cone
// bands.
QuadratureResult integrate_2d(const Integrand2D& f, const Box& box, bool ordered,
                              const Tolerance& tol,
                              std::span<const double> inner_cuts = {});

}  // namespace udwh::quad
