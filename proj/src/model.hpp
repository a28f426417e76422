// Physical model layer: detector and scenario records with their derived
// dimensionless parameters, the massless Minkowski vacuum correlator kernels
// (Wightman, anticommutator, light-cone commutator), Gaussian switching in
// time and frequency, and the radially reduced continuum mode family.
//
// Conventions fixed here and relied on everywhere downstream:
//   - natural units, c = 1;
//   - switching chi_I(t) = exp(-(t - t_I)^2 / T^2), both detectors share T;
//   - Fourier transform chihat(nu) = Integral dt chi(t) exp(-i nu t);
//   - smearing F(xi) = (2 pi sigma^2)^(-3/2) exp(-|xi|^2 / (2 sigma^2)),
//     momentum profile exp(-kappa^2 sigma^2 / 2), one factor per detector.
#pragma once

#include <memory>
#include <span>

#include "quad.hpp"
#include "types.hpp"

namespace udwh::model {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

struct Detector {
  double gap = 1.0;            // proper energy gap Omega, may be negative
  double coupling = 1.0;       // perturbative coupling lambda
  Vec3 position{};             // static spatial position
  double switch_center = 0.0;  // Gaussian switching center t_I
  double switch_width = 1.0;   // Gaussian switching width T, > 0
  double smearing = 0.0;       // spatial smearing width sigma, >= 0 (0 = pointlike)

  void validate() const;  // throws Error(invalid_argument)
};

// Gaussian switching profile and its Fourier transform.
double switching(const Detector& d, double t);
Complex switching_fourier(const Detector& d, double nu);

struct Scenario {
  Detector detector_a;
  Detector detector_b;
  double field_mass = 0.0;  // >= 0; closed forms require 0
  double epsilon = 1e-3;    // base regulator for oracle kernels, in units of T

  Scenario() = default;
  Scenario(Detector a, Detector b, double mass, double eps);

  void validate() const;  // both detectors valid, equal widths, mass >= 0, eps > 0

  // derived dimensionless parameters
  double width() const { return detector_a.switch_width; }
  double alpha_a() const { return detector_a.gap * width(); }
  double alpha_b() const { return detector_b.gap * width(); }
  double separation() const { return distance(detector_a.position, detector_b.position); }
  double beta() const { return separation() / width(); }
  double gamma() const { return (detector_b.switch_center - detector_a.switch_center) / width(); }
  double delta_a() const { return detector_a.smearing / width(); }
  double delta_b() const { return detector_b.smearing / width(); }
  double center_sum() const { return detector_a.switch_center + detector_b.switch_center; }
  double lambda_product() const { return detector_a.coupling * detector_b.coupling; }
  bool equal_gaps() const;
  bool pointlike() const { return detector_a.smearing == 0.0 && detector_b.smearing == 0.0; }

  Scenario swapped() const;  // detector labels exchanged
};

// Massless vacuum Wightman function with the i-epsilon prescription,
// W(dt, r) = -1/(4 pi^2) * 1 / ((dt - i eps)^2 - r^2).
Complex wightman_pointlike(double dt, double r, double eps);

// Principal-value pointwise anticommutator -1/(2 pi^2 (dt^2 - r^2));
// throws Error(on_light_cone) within a relative window of |dt| = r.
double anticommutator_pointlike(double dt, double r);

// The commutator of the massless field is a pure light-cone distribution;
// it is represented structurally, never as a pointwise function:
// i C^-(dt) = i coefficient (delta(dt + r) - delta(dt - r)).
struct LightConeCommutator {
  double radius;
  double coefficient;  // 1/(4 pi r)
  double advanced_support() const { return -radius; }  // delta(dt + r), sign +
  double retarded_support() const { return radius; }   // delta(dt - r), sign -
  // Pairing of the bracketed distribution with a test function:
  // (g(-r) - g(r)) * coefficient.
  template <typename G>
  auto pair(const G& g) const {
    return coefficient * (g(-radius) - g(radius));
  }
};

LightConeCommutator commutator_lightcone(double r);  // throws invalid_radius for r <= 0

// Continuum mode family after angular reduction: W(dt; x, x') =
// Integral dk density(k) / (2 omega) pair_profile(k, |x - x'|) e^{-i omega dt}.
class ModeFamily {
 public:
  virtual ~ModeFamily() = default;
  virtual double omega(double kappa) const = 0;          // > 0 for kappa > 0
  virtual double state_density(double kappa) const = 0;  // measure density
  virtual double pair_profile(double kappa, double separation) const = 0;
  // dt/dtau at a static detector; identically 1 in Minkowski.
  virtual double redshift(const Detector&) const { return 1.0; }
};

std::shared_ptr<const ModeFamily> minkowski_mode_family(double mass);

// Reconstructs the regulated Wightman function from the mode family with an
// exp(-eps omega) damping; cross-check against wightman_pointlike.
QuadratureResult wightman_from_modes(const ModeFamily& family, double dt, double r,
                                     double eps, const Tolerance& tol);

}  // namespace udwh::model
