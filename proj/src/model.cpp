#include "model.hpp"

#include <cmath>

namespace udwh::model {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}
}  // namespace

double distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

void Detector::validate() const {
  if (!(switch_width > 0.0) || !std::isfinite(switch_width)) {
    throw Error(Errc::invalid_argument, "detector: switch width must be positive");
  }
  if (!(smearing >= 0.0) || !std::isfinite(smearing)) {
    throw Error(Errc::invalid_argument, "detector: smearing width must be >= 0");
  }
  if (!std::isfinite(gap) || !std::isfinite(coupling) || !std::isfinite(switch_center) ||
      !std::isfinite(position.x) || !std::isfinite(position.y) || !std::isfinite(position.z)) {
    throw Error(Errc::invalid_argument, "detector: parameters must be finite");
  }
}

double switching(const Detector& d, double t) {
  const double u = (t - d.switch_center) / d.switch_width;
  return std::exp(-u * u);
}

Complex switching_fourier(const Detector& d, double nu) {
  const double t = d.switch_width;
  const double mag = kSqrtPi * t * std::exp(-0.25 * nu * nu * t * t);
  return mag * Complex(std::cos(nu * d.switch_center), -std::sin(nu * d.switch_center));
}

Scenario::Scenario(Detector a, Detector b, double mass, double eps)
    : detector_a(a), detector_b(b), field_mass(mass), epsilon(eps) {
  validate();
}

void Scenario::validate() const {
  detector_a.validate();
  detector_b.validate();
  const double ta = detector_a.switch_width;
  const double tb = detector_b.switch_width;
  if (std::abs(ta - tb) > 1e-12 * std::max(ta, tb)) {
    throw Error(Errc::invalid_argument,
                "scenario: detectors must share the same switching width");
  }
  if (!(field_mass >= 0.0) || !std::isfinite(field_mass)) {
    throw Error(Errc::invalid_argument, "scenario: field mass must be >= 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(Errc::invalid_argument, "scenario: regulator epsilon must be positive");
  }
}

bool Scenario::equal_gaps() const {
  const double scale = std::max({std::abs(detector_a.gap), std::abs(detector_b.gap), 1e-300});
  return std::abs(detector_a.gap - detector_b.gap) <= 1e-12 * scale;
}

Scenario Scenario::swapped() const {
  Scenario s = *this;
  std::swap(s.detector_a, s.detector_b);
  return s;
}

Complex wightman_pointlike(double dt, double r, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::invalid_argument, "wightman: eps must be positive");
  const Complex dz(dt, -eps);
  return -1.0 / (4.0 * kPi * kPi) / (dz * dz - r * r);
}

double anticommutator_pointlike(double dt, double r) {
  const double scale = std::max({std::abs(dt), r, 1.0});
  if (std::abs(std::abs(dt) - r) <= 1e-10 * scale) {
    throw Error(Errc::on_light_cone,
                "anticommutator: pointwise value undefined on |dt| = r; integrate the "
                "principal value instead");
  }
  return -1.0 / (2.0 * kPi * kPi * (dt * dt - r * r));
}

LightConeCommutator commutator_lightcone(double r) {
  if (!(r > 0.0)) {
    throw Error(Errc::invalid_radius, "commutator: light-cone radius must be positive");
  }
  return {r, 1.0 / (4.0 * kPi * r)};
}

namespace {

class MinkowskiModeFamily final : public ModeFamily {
 public:
  explicit MinkowskiModeFamily(double mass) : mass_(mass) {}
  double omega(double kappa) const override {
    return std::sqrt(kappa * kappa + mass_ * mass_);
  }
  double state_density(double kappa) const override {
    return kappa * kappa / (2.0 * kPi * kPi);
  }
  double pair_profile(double kappa, double separation) const override {
    return sinc(kappa * separation);
  }

 private:
  double mass_;
};

}  // namespace

std::shared_ptr<const ModeFamily> minkowski_mode_family(double mass) {
  if (!(mass >= 0.0)) throw Error(Errc::invalid_argument, "mode family: mass must be >= 0");
  return std::make_shared<MinkowskiModeFamily>(mass);
}

QuadratureResult wightman_from_modes(const ModeFamily& family, double dt, double r,
                                     double eps, const Tolerance& tol) {
  auto integrand = [&](double kappa) -> Complex {
    const double w = family.omega(kappa);
    if (w <= 0.0) return {0.0, 0.0};
    const double amp = family.state_density(kappa) / (2.0 * w) *
                       family.pair_profile(kappa, r) * std::exp(-eps * w);
    return amp * Complex(std::cos(w * dt), -std::sin(w * dt));
  };
  const double osc = 2.0 * kPi / (std::abs(dt) + r + eps);
  return quad::integrate_semi_infinite_oscillatory(integrand, osc, tol);
}

}  // namespace udwh::model
