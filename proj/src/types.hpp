// Shared value types and the error vocabulary used across the library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace udwh {

using Complex = std::complex<double>;

// Outcome of a numerical routine that may stop short of its tolerance.
enum class Status {
  ok,
  budget_exhausted,        // max_evaluations hit; value is the best estimate
  non_decaying,            // oscillatory tail failed to shrink
  extrapolation_unstable,  // regulator ladder estimates disagree
};

struct Tolerance {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  long long max_evaluations = 2'000'000;
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;  // reported alongside value, never dropped
  long long evaluations = 0;
  Status status = Status::ok;

  bool ok() const { return status == Status::ok; }
};

enum class Errc {
  invalid_argument,
  unknown_key,
  unsupported_scenario,
  overflow_range,
  on_light_cone,
  invalid_radius,
  budget_exhausted,
  extrapolation_unstable,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace udwh
