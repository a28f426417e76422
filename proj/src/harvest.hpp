// Leading-order two-detector density-matrix blocks for the Minkowski
// vacuum. Fast paths: the cross-correlation term L_IJ as a single radial
// mode integral, the non-signalling entangling part M+ through the
// flipped-gap identity M+ = -1/2 (L_AB[W_A,-W_B] + L_BA[W_B,-W_A]) and its
// Dawson closed form, and the light-cone part M- collapsed against the
// massless commutator. Oracles: regulated 2D time quadrature of the same
// defining integrals, extrapolated in the regulator. The two routes share
// no numerics and cross-validate each other.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "model.hpp"
#include "quad.hpp"
#include "types.hpp"

namespace udwh::harvest {

using model::Detector;
using model::Scenario;

// Regulator ladder diagnostics for the extrapolated oracles.
struct RegulatorLadder {
  std::array<double, 3> eps{};      // 4e, 2e, e
  std::array<Complex, 3> values{};  // raw quadrature value at each regulator
  std::array<Complex, 2> extrapolants{};
  std::array<long long, 3> evaluations{};
};

// Mutual-information-type term
//   L_IJ = l_i l_j Int dt dt' chi_i(t) chi_j(t') e^{i g_i t - i g_j t'} W(t'-t, L_ij)
// as one semi-infinite mode integral (Gaussian switching transforms in
// closed form). Explicit gap overrides enable the flipped-gap evaluations.
QuadratureResult lij_mode(const Scenario& s, const Detector& di, const Detector& dj,
                          double gap_i, double gap_j, const Tolerance& tol);

// Same quantity from the regulated kernel: unordered 2D time quadrature,
// linearly extrapolated in the regulator. Pointlike massless only.
QuadratureResult lij_oracle(const Scenario& s, const Detector& di, const Detector& dj,
                            double gap_i, double gap_j, const Tolerance& tol,
                            RegulatorLadder* ladder = nullptr);

// M+ through the flipped-gap identity (two mode integrals).
QuadratureResult m_plus_identity(const Scenario& s, const Tolerance& tol);

// M+ closed form (equal gaps, massless):
//   -l_a l_b e^{-a^2/2} [G(b-g) + G(b+g)] / (8 sqrt(2 pi) b sqrt(1+s^2)),
// G(u) = exp(-u^2/(2(1+s^2))) erfi(u / sqrt(2(1+s^2))) via the Dawson
// function, s^2 the combined dimensionless smearing variance, and the
// global phase e^{i W (t_a + t_b)} carried explicitly. b -> 0 is the
// analytic coincidence limit.
QuadratureResult m_plus_closed(const Scenario& s);

// M- closed form (pointlike, equal gaps, massless):
//   +i l_a l_b e^{-a^2/2} (e^{-(b+g)^2/2} + e^{-(b-g)^2/2}) / (8 sqrt(2 pi) b).
QuadratureResult m_minus_closed(const Scenario& s);

// M- by quadrature. Pointlike: the light-cone deltas collapse the ordering
// sign and one time integral, leaving a single Gaussian-weighted time
// integral. Smeared: the two 3D smearing integrals reduce analytically
// (Gaussian convolution, then radial reduction) to a 2D (time, relative
// radius) integral.
QuadratureResult m_minus_integral(const Scenario& s, const Tolerance& tol);

// Direct time-ordered oracle for the full entangling term M: 2D quadrature
// of the symmetrised switching product against the regulated Wightman
// kernel over t' < t, with the light cone kept on cell edges, extrapolated
// in the regulator. Pointlike massless only.
QuadratureResult m_oracle(const Scenario& s, const Tolerance& tol,
                          RegulatorLadder* ladder = nullptr);

// Reference curve: |sqrt(2/pi) Int dk sin(b k) e^{-k^2/2} (E(k,g)+E(k,-g))|
// with E(k,g) = e^{i g k} erfc((g + i k)/sqrt(2)), evaluated through
// Faddeeva w so every factor stays bounded. The complex variant is exposed
// for tests; the reference value is its modulus.
QuadratureResult e_integral_complex(double beta, double gamma, const Tolerance& tol);
QuadratureResult e_integral_reference(double beta, double gamma, const Tolerance& tol);

enum class Method { closed, identity, oracle };
const char* method_name(Method m);

struct Entry {
  Complex value{0.0, 0.0};  // normalized per unit coupling product
  double error_estimate = 0.0;
  long long evaluations = 0;
  Status status = Status::ok;
  std::string method;
};

// All blocks normalized: l_aa per l_a^2, l_bb per l_b^2, the rest per
// l_a l_b. m_total is assembled as m_plus + m_minus exactly.
struct DensityMatrixBlocks {
  Entry l_aa, l_bb, l_ab, m_plus, m_minus, m_total;
  bool perturbativity_warning = false;
};

DensityMatrixBlocks compute_blocks(const Scenario& s, Method method, const Tolerance& tol);

// Physical two-detector state in the basis |gg>, |eg>, |ge>, |ee>
// (row-major 4x4). Trace 1 and Hermiticity hold by construction.
std::array<Complex, 16> assemble_rho(const Scenario& s, const DensityMatrixBlocks& blocks);

// Absolute sum of the negative eigenvalues of the partial transpose over
// detector B.
double negativity(const std::array<Complex, 16>& rho);

// Figure normalization: M divided by l_a l_b e^{-a^2/2} / (8 sqrt(2 pi) b),
// with the mean gap used when the gaps differ. m_norm is a normalized block.
Complex m_scaled(const Scenario& s, Complex m_norm);

struct CompareRow {
  std::string quantity;
  Complex fast{0.0, 0.0};
  Complex oracle{0.0, 0.0};
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  long long evaluations_fast = 0;
  long long evaluations_oracle = 0;
  double wall_fast_s = 0.0;
  double wall_oracle_s = 0.0;
  Status status_fast = Status::ok;
  Status status_oracle = Status::ok;
};

struct ComparisonReport {
  std::vector<CompareRow> rows;  // M first, then L_AA, L_AB
  RegulatorLadder m_ladder;
  double evaluation_ratio = 0.0;  // oracle / fast for M
  double speedup = 0.0;           // oracle wall time / fast wall time for M
};

// Fast path and oracles at matched target accuracy; deviations are computed
// from the stored values.
ComparisonReport compare_methods(const Scenario& s, double target_rel);

}  // namespace udwh::harvest
