// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_TWOMODE_HPP_
#define SBHCLOCK_TWOMODE_HPP_

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "sbhclock/types.hpp"

namespace sbhclock {
namespace twomode {

/// Configuration of the two-mode realization: n_pairs identical mode pairs
/// share the total coupling J, so each pair carries J / n_pairs.  The
/// equivalent collective weight is n_pairs / 2.
struct TwoModeConfig {
  int n_pairs = 1;
  double J = 1.0;
  int n_cut = -1;          ///< per-mode cutoff; -1 derives it from tail_tol
  double tail_tol = 1e-12;

  double coupling_per_pair() const { return J / n_pairs; }
  double equivalent_weight() const { return 0.5 * n_pairs; }
  void validate() const;
};

/// Single-pair generator on the product basis |n_a, n_b>, n_a,b <= n_cut,
/// flattened as n_a * (n_cut+1) + n_b:
///   H = (J/N) [ 1 + n_a + n_b - i (adag bdag - a b) ].
/// At most three nonzeros per row, hence sparse storage.
Eigen::SparseMatrix<Complex> pair_hamiltonian(const TwoModeConfig& cfg,
                                              int n_cut);

/// Pair-correlated squeezed state sqrt(1-lambda) sum_n xi^n |n,n> on the
/// flattened product basis.
struct TwoModePairState {
  DiskPoint xi;
  int n_cut = 0;
  Eigen::VectorXcd joint;
};

TwoModePairState two_mode_squeezed(DiskPoint xi, const TwoModeConfig& cfg);

/// <state|H|state> through the sparse matrix; equals (J/N) * w exactly.
double pair_energy(const TwoModePairState& state, const TwoModeConfig& cfg);

enum class ThermalStatus {
  ok,
  zero_temperature,        ///< xi = 0: pure ground state, T = 0
  nonpositive_frequency,   ///< numerical guard; empty region on the open disk
};

/// Reduced single-mode description.  The occupation distribution is exactly
/// geometric, p_n = (1-lambda) lambda^n with lambda = |xi|^2.
struct ThermalState {
  Eigen::VectorXd probs;      ///< truncated diagonal of the reduced state
  double max_offdiag = 0.0;   ///< largest |off-diagonal|; structurally zero
  double lambda = 0.0;
  double Z0 = 0.0;            ///< 1 / (1 - lambda)
  double purity = 0.0;        ///< (1 - lambda) / (1 + lambda)
  double omega = 0.0;         ///< filled by thermal_report
  double T = 0.0;             ///< filled by thermal_report
  double entropy = 0.0;       ///< filled by thermal_report
  ThermalStatus status = ThermalStatus::ok;
};

/// Partial trace over the partner mode.  omega, T, entropy are left at zero;
/// use thermal_report for the full record.
ThermalState reduce_to_R(const TwoModePairState& state);

/// Effective frequency omega = (J/N)(1 - 2 Im(xi) / (1 + lambda)).  Positive
/// everywhere on the open disk; the guard status exists for rounding only.
double effective_frequency(DiskPoint xi, const TwoModeConfig& cfg);

struct TemperatureResult {
  double T = 0.0;
  ThermalStatus status = ThermalStatus::ok;
};

/// T = omega / ln(1/lambda); the Gibbs weight then satisfies
/// exp(-omega/T) = lambda identically.
TemperatureResult effective_temperature(DiskPoint xi, const TwoModeConfig& cfg);

/// Relative deviation of omega N coth(omega / 2T) from J w.  Zero up to
/// rounding for every disk point.
double energy_split_residual(DiskPoint xi, const TwoModeConfig& cfg);

/// Von Neumann entropy of the reduced state (closed form, dimensionless):
///   S = -ln(1-lambda) - lambda ln(lambda) / (1-lambda).
double entropy_of_R(DiskPoint xi);

/// Builds the squeezed state, reduces it, and fills every thermal quantity.
ThermalState thermal_report(DiskPoint xi, const TwoModeConfig& cfg);

enum class IsothermPointStatus { converged, no_solution };

/// One ray of the isotherm scan: smallest radius on the ray at angle
/// angle_deg whose effective temperature equals T_target.
struct IsothermPoint {
  double angle_deg = 0.0;
  Complex xi{0.0, 0.0};
  double T = 0.0;
  double residual = 0.0;   ///< relative |T(xi) - T_target| / T_target
  IsothermPointStatus status = IsothermPointStatus::no_solution;
};

/// Solves T(r e^{i angle}) = T_target per ray by bracketing the first sign
/// change outward from r = 0 and bisecting to relative radius tolerance
/// 1e-12.  Rays whose temperature stays below T_target (the upward vertical
/// ray has a bounded maximum) report no_solution.
std::vector<IsothermPoint> microstate_isotherm(
    double T_target, const TwoModeConfig& cfg,
    const std::vector<double>& angles_deg);

}  // namespace twomode
}  // namespace sbhclock

#endif  // SBHCLOCK_TWOMODE_HPP_
