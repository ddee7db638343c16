// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_PAW_HPP_
#define SBHCLOCK_PAW_HPP_

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sbhclock/gcs.hpp"
#include "sbhclock/su11.hpp"
#include "sbhclock/types.hpp"

namespace sbhclock {
namespace paw {

/// Clock-plus-rest composite.  The global generator is
///   H_total = kron(I, H_xi) - kron(H_gamma, I)
/// on the flattened basis index g * d_xi + x.  Physical states live in its
/// kernel: evolution of the rest factor is read against the clock factor
/// rather than an external time.
struct BipartiteSystem {
  Eigen::MatrixXcd H_gamma;
  Eigen::MatrixXcd H_xi;
  Eigen::MatrixXcd H_total;
  int d_gamma = 0;
  int d_xi = 0;
};

/// Validates hermiticity of both inputs and assembles H_total.
BipartiteSystem build_composite(const Eigen::MatrixXcd& H_gamma,
                                const Eigen::MatrixXcd& H_xi);

/// Normalized vector on the composite space, index g * d_xi + x.
struct GlobalState {
  Eigen::VectorXcd amps;
  int d_gamma = 0;
  int d_xi = 0;
};

/// Orthonormal basis of the numerical kernel: eigenvectors of H_total with
/// |eigenvalue| <= tol.  Kernel dimension equals the number of coincidences
/// between the two spectra.
std::vector<GlobalState> kernel_states(const BipartiteSystem& sys, double tol);

/// ||H_total psi||, the constraint violation of a candidate state.
double constraint_residual(const BipartiteSystem& sys, const GlobalState& psi);

/// One Schmidt term; the state reconstructs as
///   psi_{g,x} = sum_k coeff_k gamma_vec_k(g) xi_vec_k(x).
struct SchmidtTerm {
  double coeff;
  Eigen::VectorXcd gamma_vec;
  Eigen::VectorXcd xi_vec;
};

/// Schmidt decomposition via SVD of the d_gamma x d_xi reshape; coefficients
/// descending, terms below 1e-14 * max dropped.
std::vector<SchmidtTerm> schmidt_decompose(const GlobalState& psi);

/// Pairing amplitude z = sum_{g,x} conj(gamma_g) conj(c_x) psi_{g,x}, the
/// coefficient of the product gamma (x) |xi> inside psi.
Complex amplitude(const GlobalState& psi, const Eigen::VectorXcd& gamma_vec,
                  const gcs::CoherentState& xi_state);

/// Clock reading carried by a disk point: t = v / J, E = J * w.
struct ClockPoint {
  double t;
  double E;
};
ClockPoint clock_coordinates(DiskPoint xi, double J);

/// Coherent family swept by the internal flow: v(t) = v0 + (J/K) t at
/// constant w.  This is the exact orbit of the coherent manifold under the
/// generator built by build_H_xi, up to a global phase.
std::vector<std::pair<double, DiskPoint>> clock_family(
    DiskPoint xi0, double J, double K, const std::vector<double>& ts);

struct FidelitySample {
  double t;
  double fidelity;
  double norm;   ///< norm of the unnormalized conditional vector
  bool defined;  ///< false when the conditional norm is negligible
};

/// Conditions psi on the clock pointing at xi(t) and compares the resulting
/// rest-factor state against reference evolution exp(-i H_ref t) applied to
/// the t = 0 conditional state.  fidelity = |<ref(t)|cond(t)>|^2 after
/// normalization.
std::vector<FidelitySample> conditional_evolution(
    const GlobalState& psi, const su11::Su11Rep& rep,
    const Eigen::MatrixXcd& H_ref, DiskPoint xi_ref,
    const std::vector<std::pair<double, DiskPoint>>& family);

/// |z|^2 over a (q, t) grid.  Rows follow q_grid, columns t_grid.  A cell is
/// marked when its weight exceeds the (absolute) threshold; a threshold above
/// max_weight leaves the grid unmarked.  For product states the weight matrix
/// is an outer product (rank one), so thresholds that separate its scales
/// mark a Cartesian product of rows and columns.
struct SupportGrid {
  std::vector<double> t_grid;
  std::vector<double> q_grid;
  Eigen::MatrixXd weights;
  std::vector<std::vector<bool>> marked;
  double max_weight = 0.0;
};

/// Association rules: a grid time t selects the coherent label at
/// (v, w) = (J t, E / J) with E the rest-factor energy of psi; a grid
/// position q selects the H_gamma eigenvector whose eigenvalue is nearest
/// m * accel * q.
SupportGrid spacetime_support(const BipartiteSystem& sys,
                              const GlobalState& psi,
                              const su11::Su11Rep& rep,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& q_grid,
                              double threshold, double m, double accel);

/// Resonant qubit demo: the clock factor is a truncated weight-K ladder, the
/// rest factor a qubit whose two levels are tuned to the two clock
/// eigenvalues with the largest coherent weight at xi0.  psi is the balanced
/// superposition of the two matched product states, an exact kernel state
/// with Schmidt rank 2.
struct ResonantDemo {
  BipartiteSystem sys;
  GlobalState psi;
  su11::Su11Rep rep;
  DiskPoint xi0;
  int match_count = 0;
  std::vector<int> matched_levels;  ///< clock eigenvalue indices, ascending
};

ResonantDemo build_resonant_demo(double K, int d_xi, double J, DiskPoint xi0);

}  // namespace paw
}  // namespace sbhclock

#endif  // SBHCLOCK_PAW_HPP_
