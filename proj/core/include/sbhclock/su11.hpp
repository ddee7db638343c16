// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_SU11_HPP_
#define SBHCLOCK_SU11_HPP_

#include <Eigen/Dense>

#include "sbhclock/types.hpp"

namespace sbhclock {
namespace su11 {

/// Truncated matrix representation of the rescaled su(1,1) ladder algebra on
/// the weight basis |K,m>, m = 0..cutoff.  Generators are the standard
/// discrete-series ones divided by the weight K, so matrix elements stay O(1)
/// as K grows:
///
///   k0 |K,m>     = (1 + m/K) |K,m>
///   kplus |K,m>  = (1/K) sqrt((m+1)(2K+m))   |K,m+1>
///   kminus |K,m> = (1/K) sqrt(m (2K+m-1))    |K,m-1>
///
/// kminus is the adjoint of kplus.  Truncation corrupts products only near
/// the top index; the interior block (indices 0..cutoff-2) satisfies
///
///   [kplus, kminus] = -(2/K) k0
///   [k0, kplus]     = +(1/K) kplus
///   [k0, kminus]    = -(1/K) kminus
///   k0^2 - (kplus kminus + kminus kplus)/2 = ((K-1)/K) I
///
/// to rounding accuracy.
struct Su11Rep {
  double K = 0.0;       ///< weight, K >= 1/2
  int cutoff = 0;       ///< highest retained basis index, >= 2
  double J = 1.0;       ///< coupling energy used by build_H_xi
  Eigen::MatrixXcd k0;
  Eigen::MatrixXcd kplus;
  Eigen::MatrixXcd kminus;

  int dim() const { return cutoff + 1; }
};

/// Generator built from the rescaled algebra,
///   H = J [ k0 - (i/2)(kplus - kminus) ],
/// Hermitian by construction.  Its expectation on a coherent state equals
/// J * w in half-plane coordinates.
struct HamiltonianXi {
  Eigen::MatrixXcd matrix;
  double J = 0.0;
};

/// Builds the truncated representation.  K >= 1/2, cutoff >= 2, J > 0.
Su11Rep build_rep(double K, int cutoff, double J = 1.0);

/// Max absolute elementwise deviation of the three commutators from their
/// algebra targets, restricted to the interior block (indices 0..cutoff-2).
double commutator_residual(const Su11Rep& rep);

/// Full matrix of the rescaled Casimir k0^2 - (kplus kminus + kminus kplus)/2.
/// Interior diagonal equals (K-1)/K; the top rows carry truncation artifacts.
Eigen::MatrixXcd casimir_matrix(const Su11Rep& rep);

/// Builds H with an explicit coupling J > 0.
HamiltonianXi build_H_xi(const Su11Rep& rep, double J);

/// Builds H with the coupling stored in the representation.
HamiltonianXi build_H_xi(const Su11Rep& rep);

}  // namespace su11
}  // namespace sbhclock

#endif  // SBHCLOCK_SU11_HPP_
