// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_GCS_HPP_
#define SBHCLOCK_GCS_HPP_

#include <vector>

#include <Eigen/Dense>

#include "sbhclock/su11.hpp"
#include "sbhclock/types.hpp"

namespace sbhclock {
namespace gcs {

/// Coherent state of weight K labeled by a disk point, expanded on the weight
/// basis of a truncated representation:
///
///   c_m = (1 - |xi|^2)^K sqrt(Gamma(2K+m) / (m! Gamma(2K))) xi^m
///
/// Coefficients are evaluated through lgamma so large K and large m do not
/// overflow.  The retained norm satisfies 1 - tail_tol <= |c|^2 <= 1.
struct CoherentState {
  double K = 0.0;
  DiskPoint xi;
  Eigen::VectorXcd coeffs;
};

/// Smallest cutoff M such that keeping coefficients 0 .. M-1 leaves a
/// discarded weight sum_{m >= M} |c_m|^2 <= tail_tol.  Uses the monotone
/// term-ratio bound tail <= |c_m|^2 rho / (1 - rho) with
/// rho = lambda (2K+m)/(m+1) < 1.
int min_cutoff_for_tail(double abs_xi, double K, double tail_tol);

/// Expands |xi> on rep's basis.  Throws TruncationError (carrying the
/// required coefficient count) if rep's dimension is too small for tail_tol.
CoherentState coherent_state(const su11::Su11Rep& rep, DiskPoint xi,
                             double tail_tol = 1e-12);

/// Closed-form overlap <xi1|xi2> of weight-K coherent states,
///   [(1-|xi1|^2)(1-|xi2|^2)]^K / (1 - conj(xi1) xi2)^(2K),
/// principal branch; the base has positive real part on the disk, so the
/// branch is never crossed.
Complex overlap(DiskPoint xi1, DiskPoint xi2, double K);

/// Conformal chart change, disk to upper half plane:
///   v = 2x / (x^2 + (1-y)^2),  w = (x^2 + (1-y)^2) / (1 - |xi|^2)
/// with xi = x + i y.
HalfPlanePoint disk_to_halfplane(DiskPoint xi);

/// Inverse chart change: xi = i (u - 1) / (u + 1) with u = 1/w - i v.
DiskPoint halfplane_to_disk(HalfPlanePoint p);

/// Expectations of the rescaled generators on |xi>.  K-independent:
///   <k0> = (1+lambda)/(1-lambda), <kminus> = 2 xi/(1-lambda),
///   <kplus> = conj(<kminus>), lambda = |xi|^2.
/// They satisfy <k0>^2 - |<kminus>|^2 = 1 (upper hyperboloid sheet).
struct GeneratorExpectation {
  double k0;
  Complex kplus;
  Complex kminus;
};
GeneratorExpectation expect_generators(DiskPoint xi);

/// Coherent expectation of H: exactly J * w of the half-plane image.
double classical_energy(DiskPoint xi, double J);

/// Ordinary least squares line fit, y ~ intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// One row of the overlap decay scan.
struct OverlapDecayRow {
  double K;
  Complex value;
  double abs_value;
  double log_abs;
};

/// |<xi1|xi2>| as a function of K, rows in input order.  log|overlap| is
/// exactly linear in K; see overlap_log_slope for the closed-form slope.
std::vector<OverlapDecayRow> overlap_decay_scan(DiskPoint xi1, DiskPoint xi2,
                                                const std::vector<double>& Ks);

/// d log|<xi1|xi2>| / dK = log[(1-|xi1|^2)(1-|xi2|^2) / |1-conj(xi1)xi2|^2].
double overlap_log_slope(DiskPoint xi1, DiskPoint xi2);

/// One row of the energy fluctuation scan.  ratio = stddev / mean.
struct FluctuationRow {
  double K;
  double mean;
  double stddev;
  double ratio;
};

/// Mean and spread of H on |xi> versus K at fixed xi.  The mean is
/// K-independent (= J w); the relative spread decays as 1/sqrt(K).
std::vector<FluctuationRow> energy_fluctuation_scan(
    DiskPoint xi, double J, const std::vector<double>& Ks,
    double tail_tol = 1e-12);

/// Quadrature controls for identity_resolution_residual.  Level k of the
/// refinement ladder doubles both orders k times; the result is converged
/// when two consecutive levels agree to refine_tol.  max_refine = 0 means a
/// single evaluation that is always flagged unconverged.
struct QuadSpec {
  int radial_order = 48;
  int angular_order = 64;
  int max_refine = 5;
  double refine_tol = 1e-10;
};

struct QuadResult {
  double residual = 0.0;  ///< max over probes of |integral - 1|
  bool converged = false;
  int radial_order_used = 0;
  int angular_order_used = 0;
};

/// Checks the resolution of the identity numerically: integrates
/// |<xi|xi0>|^2 against the invariant measure
///   dmu = ((2K-1)/pi) d^2xi / (1-|xi|^2)^2
/// for each probe xi0 and reports the worst deviation from 1.  The radial
/// direction uses Gauss-Jacobi nodes in rho = |xi|^2 with the exact weight
/// (1-rho)^(2K-2), the angular direction the periodic trapezoid rule, so the
/// integrand handed to the rule is analytic and convergence is spectral for
/// every K > 1/2.  K <= 1/2 has no normalizable measure and throws
/// UnsupportedMeasureError.
QuadResult identity_resolution_residual(double K,
                                        const std::vector<DiskPoint>& probes,
                                        const QuadSpec& spec = {});

}  // namespace gcs
}  // namespace sbhclock

#endif  // SBHCLOCK_GCS_HPP_
