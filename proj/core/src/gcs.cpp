// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/gcs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sbhclock {
namespace gcs {

namespace {

constexpr double kPi = std::numbers::pi;

void check_weight(double K, const char* where) {
  if (!(K >= 0.5) || !std::isfinite(K)) {
    throw ParameterError(std::string(where) + ": K must be >= 1/2, got " +
                         std::to_string(K));
  }
}

// Gauss-Jacobi rule on [-1,1] with weight (1-x)^alpha, alpha > -1, via the
// Golub-Welsch tridiagonal eigenproblem for the monic Jacobi recurrence.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussRule gauss_jacobi(int n, double alpha) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  T(0, 0) = -alpha / (alpha + 2.0);
  for (int i = 1; i < n; ++i) {
    const double s = 2.0 * i + alpha;
    T(i, i) = -alpha * alpha / (s * (s + 2.0));
    const double b = 4.0 * i * i * (i + alpha) * (i + alpha) /
                     (s * s * (s + 1.0) * (s - 1.0));
    T(i, i - 1) = T(i - 1, i) = std::sqrt(b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success) {
    throw NumericalError("gauss_jacobi: eigensolver failed");
  }
  const double mu0 = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
  GaussRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = mu0 * es.eigenvectors().row(0).cwiseAbs2().transpose();
  return rule;
}

}  // namespace

int min_cutoff_for_tail(double abs_xi, double K, double tail_tol) {
  check_weight(K, "min_cutoff_for_tail");
  if (!(abs_xi >= 0.0) || !(abs_xi < 1.0)) {
    throw DomainError("min_cutoff_for_tail: need 0 <= |xi| < 1, got " +
                      std::to_string(abs_xi));
  }
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0)) {
    throw ParameterError("min_cutoff_for_tail: tail_tol must be in (0,1), got " +
                         std::to_string(tail_tol));
  }
  const double lambda = abs_xi * abs_xi;
  if (lambda == 0.0) return 1;
  // term = |c_m|^2; the ratio lambda(2K+m)/(m+1) decreases in m for K >= 1/2,
  // so once it drops below 1 the tail is bounded by a geometric series.  The
  // bound at index m covers the discarded weight of indices > m, so m + 1
  // coefficients must be kept.
  double term = std::exp(2.0 * K * std::log1p(-lambda));
  constexpr int kHardCap = 50'000'000;
  for (int m = 0; m < kHardCap; ++m) {
    const double ratio = lambda * (2.0 * K + m) / (m + 1.0);
    if (ratio < 1.0) {
      const double bound = term * ratio / (1.0 - ratio);
      if (bound <= tail_tol) return m + 1;
    }
    term *= ratio;
  }
  throw TruncationError("min_cutoff_for_tail: no admissible cutoff below cap",
                        kHardCap);
}

CoherentState coherent_state(const su11::Su11Rep& rep, DiskPoint xi,
                             double tail_tol) {
  if (!(tail_tol > 0.0) || !(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw ParameterError("coherent_state: tail_tol must be in (0, 1e-6], got " +
                         std::to_string(tail_tol));
  }
  const double K = rep.K;
  const double abs_xi = std::abs(xi.value());
  const int required = min_cutoff_for_tail(abs_xi, K, tail_tol);
  if (required > rep.dim()) {
    throw TruncationError(
        "coherent_state: dimension " + std::to_string(rep.dim()) +
            " too small for tail_tol " + std::to_string(tail_tol) +
            " at |xi| = " + std::to_string(abs_xi) + ", need >= " +
            std::to_string(required),
        required);
  }
  CoherentState state;
  state.K = K;
  state.xi = xi;
  state.coeffs = Eigen::VectorXcd::Zero(rep.dim());
  const double lambda = abs_xi * abs_xi;
  const double log_norm = K * std::log1p(-lambda);
  const double lg2K = std::lgamma(2.0 * K);
  if (abs_xi == 0.0) {
    state.coeffs(0) = std::exp(log_norm);  // = 1
    return state;
  }
  const double theta = std::arg(xi.value());
  const double log_abs_xi = std::log(abs_xi);
  for (int m = 0; m < rep.dim(); ++m) {
    const double log_mag =
        log_norm +
        0.5 * (std::lgamma(2.0 * K + m) - std::lgamma(m + 1.0) - lg2K) +
        m * log_abs_xi;
    state.coeffs(m) = std::polar(std::exp(log_mag), m * theta);
  }
  return state;
}

Complex overlap(DiskPoint xi1, DiskPoint xi2, double K) {
  check_weight(K, "overlap");
  const double l1 = xi1.abs2();
  const double l2 = xi2.abs2();
  const Complex base = 1.0 - std::conj(xi1.value()) * xi2.value();
  // Re(base) > 0 on the open disk, so the principal log is smooth here.
  const double log_mag = K * (std::log1p(-l1) + std::log1p(-l2));
  return std::exp(Complex(log_mag, 0.0) - 2.0 * K * std::log(base));
}

HalfPlanePoint disk_to_halfplane(DiskPoint xi) {
  const double x = xi.value().real();
  const double y = xi.value().imag();
  const double s = x * x + (1.0 - y) * (1.0 - y);  // |i - xi|^2 > 0 on the disk
  const double v = 2.0 * x / s;
  const double w = s / (1.0 - xi.abs2());
  return HalfPlanePoint(v, w);
}

DiskPoint halfplane_to_disk(HalfPlanePoint p) {
  const Complex u = 1.0 / p.w() - Complex(0.0, 1.0) * p.v();
  const Complex xi = Complex(0.0, 1.0) * (u - 1.0) / (u + 1.0);
  // Round-off can push |xi| to 1 only in the w -> inf limit, which
  // HalfPlanePoint already excludes; construction re-checks the invariant.
  return DiskPoint(xi);
}

GeneratorExpectation expect_generators(DiskPoint xi) {
  const double lambda = xi.abs2();
  GeneratorExpectation e;
  e.k0 = (1.0 + lambda) / (1.0 - lambda);
  e.kminus = 2.0 * xi.value() / (1.0 - lambda);
  e.kplus = std::conj(e.kminus);
  return e;
}

double classical_energy(DiskPoint xi, double J) {
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw ParameterError("classical_energy: J must be > 0");
  }
  return J * disk_to_halfplane(xi).w();
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ParameterError("fit_line: need matching sizes >= 2");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw ParameterError("fit_line: abscissae are all equal");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

std::vector<OverlapDecayRow> overlap_decay_scan(DiskPoint xi1, DiskPoint xi2,
                                                const std::vector<double>& Ks) {
  if (Ks.empty()) {
    throw ParameterError("overlap_decay_scan: empty K list");
  }
  std::vector<OverlapDecayRow> rows;
  rows.reserve(Ks.size());
  for (double K : Ks) {
    OverlapDecayRow row;
    row.K = K;
    row.value = overlap(xi1, xi2, K);
    row.abs_value = std::abs(row.value);
    row.log_abs = std::log(row.abs_value);
    rows.push_back(row);
  }
  return rows;
}

double overlap_log_slope(DiskPoint xi1, DiskPoint xi2) {
  const Complex base = 1.0 - std::conj(xi1.value()) * xi2.value();
  return std::log1p(-xi1.abs2()) + std::log1p(-xi2.abs2()) -
         2.0 * std::log(std::abs(base));
}

std::vector<FluctuationRow> energy_fluctuation_scan(
    DiskPoint xi, double J, const std::vector<double>& Ks, double tail_tol) {
  if (Ks.empty()) {
    throw ParameterError("energy_fluctuation_scan: empty K list");
  }
  const double state_tol = std::min(tail_tol, 1e-13);
  std::vector<FluctuationRow> rows;
  rows.reserve(Ks.size());
  for (double K : Ks) {
    check_weight(K, "energy_fluctuation_scan");
    // +8 keeps <H^2> clean: H couples m to m +- 1 and the tail bound is for
    // the state alone.
    const int cutoff =
        min_cutoff_for_tail(std::abs(xi.value()), K, state_tol) + 8;
    const su11::Su11Rep rep = su11::build_rep(K, std::max(cutoff, 2), J);
    const CoherentState state = coherent_state(rep, xi, tail_tol);
    const Eigen::MatrixXcd H = su11::build_H_xi(rep, J).matrix;
    const Eigen::VectorXcd Hc = H * state.coeffs;
    const double mean = state.coeffs.dot(Hc).real();
    const double second = Hc.squaredNorm();
    const double var = std::max(second - mean * mean, 0.0);
    FluctuationRow row;
    row.K = K;
    row.mean = mean;
    row.stddev = std::sqrt(var);
    row.ratio = row.stddev / row.mean;
    rows.push_back(row);
  }
  return rows;
}

namespace {

// One full tensor evaluation of the resolution integral for a single probe.
double identity_integral(double K, const DiskPoint& probe, int n_rad,
                         int n_ang) {
  const double alpha = 2.0 * K - 2.0;
  const GaussRule rule = gauss_jacobi(n_rad, alpha);
  const double lambda0 = probe.abs2();
  const Complex xi0c = std::conj(probe.value());
  // I = (2K-1) 2^{-(2K-1)} sum_i w_i A(rho_i), rho = (x+1)/2,
  // A(rho) = angular mean of [(1-lambda0)/|1 - conj(xi0) sqrt(rho) e^{i t}|^2]^{2K}.
  double acc = 0.0;
  for (int i = 0; i < n_rad; ++i) {
    const double rho = 0.5 * (rule.nodes(i) + 1.0);
    const double r = std::sqrt(std::clamp(rho, 0.0, 1.0));
    double ang = 0.0;
    for (int j = 0; j < n_ang; ++j) {
      const double t = 2.0 * kPi * j / n_ang;
      const Complex z = 1.0 - xi0c * std::polar(r, t);
      ang += std::exp(2.0 * K * (std::log1p(-lambda0) - std::log(std::norm(z))));
    }
    acc += rule.weights(i) * (ang / n_ang);
  }
  return (2.0 * K - 1.0) * std::exp2(-(2.0 * K - 1.0)) * acc;
}

}  // namespace

QuadResult identity_resolution_residual(double K,
                                        const std::vector<DiskPoint>& probes,
                                        const QuadSpec& spec) {
  if (!(K > 0.5) || !std::isfinite(K)) {
    throw UnsupportedMeasureError(
        "identity_resolution_residual: the invariant measure is normalizable "
        "only for K > 1/2, got K = " +
        std::to_string(K));
  }
  if (probes.empty()) {
    throw ParameterError("identity_resolution_residual: no probes");
  }
  if (spec.radial_order < 1 || spec.angular_order < 1 || spec.max_refine < 0) {
    throw ParameterError("identity_resolution_residual: bad quadrature spec");
  }
  QuadResult result;
  result.converged = true;
  for (const DiskPoint& probe : probes) {
    int n_rad = spec.radial_order;
    int n_ang = spec.angular_order;
    double value = identity_integral(K, probe, n_rad, n_ang);
    bool probe_converged = false;
    for (int level = 1; level <= spec.max_refine; ++level) {
      n_rad *= 2;
      n_ang *= 2;
      const double refined = identity_integral(K, probe, n_rad, n_ang);
      const bool settled = std::abs(refined - value) <= spec.refine_tol;
      value = refined;
      if (settled) {
        probe_converged = true;
        break;
      }
    }
    if (!std::isfinite(value)) {
      throw NumericalError("identity_resolution_residual: non-finite integral");
    }
    result.residual = std::max(result.residual, std::abs(value - 1.0));
    result.converged = result.converged && probe_converged;
    result.radial_order_used = std::max(result.radial_order_used, n_rad);
    result.angular_order_used = std::max(result.angular_order_used, n_ang);
  }
  return result;
}

}  // namespace gcs
}  // namespace sbhclock
