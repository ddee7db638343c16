// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/su11.hpp"

#include <cmath>
#include <string>

namespace sbhclock {
namespace su11 {

namespace {

void check_rep_params(double K, int cutoff, double J) {
  if (!(K >= 0.5) || !std::isfinite(K)) {
    throw ParameterError("build_rep: K must be >= 1/2, got " + std::to_string(K));
  }
  if (cutoff < 2) {
    throw ParameterError("build_rep: cutoff must be >= 2, got " +
                         std::to_string(cutoff));
  }
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw ParameterError("build_rep: J must be > 0, got " + std::to_string(J));
  }
}

}  // namespace

Su11Rep build_rep(double K, int cutoff, double J) {
  check_rep_params(K, cutoff, J);
  const int d = cutoff + 1;
  Su11Rep rep;
  rep.K = K;
  rep.cutoff = cutoff;
  rep.J = J;
  rep.k0 = Eigen::MatrixXcd::Zero(d, d);
  rep.kplus = Eigen::MatrixXcd::Zero(d, d);
  rep.kminus = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    rep.k0(m, m) = 1.0 + static_cast<double>(m) / K;
  }
  for (int m = 0; m + 1 < d; ++m) {
    const double amp = std::sqrt((m + 1.0) * (2.0 * K + m)) / K;
    rep.kplus(m + 1, m) = amp;
    rep.kminus(m, m + 1) = amp;
  }
  return rep;
}

double commutator_residual(const Su11Rep& rep) {
  const double K = rep.K;
  const int ni = rep.cutoff - 1;  // interior block is 0..cutoff-2
  auto interior = [ni](const Eigen::MatrixXcd& m) {
    return m.topLeftCorner(ni, ni);
  };
  const Eigen::MatrixXcd c1 = rep.kplus * rep.kminus - rep.kminus * rep.kplus +
                              (2.0 / K) * rep.k0;
  const Eigen::MatrixXcd c2 =
      rep.k0 * rep.kplus - rep.kplus * rep.k0 - (1.0 / K) * rep.kplus;
  const Eigen::MatrixXcd c3 =
      rep.k0 * rep.kminus - rep.kminus * rep.k0 + (1.0 / K) * rep.kminus;
  double r = interior(c1).cwiseAbs().maxCoeff();
  r = std::max(r, interior(c2).cwiseAbs().maxCoeff());
  r = std::max(r, interior(c3).cwiseAbs().maxCoeff());
  return r;
}

Eigen::MatrixXcd casimir_matrix(const Su11Rep& rep) {
  return rep.k0 * rep.k0 -
         0.5 * (rep.kplus * rep.kminus + rep.kminus * rep.kplus);
}

HamiltonianXi build_H_xi(const Su11Rep& rep, double J) {
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw ParameterError("build_H_xi: J must be > 0, got " + std::to_string(J));
  }
  const Complex half_i(0.0, 0.5);
  HamiltonianXi h;
  h.J = J;
  h.matrix = J * (rep.k0 - half_i * (rep.kplus - rep.kminus));
  return h;
}

HamiltonianXi build_H_xi(const Su11Rep& rep) { return build_H_xi(rep, rep.J); }

}  // namespace su11
}  // namespace sbhclock
