// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/paw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sbhclock {
namespace paw {

namespace {

void check_hermitian(const Eigen::MatrixXcd& H, const char* name) {
  if (H.rows() != H.cols() || H.rows() == 0) {
    throw ParameterError(std::string("build_composite: ") + name +
                         " must be square and nonempty");
  }
  const double scale = std::max(H.cwiseAbs().maxCoeff(), 1.0);
  const double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12 * scale) {
    throw ParameterError(std::string("build_composite: ") + name +
                         " is not Hermitian within tolerance");
  }
}

void check_state(const GlobalState& psi, const BipartiteSystem& sys,
                 const char* where) {
  if (psi.d_gamma != sys.d_gamma || psi.d_xi != sys.d_xi ||
      psi.amps.size() != static_cast<Eigen::Index>(psi.d_gamma) * psi.d_xi) {
    throw ParameterError(std::string(where) + ": state/system shape mismatch");
  }
}

}  // namespace

BipartiteSystem build_composite(const Eigen::MatrixXcd& H_gamma,
                                const Eigen::MatrixXcd& H_xi) {
  check_hermitian(H_gamma, "H_gamma");
  check_hermitian(H_xi, "H_xi");
  BipartiteSystem sys;
  sys.H_gamma = H_gamma;
  sys.H_xi = H_xi;
  sys.d_gamma = static_cast<int>(H_gamma.rows());
  sys.d_xi = static_cast<int>(H_xi.rows());
  const int d = sys.d_gamma * sys.d_xi;
  sys.H_total = Eigen::MatrixXcd::Zero(d, d);
  for (int g = 0; g < sys.d_gamma; ++g) {
    for (int gp = 0; gp < sys.d_gamma; ++gp) {
      const Complex hg = H_gamma(g, gp);
      auto block = sys.H_total.block(g * sys.d_xi, gp * sys.d_xi, sys.d_xi,
                                     sys.d_xi);
      if (g == gp) block += H_xi;
      if (hg != Complex(0.0, 0.0)) {
        block -= hg * Eigen::MatrixXcd::Identity(sys.d_xi, sys.d_xi);
      }
    }
  }
  return sys;
}

std::vector<GlobalState> kernel_states(const BipartiteSystem& sys,
                                       double tol) {
  if (!(tol > 0.0)) {
    throw ParameterError("kernel_states: tol must be > 0");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sys.H_total);
  if (es.info() != Eigen::Success) {
    throw NumericalError("kernel_states: eigensolver failed");
  }
  std::vector<GlobalState> kernel;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) <= tol) {
      GlobalState s;
      s.amps = es.eigenvectors().col(i);
      s.d_gamma = sys.d_gamma;
      s.d_xi = sys.d_xi;
      kernel.push_back(std::move(s));
    }
  }
  return kernel;
}

double constraint_residual(const BipartiteSystem& sys, const GlobalState& psi) {
  check_state(psi, sys, "constraint_residual");
  return (sys.H_total * psi.amps).norm();
}

std::vector<SchmidtTerm> schmidt_decompose(const GlobalState& psi) {
  if (psi.amps.size() !=
      static_cast<Eigen::Index>(psi.d_gamma) * psi.d_xi) {
    throw ParameterError("schmidt_decompose: inconsistent dimensions");
  }
  Eigen::MatrixXcd M(psi.d_gamma, psi.d_xi);
  for (int g = 0; g < psi.d_gamma; ++g) {
    for (int x = 0; x < psi.d_xi; ++x) {
      M(g, x) = psi.amps(g * psi.d_xi + x);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  std::vector<SchmidtTerm> terms;
  const double cut = 1e-14 * svd.singularValues()(0);
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()(k);
    if (s <= cut) break;
    SchmidtTerm term;
    term.coeff = s;
    term.gamma_vec = svd.matrixU().col(k);
    // M = U S V^dag, so psi_{g,x} = sum_k s_k U(g,k) conj(V(x,k)).
    term.xi_vec = svd.matrixV().col(k).conjugate();
    terms.push_back(std::move(term));
  }
  return terms;
}

Complex amplitude(const GlobalState& psi, const Eigen::VectorXcd& gamma_vec,
                  const gcs::CoherentState& xi_state) {
  if (gamma_vec.size() != psi.d_gamma ||
      xi_state.coeffs.size() != psi.d_xi) {
    throw ParameterError("amplitude: factor dimension mismatch");
  }
  Complex z(0.0, 0.0);
  for (int g = 0; g < psi.d_gamma; ++g) {
    Complex row(0.0, 0.0);
    for (int x = 0; x < psi.d_xi; ++x) {
      row += std::conj(xi_state.coeffs(x)) * psi.amps(g * psi.d_xi + x);
    }
    z += std::conj(gamma_vec(g)) * row;
  }
  return z;
}

ClockPoint clock_coordinates(DiskPoint xi, double J) {
  if (!(J > 0.0)) {
    throw ParameterError("clock_coordinates: J must be > 0");
  }
  const HalfPlanePoint hp = gcs::disk_to_halfplane(xi);
  return ClockPoint{hp.v() / J, J * hp.w()};
}

std::vector<std::pair<double, DiskPoint>> clock_family(
    DiskPoint xi0, double J, double K, const std::vector<double>& ts) {
  if (!(J > 0.0) || !(K >= 0.5)) {
    throw ParameterError("clock_family: need J > 0 and K >= 1/2");
  }
  const HalfPlanePoint hp0 = gcs::disk_to_halfplane(xi0);
  std::vector<std::pair<double, DiskPoint>> family;
  family.reserve(ts.size());
  for (double t : ts) {
    const HalfPlanePoint hp(hp0.v() + (J / K) * t, hp0.w());
    family.emplace_back(t, gcs::halfplane_to_disk(hp));
  }
  return family;
}

std::vector<FidelitySample> conditional_evolution(
    const GlobalState& psi, const su11::Su11Rep& rep,
    const Eigen::MatrixXcd& H_ref, DiskPoint xi_ref,
    const std::vector<std::pair<double, DiskPoint>>& family) {
  if (H_ref.rows() != psi.d_gamma || H_ref.cols() != psi.d_gamma) {
    throw ParameterError("conditional_evolution: H_ref dimension mismatch");
  }
  if (rep.dim() != psi.d_xi) {
    throw ParameterError("conditional_evolution: rep dimension mismatch");
  }
  constexpr double kNormFloor = 1e-12;
  constexpr double kCoherentTol = 1e-9;
  auto conditional = [&](DiskPoint xi) {
    const gcs::CoherentState cs = gcs::coherent_state(rep, xi, kCoherentTol);
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(psi.d_gamma);
    for (int g = 0; g < psi.d_gamma; ++g) {
      Complex acc(0.0, 0.0);
      for (int x = 0; x < psi.d_xi; ++x) {
        acc += std::conj(cs.coeffs(x)) * psi.amps(g * psi.d_xi + x);
      }
      phi(g) = acc;
    }
    return phi;
  };
  const Eigen::VectorXcd phi0 = conditional(xi_ref);
  if (phi0.norm() < kNormFloor) {
    throw NumericalError(
        "conditional_evolution: reference conditional state has negligible "
        "norm");
  }
  const Eigen::VectorXcd phi0_hat = phi0 / phi0.norm();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H_ref);
  if (es.info() != Eigen::Success) {
    throw NumericalError("conditional_evolution: H_ref eigensolver failed");
  }
  std::vector<FidelitySample> out;
  out.reserve(family.size());
  for (const auto& [t, xi] : family) {
    FidelitySample sample;
    sample.t = t;
    const Eigen::VectorXcd phi = conditional(xi);
    sample.norm = phi.norm();
    sample.defined = sample.norm >= kNormFloor;
    if (!sample.defined) {
      sample.fidelity = 0.0;
      out.push_back(sample);
      continue;
    }
    Eigen::VectorXcd ref = Eigen::VectorXcd::Zero(psi.d_gamma);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const Complex phase = std::polar(1.0, -es.eigenvalues()(k) * t);
      ref += phase * es.eigenvectors().col(k) *
             (es.eigenvectors().col(k).dot(phi0_hat));
    }
    const Complex ov = ref.dot(phi / sample.norm);
    sample.fidelity = std::norm(ov);
    out.push_back(sample);
  }
  return out;
}

SupportGrid spacetime_support(const BipartiteSystem& sys,
                              const GlobalState& psi,
                              const su11::Su11Rep& rep,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& q_grid,
                              double threshold, double m, double accel) {
  check_state(psi, sys, "spacetime_support");
  if (rep.dim() != psi.d_xi) {
    throw ParameterError("spacetime_support: rep dimension mismatch");
  }
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw ParameterError("spacetime_support: threshold must be > 0 and finite");
  }
  if (!(m > 0.0) || !(accel > 0.0)) {
    throw ParameterError("spacetime_support: m and accel must be > 0");
  }
  if (t_grid.empty() || q_grid.empty()) {
    throw ParameterError("spacetime_support: empty grid");
  }
  const double J = rep.J;
  // Rest-factor energy of psi sets the w level of every clock label.
  double E = 0.0;
  for (int g = 0; g < psi.d_gamma; ++g) {
    const auto seg = psi.amps.segment(g * psi.d_xi, psi.d_xi);
    E += (seg.dot(sys.H_xi * seg)).real();
  }
  if (!(E > 0.0)) {
    throw NumericalError("spacetime_support: rest-factor energy must be > 0");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sys.H_gamma);
  if (es.info() != Eigen::Success) {
    throw NumericalError("spacetime_support: H_gamma eigensolver failed");
  }
  SupportGrid grid;
  grid.t_grid = t_grid;
  grid.q_grid = q_grid;
  grid.weights = Eigen::MatrixXd::Zero(q_grid.size(), t_grid.size());
  std::vector<gcs::CoherentState> columns;
  columns.reserve(t_grid.size());
  for (double t : t_grid) {
    const DiskPoint xi =
        gcs::halfplane_to_disk(HalfPlanePoint(J * t, E / J));
    columns.push_back(gcs::coherent_state(rep, xi, 1e-9));
  }
  for (std::size_t iq = 0; iq < q_grid.size(); ++iq) {
    // Nearest eigenvalue to the linearized energy m * accel * q.
    const double target = m * accel * q_grid[iq];
    Eigen::Index best = 0;
    (es.eigenvalues().array() - target).abs().minCoeff(&best);
    const Eigen::VectorXcd gamma_vec = es.eigenvectors().col(best);
    for (std::size_t it = 0; it < t_grid.size(); ++it) {
      const Complex z = amplitude(psi, gamma_vec, columns[it]);
      grid.weights(iq, it) = std::norm(z);
    }
  }
  grid.max_weight = grid.weights.maxCoeff();
  grid.marked.assign(q_grid.size(), std::vector<bool>(t_grid.size(), false));
  for (std::size_t iq = 0; iq < q_grid.size(); ++iq) {
    for (std::size_t it = 0; it < t_grid.size(); ++it) {
      grid.marked[iq][it] = grid.weights(iq, it) > threshold;
    }
  }
  return grid;
}

ResonantDemo build_resonant_demo(double K, int d_xi, double J, DiskPoint xi0) {
  if (d_xi < 8) {
    throw ParameterError("build_resonant_demo: d_xi must be >= 8");
  }
  ResonantDemo demo;
  demo.rep = su11::build_rep(K, d_xi - 1, J);
  demo.xi0 = xi0;
  const Eigen::MatrixXcd H_xi = su11::build_H_xi(demo.rep, J).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H_xi);
  if (es.info() != Eigen::Success) {
    throw NumericalError("build_resonant_demo: clock eigensolver failed");
  }
  const gcs::CoherentState cs = gcs::coherent_state(demo.rep, xi0, 1e-9);
  // Two clock levels with the largest coherent weight |<level|xi0>|^2.
  Eigen::Index i_best = 0, i_second = 1;
  double w_best = -1.0, w_second = -1.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double w = std::norm(es.eigenvectors().col(i).dot(cs.coeffs));
    if (w > w_best) {
      w_second = w_best;
      i_second = i_best;
      w_best = w;
      i_best = i;
    } else if (w > w_second) {
      w_second = w;
      i_second = i;
    }
  }
  if (i_second < i_best) std::swap(i_best, i_second);
  demo.matched_levels = {static_cast<int>(i_best),
                         static_cast<int>(i_second)};
  demo.match_count = 2;
  Eigen::MatrixXcd H_gamma = Eigen::MatrixXcd::Zero(2, 2);
  H_gamma(0, 0) = es.eigenvalues()(i_best);
  H_gamma(1, 1) = es.eigenvalues()(i_second);
  demo.sys = build_composite(H_gamma, H_xi);
  GlobalState psi;
  psi.d_gamma = 2;
  psi.d_xi = d_xi;
  psi.amps = Eigen::VectorXcd::Zero(2 * d_xi);
  const double norm = 1.0 / std::sqrt(2.0);
  psi.amps.segment(0, d_xi) = norm * es.eigenvectors().col(i_best);
  psi.amps.segment(d_xi, d_xi) = norm * es.eigenvectors().col(i_second);
  demo.psi = std::move(psi);
  return demo;
}

}  // namespace paw
}  // namespace sbhclock
