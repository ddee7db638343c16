// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/twomode.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sbhclock/gcs.hpp"

namespace sbhclock {
namespace twomode {

namespace {

// Smallest per-mode cutoff with discarded pair weight <= tol.  The pair
// amplitudes are exactly geometric, so the tail is lambda^(n+1).
int auto_n_cut(double abs_xi, double tol) {
  const double lambda = abs_xi * abs_xi;
  if (lambda == 0.0) return 2;
  const int n = static_cast<int>(std::ceil(std::log(tol) / std::log(lambda)));
  return std::max(n, 2);
}

}  // namespace

void TwoModeConfig::validate() const {
  if (n_pairs < 1) {
    throw ParameterError("TwoModeConfig: n_pairs must be >= 1, got " +
                         std::to_string(n_pairs));
  }
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw ParameterError("TwoModeConfig: J must be > 0");
  }
  if (!(tail_tol > 0.0) || !(tail_tol <= 1e-6)) {
    throw ParameterError("TwoModeConfig: tail_tol must be in (0, 1e-6]");
  }
  if (n_cut != -1 && n_cut < 2) {
    throw ParameterError("TwoModeConfig: n_cut must be -1 (auto) or >= 2");
  }
}

Eigen::SparseMatrix<Complex> pair_hamiltonian(const TwoModeConfig& cfg,
                                              int n_cut) {
  cfg.validate();
  if (n_cut < 2) {
    throw ParameterError("pair_hamiltonian: n_cut must be >= 2");
  }
  const int d = n_cut + 1;
  const double g = cfg.coupling_per_pair();
  const Complex mi(0.0, -1.0);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(3 * d * d);
  auto idx = [d](int na, int nb) { return na * d + nb; };
  for (int na = 0; na < d; ++na) {
    for (int nb = 0; nb < d; ++nb) {
      entries.emplace_back(idx(na, nb), idx(na, nb),
                           Complex(g * (1.0 + na + nb), 0.0));
      if (na + 1 < d && nb + 1 < d) {
        // -i g adag bdag |na,nb> = -i g sqrt((na+1)(nb+1)) |na+1,nb+1>
        const double amp = g * std::sqrt((na + 1.0) * (nb + 1.0));
        entries.emplace_back(idx(na + 1, nb + 1), idx(na, nb), mi * amp);
        // +i g a b |na+1,nb+1> = +i g sqrt((na+1)(nb+1)) |na,nb>
        entries.emplace_back(idx(na, nb), idx(na + 1, nb + 1), -mi * amp);
      }
    }
  }
  Eigen::SparseMatrix<Complex> H(d * d, d * d);
  H.setFromTriplets(entries.begin(), entries.end());
  return H;
}

TwoModePairState two_mode_squeezed(DiskPoint xi, const TwoModeConfig& cfg) {
  cfg.validate();
  const int n_cut = cfg.n_cut == -1
                        ? auto_n_cut(std::abs(xi.value()), cfg.tail_tol)
                        : cfg.n_cut;
  if (cfg.n_cut != -1) {
    const int required = auto_n_cut(std::abs(xi.value()), cfg.tail_tol);
    if (required > n_cut) {
      throw TruncationError("two_mode_squeezed: n_cut " + std::to_string(n_cut) +
                                " too small, need >= " + std::to_string(required),
                            required);
    }
  }
  const int d = n_cut + 1;
  TwoModePairState state;
  state.xi = xi;
  state.n_cut = n_cut;
  state.joint = Eigen::VectorXcd::Zero(d * d);
  const double norm = std::sqrt(1.0 - xi.abs2());
  Complex amp(norm, 0.0);
  for (int n = 0; n < d; ++n) {
    state.joint(n * d + n) = amp;
    amp *= xi.value();
  }
  return state;
}

double pair_energy(const TwoModePairState& state, const TwoModeConfig& cfg) {
  const Eigen::SparseMatrix<Complex> H = pair_hamiltonian(cfg, state.n_cut);
  return state.joint.dot(H * state.joint).real();
}

ThermalState reduce_to_R(const TwoModePairState& state) {
  const int d = state.n_cut + 1;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    for (int np = 0; np < d; ++np) {
      Complex acc(0.0, 0.0);
      for (int b = 0; b < d; ++b) {
        acc += state.joint(n * d + b) * std::conj(state.joint(np * d + b));
      }
      rho(n, np) = acc;
    }
  }
  ThermalState out;
  out.lambda = state.xi.abs2();
  out.Z0 = 1.0 / (1.0 - out.lambda);
  out.purity = (1.0 - out.lambda) / (1.0 + out.lambda);
  out.probs = rho.diagonal().real();
  double off = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int np = 0; np < d; ++np) {
      if (n != np) off = std::max(off, std::abs(rho(n, np)));
    }
  }
  out.max_offdiag = off;
  out.status =
      out.lambda == 0.0 ? ThermalStatus::zero_temperature : ThermalStatus::ok;
  return out;
}

double effective_frequency(DiskPoint xi, const TwoModeConfig& cfg) {
  cfg.validate();
  const double lambda = xi.abs2();
  return cfg.coupling_per_pair() *
         (1.0 - 2.0 * xi.value().imag() / (1.0 + lambda));
}

TemperatureResult effective_temperature(DiskPoint xi,
                                        const TwoModeConfig& cfg) {
  const double omega = effective_frequency(xi, cfg);
  const double lambda = xi.abs2();
  TemperatureResult out;
  if (!(omega > 0.0)) {
    // 1 + lambda - 2 Im(xi) = x^2 + (1-y)^2 > 0 on the open disk; reachable
    // only through rounding at the boundary.
    out.T = 0.0;
    out.status = ThermalStatus::nonpositive_frequency;
    return out;
  }
  if (lambda == 0.0) {
    out.T = 0.0;
    out.status = ThermalStatus::zero_temperature;
    return out;
  }
  out.T = omega / std::log(1.0 / lambda);
  out.status = ThermalStatus::ok;
  return out;
}

double energy_split_residual(DiskPoint xi, const TwoModeConfig& cfg) {
  const double omega = effective_frequency(xi, cfg);
  const TemperatureResult temp = effective_temperature(xi, cfg);
  double coth = 1.0;  // T = 0 limit
  if (temp.T > 0.0) {
    const double z = omega / (2.0 * temp.T);
    coth = 1.0 + 2.0 / std::expm1(2.0 * z);
  }
  const double lhs = omega * cfg.n_pairs * coth;
  const double rhs = gcs::classical_energy(xi, cfg.J);
  return std::abs(lhs - rhs) / rhs;
}

double entropy_of_R(DiskPoint xi) {
  const double lambda = xi.abs2();
  if (lambda == 0.0) return 0.0;
  return -std::log1p(-lambda) - lambda * std::log(lambda) / (1.0 - lambda);
}

ThermalState thermal_report(DiskPoint xi, const TwoModeConfig& cfg) {
  ThermalState out = reduce_to_R(two_mode_squeezed(xi, cfg));
  out.omega = effective_frequency(xi, cfg);
  const TemperatureResult temp = effective_temperature(xi, cfg);
  out.T = temp.T;
  out.status = temp.status;
  out.entropy = entropy_of_R(xi);
  return out;
}

namespace {

double ray_temperature(double r, double angle_rad, const TwoModeConfig& cfg) {
  const DiskPoint xi(std::polar(r, angle_rad));
  return effective_temperature(xi, cfg).T;
}

}  // namespace

std::vector<IsothermPoint> microstate_isotherm(
    double T_target, const TwoModeConfig& cfg,
    const std::vector<double>& angles_deg) {
  cfg.validate();
  if (!(T_target > 0.0) || !std::isfinite(T_target)) {
    throw ParameterError("microstate_isotherm: T_target must be > 0");
  }
  if (angles_deg.empty()) {
    throw ParameterError("microstate_isotherm: empty angle list");
  }
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  constexpr double kRMax = 1.0 - 1e-9;
  // March outward: T -> 0+ as r -> 0, so the first sign change brackets the
  // smallest root.  Geometric steps resolve exponentially small root radii
  // (the real-axis root is exp(-J / 2 N T)); uniform steps cover the
  // approach to the boundary.
  std::vector<double> grid;
  for (double r = 1e-300; r < 0.5; r *= 1.02) grid.push_back(r);
  for (double r = 0.5; r <= kRMax; r += 2.5e-4) grid.push_back(r);
  std::vector<IsothermPoint> points;
  points.reserve(angles_deg.size());
  for (double angle_deg : angles_deg) {
    const double ang = angle_deg * kDegToRad;
    IsothermPoint pt;
    pt.angle_deg = angle_deg;
    double lo = 0.0;  // T(0+) = 0 < T_target
    double hi = 0.0;
    bool bracketed = false;
    for (double r : grid) {
      if (ray_temperature(r, ang, cfg) - T_target >= 0.0) {
        hi = r;
        // lo == 0 means the root radius underflows the grid; treat it as
        // out of numeric range rather than bisecting against r = 0.
        bracketed = lo > 0.0;
        break;
      }
      lo = r;
    }
    if (!bracketed) {
      pt.status = IsothermPointStatus::no_solution;
      points.push_back(pt);
      continue;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((hi - lo) <= 1e-12 * mid) break;
      const double f = ray_temperature(mid, ang, cfg) - T_target;
      if (f >= 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double r_root = 0.5 * (lo + hi);
    pt.xi = std::polar(r_root, ang);
    pt.T = ray_temperature(r_root, ang, cfg);
    pt.residual = std::abs(pt.T - T_target) / T_target;
    pt.status = IsothermPointStatus::converged;
    points.push_back(pt);
  }
  return points;
}

}  // namespace twomode
}  // namespace sbhclock
