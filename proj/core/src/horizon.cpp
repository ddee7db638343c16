// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/horizon.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sbhclock {
namespace horizon {

namespace {

// Nonpositive mass has no exterior geometry at all, hence DomainError rather
// than ParameterError.
void check_mass(double M, const char* where) {
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw DomainError(std::string(where) + ": mass must be > 0");
  }
}

void check_probe_mass(double m, const char* where) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ParameterError(std::string(where) + ": probe mass must be > 0");
  }
}

}  // namespace

SchwarzschildParams SchwarzschildParams::natural(double M) {
  check_mass(M, "SchwarzschildParams::natural");
  return SchwarzschildParams{M, 1.0, 1.0, 1.0};
}

SchwarzschildParams SchwarzschildParams::si_units(double M_kg) {
  check_mass(M_kg, "SchwarzschildParams::si_units");
  return SchwarzschildParams{M_kg, si::G, si::c, si::hbar};
}

double hawking_temperature(const SchwarzschildParams& params) {
  check_mass(params.M, "hawking_temperature");
  return params.c * params.c * params.c * params.hbar /
         (8.0 * std::numbers::pi * params.G * params.M);
}

double hawking_temperature_kelvin(const SchwarzschildParams& params) {
  return hawking_temperature(params) / si::k_B;
}

double full_radial_hamiltonian(double p, double r, double m, double L,
                               const SchwarzschildParams& params) {
  check_probe_mass(m, "full_radial_hamiltonian");
  const double rs = params.schwarzschild_radius();
  if (!(r > rs)) {
    throw DomainError("full_radial_hamiltonian: r must exceed r_s = " +
                      std::to_string(rs));
  }
  const double c2 = params.c * params.c;
  return p * p / (2.0 * m) +
         0.5 * m * (L * L / (r * r) + c2) * (1.0 - rs / r);
}

double near_horizon_hamiltonian(double p, double q, double m, double kappa) {
  check_probe_mass(m, "near_horizon_hamiltonian");
  if (q < 0.0) {
    throw DomainError("near_horizon_hamiltonian: q must be >= 0");
  }
  if (!(kappa > 0.0)) {
    throw ParameterError("near_horizon_hamiltonian: kappa must be > 0");
  }
  return p * p / (2.0 * m) + m * kappa * q;
}

Trajectory integrate_infall(const SchwarzschildParams& params, double m,
                            double q0, double p0, double tau_end, double dt) {
  check_probe_mass(m, "integrate_infall");
  const double rs = params.schwarzschild_radius();
  if (!(q0 > 0.0)) {
    throw ParameterError("integrate_infall: q0 must be > 0");
  }
  if (!(tau_end > 0.0)) {
    throw ParameterError("integrate_infall: tau_end must be > 0");
  }
  // A nonpositive step breaks the scheme itself, not just a precondition, so
  // it reports as a numerical failure like a non-finite state does.
  if (!(dt > 0.0)) {
    throw NumericalError("integrate_infall: step must be > 0");
  }
  const double c2 = params.c * params.c;
  const double floor = rs * 1e-12;
  // L = 0 flow of the full Hamiltonian in the displacement q = r - rs:
  //   dq/dtau = p / m,  dp/dtau = -(m c^2 / 2) rs / (rs + q)^2.
  auto force = [&](double q) {
    return -0.5 * m * c2 * rs / ((rs + q) * (rs + q));
  };
  auto energy = [&](double q, double p) {
    return p * p / (2.0 * m) + 0.5 * m * c2 * (1.0 - rs / (rs + q));
  };
  Trajectory out;
  const long n_steps = static_cast<long>(std::ceil(tau_end / dt - 1e-9));
  out.samples.reserve(n_steps + 1);
  double q = q0;
  double p = p0;
  double tau = 0.0;
  const double h0 = energy(q, p);
  out.samples.push_back({tau, q, p, h0});
  for (long step = 0; step < n_steps; ++step) {
    const double k1q = p / m;
    const double k1p = force(q);
    const double k2q = (p + 0.5 * dt * k1p) / m;
    const double k2p = force(q + 0.5 * dt * k1q);
    const double k3q = (p + 0.5 * dt * k2p) / m;
    const double k3p = force(q + 0.5 * dt * k2q);
    const double k4q = (p + dt * k3p) / m;
    const double k4p = force(q + dt * k3q);
    q += dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    tau = (step + 1) * dt;
    if (!(std::isfinite(q) && std::isfinite(p))) {
      throw NumericalError("integrate_infall: state became non-finite");
    }
    if (q <= floor) {
      out.stop = StopReason::horizon_floor;
      break;
    }
    const double h = energy(q, p);
    out.samples.push_back({tau, q, p, h});
    out.max_rel_energy_drift = std::max(out.max_rel_energy_drift,
                                        std::abs(h - h0) / std::abs(h0));
  }
  return out;
}

TrajectorySample linear_infall(const SchwarzschildParams& params, double m,
                               double q0, double p0, double tau) {
  check_probe_mass(m, "linear_infall");
  const double kappa = params.surface_gravity();
  const double q = q0 + p0 * tau / m - 0.5 * kappa * tau * tau;
  const double p = p0 - m * kappa * tau;
  const double h = p * p / (2.0 * m) + m * kappa * std::max(q, 0.0);
  return {tau, q, p, h};
}

PhaseSpacePoint clock_to_phase_space(HalfPlanePoint pt, double m, double accel,
                                     double J) {
  check_probe_mass(m, "clock_to_phase_space");
  if (!(accel > 0.0) || !(J > 0.0)) {
    throw ParameterError("clock_to_phase_space: accel and J must be > 0");
  }
  PhaseSpacePoint out;
  out.p = m * accel * pt.v() / J;
  out.q = J * pt.w() / (m * accel) - accel * pt.v() * pt.v() / (2.0 * J * J);
  out.inside_chart = out.q > 0.0;
  return out;
}

std::vector<EmergentSample> emergent_trajectory(double E, double m,
                                                double accel,
                                                const std::vector<double>& ts) {
  check_probe_mass(m, "emergent_trajectory");
  if (!(E > 0.0) || !(accel > 0.0)) {
    throw ParameterError("emergent_trajectory: E and accel must be > 0");
  }
  const double q0 = E / (m * accel);
  std::vector<EmergentSample> out;
  out.reserve(ts.size());
  for (double t : ts) {
    EmergentSample s;
    s.t = t;
    s.p = m * accel * t;
    s.q = q0 - 0.5 * accel * t * t;
    s.past_floor = s.q < 0.0;
    out.push_back(s);
  }
  return out;
}

}  // namespace horizon
}  // namespace sbhclock
