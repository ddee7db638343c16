// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_HORIZON_HPP_
#define SBHCLOCK_HORIZON_HPP_

#include <vector>

#include "sbhclock/types.hpp"

namespace sbhclock {
namespace horizon {

/// CODATA 2018 values, SI units.
namespace si {
inline constexpr double G = 6.67430e-11;          // m^3 kg^-1 s^-2
inline constexpr double c = 299792458.0;          // m s^-1
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double k_B = 1.380649e-23;       // J K^-1
inline constexpr double solar_mass = 1.98892e30;  // kg
}  // namespace si

enum class UnitSystem { natural, si };

/// Mass plus the constants that set the geometry.  Natural units fix
/// G = c = hbar = 1; SI uses the CODATA values above.  Everything downstream
/// reads the constants from here, so both systems flow through one code path.
/// The factories throw DomainError for M <= 0: no exterior geometry exists.
struct SchwarzschildParams {
  double M = 1.0;
  double G = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  static SchwarzschildParams natural(double M);
  static SchwarzschildParams si_units(double M_kg);

  double schwarzschild_radius() const { return 2.0 * G * M / (c * c); }
  /// Surface acceleration; r_s * kappa = c^2 / 2 identically.
  double surface_gravity() const { return c * c * c * c / (4.0 * G * M); }
};

/// Horizon temperature in energy units (k_B = 1): c^3 hbar / (8 pi G M).
/// Equals (hbar / 2 pi c) * surface_gravity.
double hawking_temperature(const SchwarzschildParams& params);

/// Same, divided by k_B; meaningful for SI parameters.
double hawking_temperature_kelvin(const SchwarzschildParams& params);

/// Radial-sector energy of a timelike probe outside the horizon,
///   h = p^2 / 2m + (m/2) (L^2 / r^2 + c^2) (1 - r_s / r),
/// with L the angular momentum per unit mass.  Requires r > r_s.
double full_radial_hamiltonian(double p, double r, double m, double L,
                               const SchwarzschildParams& params);

/// Linearized form in the displacement q = r - r_s >= 0 at L = 0:
///   h = p^2 / 2m + m kappa q.
double near_horizon_hamiltonian(double p, double q, double m, double kappa);

struct TrajectorySample {
  double tau;
  double q;
  double p;
  double h;
};

enum class StopReason { completed, horizon_floor };

struct Trajectory {
  std::vector<TrajectorySample> samples;
  StopReason stop = StopReason::completed;
  double max_rel_energy_drift = 0.0;
};

/// Fixed-step RK4 for the L = 0 radial infall under the full Hamiltonian,
/// tracked in q = r - r_s.  Integration stops early when q falls below
/// r_s * 1e-12 (the numerical horizon floor).  Samples are recorded at every
/// step including the initial condition.  A nonpositive step or a non-finite
/// state reports as NumericalError; the floor stop is a normal status.
Trajectory integrate_infall(const SchwarzschildParams& params, double m,
                            double q0, double p0, double tau_end, double dt);

/// Closed-form trajectory of the linearized Hamiltonian from (q0, p0):
///   p(t) = p0 - m kappa t,  q(t) = q0 + p0 t / m - kappa t^2 / 2.
TrajectorySample linear_infall(const SchwarzschildParams& params, double m,
                               double q0, double p0, double tau);

/// Image of a clock-plane point under the phase-space correspondence
///   p = m a v / J,   q = J w / (m a) - a v^2 / (2 J^2).
/// The pullback energy p^2/2m + m a q equals J w exactly.  inside_chart is
/// false when q <= 0, i.e. the image lies at or past the horizon.
struct PhaseSpacePoint {
  double p = 0.0;
  double q = 0.0;
  bool inside_chart = true;
};

PhaseSpacePoint clock_to_phase_space(HalfPlanePoint pt, double m, double accel,
                                     double J);

/// Free-fall trajectory emerging from the clock correspondence at fixed
/// energy E = m a q(0):
///   p(t) = m a t,   q(t) = q(0) - a t^2 / 2.
/// past_floor marks samples with q < 0.  The energy p^2/2m + m a q stays at
/// E for every t.
struct EmergentSample {
  double t;
  double p;
  double q;
  bool past_floor;
};

std::vector<EmergentSample> emergent_trajectory(double E, double m,
                                                double accel,
                                                const std::vector<double>& ts);

}  // namespace horizon
}  // namespace sbhclock

#endif  // SBHCLOCK_HORIZON_HPP_
