// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sbhclock/horizon.hpp"

using namespace sbhclock;
using namespace sbhclock::horizon;

TEST_CASE("geometry: natural units at unit mass") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  CHECK(params.schwarzschild_radius() == doctest::Approx(2.0));
  CHECK(params.surface_gravity() == doctest::Approx(0.25));
  CHECK(hawking_temperature(params) ==
        doctest::Approx(0.039788735772973836).epsilon(1e-15));
  // Geometric identities that hold for every mass.
  for (const double M : {0.5, 1.0, 7.0, 123.0}) {
    const SchwarzschildParams p = SchwarzschildParams::natural(M);
    CHECK(p.schwarzschild_radius() * p.surface_gravity() ==
          doctest::Approx(0.5 * p.c * p.c).epsilon(1e-15));
    CHECK(hawking_temperature(p) ==
          doctest::Approx(p.hbar * p.surface_gravity() / (2.0 * M_PI * p.c))
              .epsilon(1e-15));
  }
}

TEST_CASE("geometry: SI units at one solar mass") {
  const SchwarzschildParams params = SchwarzschildParams::si_units(si::solar_mass);
  CHECK(params.schwarzschild_radius() ==
        doctest::Approx(2954.007736491099).epsilon(1e-12));
  CHECK(hawking_temperature_kelvin(params) ==
        doctest::Approx(6.168677824358303e-08).epsilon(1e-12));
}

TEST_CASE("geometry: mass validation") {
  // No exterior geometry exists for M <= 0, so this is a domain failure.
  CHECK_THROWS_AS(SchwarzschildParams::natural(0.0), DomainError);
  CHECK_THROWS_AS(SchwarzschildParams::natural(-1.0), DomainError);
  CHECK_THROWS_AS(SchwarzschildParams::si_units(-1e30), DomainError);
}

TEST_CASE("radial energy: pinned values outside the horizon") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  // At rest, no angular momentum, r = 2 r_s: h = (m c^2 / 2)(1 - 1/2).
  CHECK(full_radial_hamiltonian(0.0, 4.0, 1.0, 0.0, params) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(full_radial_hamiltonian(0.0, 4.0, 1.0, 2.0, params) ==
        doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(full_radial_hamiltonian(3.0, 4.0, 2.0, 0.0, params) ==
        doctest::Approx(9.0 / 4.0 + 0.5).epsilon(1e-15));
  CHECK_THROWS_AS(full_radial_hamiltonian(0.0, 2.0, 1.0, 0.0, params),
                  DomainError);
  CHECK_THROWS_AS(full_radial_hamiltonian(0.0, 1.0, 1.0, 0.0, params),
                  DomainError);
  CHECK_THROWS_AS(full_radial_hamiltonian(0.0, 4.0, 0.0, 0.0, params),
                  ParameterError);
}

TEST_CASE("near-horizon energy: linear potential with pinned value") {
  CHECK(near_horizon_hamiltonian(1.0, 0.5, 1.0, 0.5) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(near_horizon_hamiltonian(0.0, 0.0, 1.0, 0.25) == 0.0);
  CHECK_THROWS_AS(near_horizon_hamiltonian(0.0, -0.1, 1.0, 0.25), DomainError);
  CHECK_THROWS_AS(near_horizon_hamiltonian(0.0, 0.1, 1.0, 0.0), ParameterError);
}

TEST_CASE("near-horizon energy: first-order tangent to the full form") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  const double rs = params.schwarzschild_radius();
  const double kappa = params.surface_gravity();
  const double m = 1.0;
  // Relative mismatch of the potential terms is O(q / r_s).
  for (const double frac : {1e-6, 1e-4}) {
    const double q = frac * rs;
    const double rest = 0.5 * m * params.c * params.c;
    const double full = full_radial_hamiltonian(0.0, rs + q, m, 0.0, params);
    const double lin = near_horizon_hamiltonian(0.0, q, m, kappa);
    CHECK(std::abs(full - lin) / lin <= 2.0 * frac);
    (void)rest;
  }
}

TEST_CASE("infall integration: energy conservation and horizon floor") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  const double m = 1.0;
  const double q0 = 2e-3 * params.schwarzschild_radius();
  const double kappa = params.surface_gravity();
  const double t_half = std::sqrt(q0 / kappa);

  SUBCASE("short stretch completes with tiny drift") {
    const Trajectory tr =
        integrate_infall(params, m, q0, 0.0, 1.2 * t_half, 1.2 * t_half / 400);
    CHECK(tr.stop == StopReason::completed);
    CHECK(tr.samples.size() == 401);
    CHECK(tr.samples.front().tau == 0.0);
    CHECK(tr.samples.front().q == doctest::Approx(q0));
    CHECK(tr.max_rel_energy_drift <= 1e-10);
    // q is strictly decreasing from rest under an attractive potential.
    for (size_t i = 1; i < tr.samples.size(); ++i) {
      CHECK(tr.samples[i].q < tr.samples[i - 1].q);
    }
  }

  SUBCASE("long stretch stops at the floor instead of crossing") {
    const Trajectory tr =
        integrate_infall(params, m, q0, 0.0, 50.0 * t_half, t_half / 200);
    CHECK(tr.stop == StopReason::horizon_floor);
    CHECK(tr.samples.back().q > 0.0);
    CHECK(tr.samples.back().tau < 50.0 * t_half);
  }

  SUBCASE("step and span validation") {
    // A degenerate step is a failure of the scheme, not of the parameters.
    CHECK_THROWS_AS(integrate_infall(params, m, q0, 0.0, 1.0, 0.0),
                    NumericalError);
    CHECK_THROWS_AS(integrate_infall(params, m, q0, 0.0, -1.0, 0.1),
                    ParameterError);
    CHECK_THROWS_AS(integrate_infall(params, m, -q0, 0.0, 1.0, 0.1),
                    ParameterError);
  }
}

TEST_CASE("infall integration: fourth-order step-size scaling") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  const double m = 1.0;
  const double q0 = 0.05 * params.schwarzschild_radius();
  const double tau_end = 0.8 * std::sqrt(q0 / params.surface_gravity());

  auto q_end = [&](int n) {
    return integrate_infall(params, m, q0, 0.0, tau_end, tau_end / n)
        .samples.back()
        .q;
  };
  const double reference = q_end(16384);
  const double err_coarse = std::abs(q_end(128) - reference);
  const double err_fine = std::abs(q_end(256) - reference);
  REQUIRE(err_fine > 0.0);
  const double order = std::log2(err_coarse / err_fine);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("linear infall: closed form") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  const double kappa = params.surface_gravity();
  const TrajectorySample s = linear_infall(params, 2.0, 1.0, 0.5, 3.0);
  CHECK(s.tau == doctest::Approx(3.0));
  CHECK(s.p == doctest::Approx(0.5 - 2.0 * kappa * 3.0).epsilon(1e-15));
  CHECK(s.q ==
        doctest::Approx(1.0 + 0.5 * 3.0 / 2.0 - kappa * 9.0 / 2.0).epsilon(1e-15));
  CHECK(s.h == doctest::Approx(s.p * s.p / 4.0 + 2.0 * kappa * s.q).epsilon(1e-12));
}

TEST_CASE("linear infall: matches the integrator close to the horizon") {
  const SchwarzschildParams params = SchwarzschildParams::natural(1.0);
  const double m = 1.0;
  const double q0 = 1e-3 * params.schwarzschild_radius();
  const double t_half = std::sqrt(q0 / params.surface_gravity());
  const Trajectory tr =
      integrate_infall(params, m, q0, 0.0, t_half, t_half / 256);
  double max_rel = 0.0;
  for (const TrajectorySample& s : tr.samples) {
    if (s.q < 0.5 * q0) break;
    const TrajectorySample lin = linear_infall(params, m, q0, 0.0, s.tau);
    max_rel = std::max(max_rel, std::abs(s.q - lin.q) / s.q);
  }
  CHECK(max_rel <= 0.01);
}

TEST_CASE("clock correspondence: pullback energy is exact") {
  std::mt19937_64 rng(4242ULL);
  std::uniform_real_distribution<double> uv(-5.0, 5.0);
  std::uniform_real_distribution<double> uw(0.05, 5.0);
  const double m = 1.7, a = 0.9, J = 2.3;
  for (int i = 0; i < 500; ++i) {
    const HalfPlanePoint pt(uv(rng), uw(rng));
    const PhaseSpacePoint ps = clock_to_phase_space(pt, m, a, J);
    const double pulled = ps.p * ps.p / (2.0 * m) + m * a * ps.q;
    CHECK(std::abs(pulled - J * pt.w()) <= 1e-12 * J * pt.w());
  }
  // Large |v| at small w drives the image past the horizon chart.
  CHECK_FALSE(clock_to_phase_space(HalfPlanePoint(100.0, 0.1), m, a, J)
                  .inside_chart);
  CHECK(clock_to_phase_space(HalfPlanePoint(0.0, 1.0), m, a, J).inside_chart);
  CHECK_THROWS_AS(clock_to_phase_space(HalfPlanePoint(0.0, 1.0), 0.0, a, J),
                  ParameterError);
}

TEST_CASE("emergent trajectory: constant energy, floor marking") {
  const double E = 2.0, m = 1.0, a = 0.5;
  const double q_start = E / (m * a);  // 4.0
  const double t_star = std::sqrt(2.0 * q_start / a);  // q crosses zero here
  std::vector<double> ts;
  for (int i = 0; i <= 40; ++i) ts.push_back(1.5 * t_star * i / 40.0);
  const std::vector<EmergentSample> traj = emergent_trajectory(E, m, a, ts);
  REQUIRE(traj.size() == ts.size());
  CHECK(traj.front().q == doctest::Approx(q_start).epsilon(1e-15));
  for (const EmergentSample& s : traj) {
    const double h = s.p * s.p / (2.0 * m) + m * a * s.q;
    CHECK(std::abs(h - E) <= 1e-12 * E);
    CHECK(s.past_floor == (s.q < 0.0));
  }
  CHECK(traj.back().past_floor);
  CHECK_FALSE(traj.front().past_floor);
  CHECK_THROWS_AS(emergent_trajectory(0.0, m, a, ts), ParameterError);
  // An empty sampling is a valid request for an empty trajectory.
  CHECK(emergent_trajectory(E, m, a, {}).empty());
}
